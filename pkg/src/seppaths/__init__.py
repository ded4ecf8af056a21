"""Linear-size strongly-separating path systems for arbitrary graphs."""

from .cover import CoverReport, CoverStrategy, cover_edges
from .generators import generate_family
from .graph import (
    EdgeKey,
    Graph,
    GraphError,
    Path,
    PathSystem,
    Role,
    canonical_path,
    delete_vertices,
    edge_key,
    edge_subgraph,
    parse_edge_list,
    serialize_edge_list,
)
from .nested import ChordFamily, ChordKind, PathIndexing, build_chord_classes, index_along_path, thread_chords
from .posa import PosaResult, derived_path, posa_path
from .separator import SeparationCertificate, separate
from .verify import (
    TIMEOUT,
    check_coverage,
    check_strong_separation,
    check_weak_separation,
    exhaustive_min_separator,
    is_valid_path,
)

__version__ = "0.1.0"
