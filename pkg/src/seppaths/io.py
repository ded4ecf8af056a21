"""Text formats: path-system documents and Graphviz DOT export.

A path-system document is::

    n m k
    <k lines, each a space-separated vertex sequence>
    key=value          (zero or more certificate lines)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import Graph, GraphError, Path, PathSystem


@dataclass
class PathSystemDocument:
    n: int
    m: int
    paths: list[Path]
    certificate: dict[str, str] = field(default_factory=dict)


def format_path_system(system: PathSystem, certificate: Mapping[str, object] | None = None) -> str:
    g = system.host
    lines = [f"{g.vertex_count} {g.edge_count} {len(system)}"]
    lines.extend(" ".join(map(str, p)) for p in system.paths)
    for key, value in (certificate or {}).items():
        lines.append(f"{key}={value}")
    return "\n".join(lines) + "\n"


def parse_path_system(text: str) -> PathSystemDocument:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty path-system document")
    try:
        n, m, k = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise GraphError(f"bad header line {lines[0]!r}; expected 'n m k'") from exc
    if len(lines) < 1 + k:
        raise GraphError(f"header promises {k} paths, found {len(lines) - 1} lines")
    paths = []
    for lineno, line in enumerate(lines[1 : 1 + k], start=2):
        try:
            paths.append(tuple(int(t) for t in line.split()))
        except ValueError as exc:
            raise GraphError(f"line {lineno}: bad vertex sequence {line!r}") from exc
    cert = {}
    for line in lines[1 + k :]:
        key, sep, value = line.partition("=")
        if not sep:
            raise GraphError(f"expected key=value, got {line!r}")
        cert[key.strip()] = value.strip()
    return PathSystemDocument(n, m, paths, cert)


def to_dot(g: Graph, paths: Sequence[Sequence[int]] = (), name: str = "G") -> str:
    """Undirected DOT: host edges in grey, then each path in colour ``i % 12 + 1``
    of the ``set312`` scheme (parallel edges, so overlaps stay visible)."""
    out = [f"graph {name} {{", "  node [shape=circle];", '  edge [colorscheme=set312];']
    out.extend(f"  {v};" for v in g.vertices())
    out.extend(f'  {e.lo} -- {e.hi} [color="gray80"];' for e in g.edges())
    for i, p in enumerate(paths):
        color = i % 12 + 1
        for a, b in zip(p, p[1:]):
            out.append(f'  {a} -- {b} [color={color}, penwidth=2, label="{i}"];')
    out.append("}")
    return "\n".join(out) + "\n"
