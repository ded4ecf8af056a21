"""Simple undirected graphs over dense integer ids, paths, and path systems.

Vertex ids are ``0..n-1``.  Deleting vertices never renumbers: the removed
ids stay in the id space as isolated vertices, so paths produced on a
subgraph remain valid verbatim in the original graph.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

Path = tuple[int, ...]


class GraphError(ValueError):
    """Raised on malformed graph input or invalid vertex ids."""


class EdgeKey(NamedTuple):
    lo: int
    hi: int


def edge_key(u: int, w: int) -> EdgeKey:
    if u == w:
        raise GraphError(f"self-loop at vertex {u}")
    return EdgeKey(u, w) if u < w else EdgeKey(w, u)


class Graph:
    """Immutable simple undirected graph.

    ``neighbors(v)`` is a sorted tuple; ``has_edge`` uses per-vertex
    frozensets.  Instances are hashable by value.
    """

    __slots__ = ("_adj", "_adjset", "_m", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, w in edges:
            if not (0 <= u < n and 0 <= w < n):
                raise GraphError(f"edge ({u}, {w}) out of range for n={n}")
            if u == w:
                raise GraphError(f"self-loop at vertex {u}")
            sets[u].add(w)
            sets[w].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in sets)
        self._adjset = tuple(frozenset(s) for s in sets)
        self._m = sum(len(s) for s in sets) // 2
        self._hash = None

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._m

    n = vertex_count
    m = edge_count

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adjset[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, w: int) -> bool:
        return 0 <= u < len(self._adj) and w in self._adjset[u]

    def vertices(self) -> range:
        return range(len(self._adj))

    def edges(self) -> Iterator[EdgeKey]:
        """Edges in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for w in nbrs:
                if w > u:
                    yield EdgeKey(u, w)

    def non_isolated(self) -> list[int]:
        return [v for v, nbrs in enumerate(self._adj) if nbrs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


_TOKEN = re.compile(r"\d+")
_VERTEX_HINT = re.compile(r"#\s*vertices:\s*(\d+)\s*$")


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse an edge list: one ``u w`` pair per line, ``#`` starts a comment line.

    The graph has vertex ids ``0..max_id``.  Duplicate and reversed lines
    collapse to one edge.  A ``# vertices: N`` comment (as written by
    :func:`serialize_edge_list`) widens the id space to at least ``N`` so
    trailing isolated vertices survive a round trip.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    edges: set[EdgeKey] = set()
    n = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            hint = _VERTEX_HINT.match(line)
            if hint:
                n = max(n, int(hint.group(1)))
            continue
        parts = line.split()
        if len(parts) != 2 or not all(_TOKEN.fullmatch(p) for p in parts):
            raise GraphError(f"line {lineno}: expected two nonnegative integers, got {line!r}")
        u, w = int(parts[0]), int(parts[1])
        if u == w:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.add(edge_key(u, w))
        n = max(n, u + 1, w + 1)
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    out = [f"# vertices: {g.vertex_count}"]
    out.extend(f"{e.lo} {e.hi}" for e in g.edges())
    return "\n".join(out) + "\n"


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Remove every edge touching ``s``; the id space is preserved."""
    s = set(s)
    for v in s:
        if not 0 <= v < g.vertex_count:
            raise GraphError(f"vertex {v} out of range for n={g.vertex_count}")
    if not s:
        return g
    return Graph(g.vertex_count, (e for e in g.edges() if e.lo not in s and e.hi not in s))


def edge_subgraph(g: Graph, keep: Callable[[EdgeKey], bool]) -> Graph:
    return Graph(g.vertex_count, (e for e in g.edges() if keep(e)))


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def canonical_path(p: Sequence[int]) -> Path:
    p = tuple(p)
    r = p[::-1]
    return p if p <= r else r


def path_edges(p: Sequence[int]) -> list[EdgeKey]:
    return [edge_key(a, b) for a, b in zip(p, p[1:])]


class Role(enum.Enum):
    SINGLE_EDGE = "single_edge"
    COVER = "cover"
    M_THREAD = "m_thread"
    N_THREAD = "n_thread"
    RECURSIVE = "recursive"


@dataclass(frozen=True)
class PathSystem:
    """A family of distinct canonical paths in ``host``, each with a role tag.

    Use :meth:`build` to canonicalize and drop duplicates; the constructor
    only validates.
    """

    host: Graph
    paths: tuple[Path, ...]
    roles: tuple[Role, ...] = field(default=())

    def __post_init__(self):
        if not self.roles:
            object.__setattr__(self, "roles", (Role.COVER,) * len(self.paths))
        if len(self.roles) != len(self.paths):
            raise ValueError("roles and paths differ in length")
        seen = set()
        for p in self.paths:
            if len(p) < 2:
                raise ValueError(f"path {p} has fewer than two vertices")
            if not _valid(self.host, p):
                raise ValueError(f"path {p} is not a simple path of the host graph")
            if p != canonical_path(p):
                raise ValueError(f"path {p} is not in canonical orientation")
            if p in seen:
                raise ValueError(f"duplicate path {p}")
            seen.add(p)

    @classmethod
    def build(
        cls, host: Graph, paths: Iterable[Sequence[int]], roles: Iterable[Role] | None = None
    ) -> "PathSystem":
        paths = list(paths)
        roles = list(roles) if roles is not None else [Role.COVER] * len(paths)
        out: dict[Path, Role] = {}
        for p, r in zip(paths, roles, strict=True):
            out.setdefault(canonical_path(p), r)
        return cls(host, tuple(out), tuple(out.values()))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def with_role(self, role: Role) -> list[Path]:
        return [p for p, r in zip(self.paths, self.roles) if r is role]


def _valid(g: Graph, p: Sequence[int]) -> bool:
    if len(set(p)) != len(p):
        return False
    return all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
