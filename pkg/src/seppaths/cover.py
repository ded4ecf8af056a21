"""Edge covers by paths.

Three strategies are built in:

``GREEDY``
    Peel maximal paths greedily; edge-disjoint, no worst-case guarantee.
``RECURSIVE_MK``
    Rotation-maximal path, then thread every M-class of the edges meeting
    the endpoint set ``S`` (path edges included), then recurse on the graph
    without ``S``.  Each level uses fewer than ``2n' <= 6|S|`` paths, so the
    total is at most six times the number of non-isolated vertices.
``BEST_OF``
    Run both and keep the smaller family (ties go to ``GREEDY``).

Any callable ``Graph -> iterable of paths`` may be passed instead, e.g. a
path decomposition with a sharper guarantee.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .graph import Graph, Path, PathSystem, delete_vertices, edge_key
from .nested import ChordKind, build_chord_classes, index_along_path, thread_chords
from .posa import posa_path


class CoverStrategy(enum.Enum):
    GREEDY = "greedy"
    RECURSIVE_MK = "mk"
    BEST_OF = "best"

    @classmethod
    def parse(cls, name: "str | CoverStrategy") -> "CoverStrategy":
        if isinstance(name, cls):
            return name
        for s in cls:
            if name.lower() in (s.value, s.name.lower()):
                return s
        raise ValueError(f"unknown cover strategy {name!r}")


CoverFunction = Callable[[Graph], Iterable[Sequence[int]]]
StrategyLike = Union[CoverStrategy, str, CoverFunction]


@dataclass(frozen=True)
class CoverReport:
    system: PathSystem
    strategy: str
    guaranteed_bound: int | None
    edge_disjoint: bool

    @property
    def count(self) -> int:
        return len(self.system)


def greedy_cover(f: Graph) -> list[Path]:
    remaining = [set(f.neighbors(v)) for v in f.vertices()]
    paths: list[Path] = []
    v = 0
    while True:
        while v < len(remaining) and not remaining[v]:
            v += 1
        if v == len(remaining):
            return paths
        path = [v]
        on = {v}
        for end_index in (-1, 0):
            while True:
                end = path[end_index]
                nxt = min((y for y in remaining[end] if y not in on), default=None)
                if nxt is None:
                    break
                remaining[end].discard(nxt)
                remaining[nxt].discard(end)
                on.add(nxt)
                if end_index == -1:
                    path.append(nxt)
                else:
                    path.insert(0, nxt)
        paths.append(tuple(path))


def recursive_mk_cover(f: Graph) -> list[Path]:
    paths: list[Path] = []
    cur = f
    while cur.edge_count:
        r = posa_path(cur)
        s = r.endpoints
        h_edges = {edge_key(x, y) for x in s for y in cur.neighbors(x)}
        hverts = {v for e in h_edges for v in e}
        idx = index_along_path(r.path, hverts)
        for fam in build_chord_classes(h_edges, idx, ChordKind.M):
            paths.append(thread_chords(r.path, fam, idx))
        cur = delete_vertices(cur, s)
    return paths


def cover_edges(f: Graph, strategy: StrategyLike = CoverStrategy.BEST_OF) -> CoverReport:
    """Cover every edge of ``f`` by paths lying inside ``f``."""
    if callable(strategy) and not isinstance(strategy, CoverStrategy):
        paths = list(strategy(f))
        system = PathSystem.build(f, paths)
        return CoverReport(system, getattr(strategy, "__name__", "custom"), None, False)

    strategy = CoverStrategy.parse(strategy)
    mk_bound = 6 * len(f.non_isolated())
    if strategy is CoverStrategy.GREEDY:
        return CoverReport(PathSystem.build(f, greedy_cover(f)), strategy.value, None, True)
    if strategy is CoverStrategy.RECURSIVE_MK:
        system = PathSystem.build(f, recursive_mk_cover(f))
        if len(system) > mk_bound:
            raise AssertionError(f"M-class cover used {len(system)} > {mk_bound} paths")
        return CoverReport(system, strategy.value, mk_bound, False)

    greedy = cover_edges(f, CoverStrategy.GREEDY)
    mk = cover_edges(f, CoverStrategy.RECURSIVE_MK)
    best = greedy if greedy.count <= mk.count else mk
    return CoverReport(best.system, strategy.value, mk_bound, best.edge_disjoint)
