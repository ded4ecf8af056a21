"""Linear-size strongly-separating path systems.

Each level of the peeling works on the current graph ``G``:

1. ``posa_path`` gives a path ``P`` and an endpoint set ``S`` with every
   neighbour of ``S`` on ``P``.
2. ``H`` is the set of edges meeting ``S``; ``P_S`` its edges on ``P``;
   ``H'`` the rest of ``H``; ``G'`` is ``G`` without ``S``.
3. Emit every ``P_S`` edge as a one-edge path, a path cover of ``H'``
   (paths inside ``H'``), and one threaded path per nonempty M- and
   N-class of ``H'`` indexed along ``P``.
4. Continue on ``G'``.

Why the union separates: ``G'`` edges are separated by the deeper levels,
whose paths avoid ``H``; a ``P_S`` edge by its own one-edge path; an ``H'``
edge from anything outside ``H'`` by its cover path; two ``H'`` edges by
the thread of whichever class tells them apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .cover import CoverStrategy, StrategyLike, cover_edges
from .graph import EdgeKey, Graph, Path, PathSystem, Role, delete_vertices, edge_key, path_edges
from .nested import ChordKind, build_chord_classes, index_along_path, thread_chords
from .posa import PosaResult, posa_path


@dataclass(frozen=True)
class LevelDecomposition:
    s: frozenset[int]
    path_p: Path
    h_edges: frozenset[EdgeKey]
    ps_edges: frozenset[EdgeKey]
    hprime_edges: frozenset[EdgeKey]
    n_prime: int
    gprime: Graph


@dataclass(frozen=True)
class Level:
    """One peeling level: its decomposition and the four emitted families."""

    decomposition: LevelDecomposition
    posa: PosaResult
    single_edges: tuple[Path, ...]
    cover: tuple[Path, ...]
    m_threads: tuple[Path, ...]
    n_threads: tuple[Path, ...]
    cover_strategy: str
    cover_guarantee: int | None

    @property
    def emitted(self) -> int:
        return len(self.single_edges) + len(self.cover) + len(self.m_threads) + len(self.n_threads)


@dataclass(frozen=True)
class LevelRecord:
    s_size: int
    n_prime: int
    count_ps: int
    count_d: int
    count_m_threads: int
    count_n_threads: int
    cover_strategy: str
    cover_guarantee: int | None

    @property
    def total(self) -> int:
        return self.count_ps + self.count_d + self.count_m_threads + self.count_n_threads

    @property
    def within_19_budget(self) -> bool:
        return self.count_d <= (2 * self.n_prime) // 3


@dataclass(frozen=True)
class SeparationCertificate:
    levels: tuple[LevelRecord, ...]
    total_paths: int
    n: int
    duplicates: int = 0
    bound_19_satisfied: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "bound_19_satisfied", all(lv.within_19_budget for lv in self.levels)
        )

    @property
    def realized_ratio(self) -> Fraction:
        return Fraction(self.total_paths, self.n) if self.n else Fraction(0)

    @property
    def deduplicated_total(self) -> int:
        return self.total_paths - self.duplicates

    def violations(self) -> list[str]:
        """Budget inequalities that fail; empty for every valid run."""
        bad = []
        for t, lv in enumerate(self.levels):
            if lv.count_ps > 2 * lv.s_size:
                bad.append(f"level {t}: |P_S|={lv.count_ps} > 2|S|={2 * lv.s_size}")
            if lv.count_m_threads > 2 * lv.n_prime:
                bad.append(f"level {t}: M threads {lv.count_m_threads} > 2n'={2 * lv.n_prime}")
            if lv.count_n_threads > 3 * lv.n_prime:
                bad.append(f"level {t}: N threads {lv.count_n_threads} > 3n'={3 * lv.n_prime}")
            if lv.n_prime > 3 * lv.s_size:
                bad.append(f"level {t}: n'={lv.n_prime} > 3|S|={3 * lv.s_size}")
        if sum(lv.s_size for lv in self.levels) > self.n:
            bad.append("sum of |S| over levels exceeds n")
        if self.total_paths != sum(lv.total for lv in self.levels):
            bad.append("total_paths differs from the sum of level counts")
        if self.bound_19_satisfied and self.total_paths > 19 * self.n:
            bad.append(f"total {self.total_paths} > 19n={19 * self.n} despite the cover budget")
        return bad

    def as_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "levels": len(self.levels),
            "total_paths": self.total_paths,
            "deduplicated": self.deduplicated_total,
            "duplicates": self.duplicates,
            "ratio": f"{float(self.realized_ratio):.4f}",
            "bound19": str(self.bound_19_satisfied).lower(),
            "sum_s": sum(lv.s_size for lv in self.levels),
            "max_n_prime": max((lv.n_prime for lv in self.levels), default=0),
            "count_ps": sum(lv.count_ps for lv in self.levels),
            "count_d": sum(lv.count_d for lv in self.levels),
            "count_m": sum(lv.count_m_threads for lv in self.levels),
            "count_n": sum(lv.count_n_threads for lv in self.levels),
        }


def decompose_level(g: Graph, r: PosaResult) -> LevelDecomposition:
    s = r.endpoints
    h_edges = frozenset(edge_key(x, y) for x in s for y in g.neighbors(x))
    p_edges = set(path_edges(r.path))
    ps_edges = frozenset(e for e in h_edges if e in p_edges)
    hverts = {v for e in h_edges for v in e}
    return LevelDecomposition(
        s=s,
        path_p=r.path,
        h_edges=h_edges,
        ps_edges=ps_edges,
        hprime_edges=h_edges - ps_edges,
        n_prime=len(hverts),
        gprime=delete_vertices(g, s),
    )


def peel(g: Graph, cover_strategy: StrategyLike = CoverStrategy.BEST_OF) -> Iterator[Level]:
    """Yield the levels of the construction; iterative, so depth is unbounded."""
    cur = g
    while cur.edge_count:
        r = posa_path(cur)
        dec = decompose_level(cur, r)
        hverts = {v for e in dec.h_edges for v in e}
        idx = index_along_path(r.path, hverts)

        hprime = Graph(g.vertex_count, dec.hprime_edges)
        report = cover_edges(hprime, cover_strategy)
        m_threads = [thread_chords(r.path, fam, idx)
                     for fam in build_chord_classes(dec.hprime_edges, idx, ChordKind.M)]
        n_threads = [thread_chords(r.path, fam, idx)
                     for fam in build_chord_classes(dec.hprime_edges, idx, ChordKind.N)]
        yield Level(
            decomposition=dec,
            posa=r,
            single_edges=tuple(tuple(e) for e in sorted(dec.ps_edges)),
            cover=report.system.paths,
            m_threads=tuple(m_threads),
            n_threads=tuple(n_threads),
            cover_strategy=report.strategy,
            cover_guarantee=report.guaranteed_bound,
        )
        cur = dec.gprime


def separate(
    g: Graph, cover_strategy: StrategyLike = CoverStrategy.BEST_OF
) -> tuple[PathSystem, SeparationCertificate]:
    """A strongly-separating path system of ``g`` and its size certificate.

    The certificate counts paths before deduplication; paths emitted twice
    (possible across families) appear once in the system.
    """
    paths: list[Path] = []
    roles: list[Role] = []
    records: list[LevelRecord] = []
    for lv in peel(g, cover_strategy):
        for family, role in (
            (lv.single_edges, Role.SINGLE_EDGE),
            (lv.cover, Role.COVER),
            (lv.m_threads, Role.M_THREAD),
            (lv.n_threads, Role.N_THREAD),
        ):
            paths.extend(family)
            roles.extend([role] * len(family))
        records.append(
            LevelRecord(
                s_size=len(lv.decomposition.s),
                n_prime=lv.decomposition.n_prime,
                count_ps=len(lv.single_edges),
                count_d=len(lv.cover),
                count_m_threads=len(lv.m_threads),
                count_n_threads=len(lv.n_threads),
                cover_strategy=lv.cover_strategy,
                cover_guarantee=lv.cover_guarantee,
            )
        )
    system = PathSystem.build(g, paths, roles)
    cert = SeparationCertificate(
        levels=tuple(records),
        total_paths=len(paths),
        n=g.vertex_count,
        duplicates=len(paths) - len(system),
    )
    return system, cert
