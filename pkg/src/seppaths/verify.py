"""Independent checkers and an exhaustive minimum-separator oracle.

Every path is turned into a bitmask over the host's edges (edge ``t`` in
``g.edges()`` order is bit ``t``).  A family strongly separates ``g`` iff
for every edge ``e`` the intersection of the masks of paths through ``e``
is exactly ``{e}``; it weakly separates iff no two edges lie on exactly
the same set of paths.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import EdgeKey, Graph, Path, PathSystem, canonical_path, edge_key


class InvalidPathError(ValueError):
    pass


class ViolationReason(enum.Enum):
    NO_PATH_WITH_E_WITHOUT_F = "no path contains e and omits f"
    NO_PATH_WITH_EXACTLY_ONE = "no path contains exactly one of e, f"


@dataclass(frozen=True)
class SeparationViolation:
    contained_edge: EdgeKey
    excluded_edge: EdgeKey
    reason: ViolationReason = ViolationReason.NO_PATH_WITH_E_WITHOUT_F


def is_valid_path(g: Graph, p: Sequence[int]) -> bool:
    if len(p) < 2 or len(set(p)) != len(p):
        return False
    return all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def _paths_of(sys: PathSystem | Iterable[Sequence[int]]) -> list[Sequence[int]]:
    return list(sys.paths if isinstance(sys, PathSystem) else sys)


def edge_index(g: Graph) -> dict[EdgeKey, int]:
    return {e: t for t, e in enumerate(g.edges())}


def path_masks(g: Graph, paths: Iterable[Sequence[int]], index: dict[EdgeKey, int] | None = None) -> list[int]:
    index = edge_index(g) if index is None else index
    masks = []
    for p in paths:
        if not is_valid_path(g, p):
            raise InvalidPathError(f"{tuple(p)} is not a simple path of the graph")
        mask = 0
        for a, b in zip(p, p[1:]):
            mask |= 1 << index[edge_key(a, b)]
        masks.append(mask)
    return masks


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def check_strong_separation(sys: PathSystem | Iterable[Sequence[int]], g: Graph) -> list[SeparationViolation]:
    """All ordered pairs ``(e, f)`` with no path containing ``e`` but not ``f``."""
    edges = list(g.edges())
    index = {e: t for t, e in enumerate(edges)}
    masks = path_masks(g, _paths_of(sys), index)
    full = (1 << len(edges)) - 1
    inter = [full] * len(edges)
    for mask in masks:
        for t in _bits(mask):
            inter[t] &= mask
    out = []
    for t, e in enumerate(edges):
        for u in _bits(inter[t] & ~(1 << t)):
            out.append(SeparationViolation(e, edges[u]))
    return out


def check_weak_separation(sys: PathSystem | Iterable[Sequence[int]], g: Graph) -> list[SeparationViolation]:
    """All unordered pairs ``{e, f}`` lying on exactly the same paths, as ``(e, f)`` with ``e < f``."""
    edges = list(g.edges())
    index = {e: t for t, e in enumerate(edges)}
    masks = path_masks(g, _paths_of(sys), index)
    signature = [0] * len(edges)
    for k, mask in enumerate(masks):
        for t in _bits(mask):
            signature[t] |= 1 << k
    groups: dict[int, list[int]] = {}
    for t, sig in enumerate(signature):
        groups.setdefault(sig, []).append(t)
    out = []
    for members in groups.values():
        for a, b in combinations(members, 2):
            out.append(SeparationViolation(edges[a], edges[b], ViolationReason.NO_PATH_WITH_EXACTLY_ONE))
    out.sort(key=lambda v: (v.contained_edge, v.excluded_edge))
    return out


def check_coverage(sys: PathSystem | Iterable[Sequence[int]], g: Graph) -> set[EdgeKey]:
    edges = list(g.edges())
    covered = 0
    for mask in path_masks(g, _paths_of(sys)):
        covered |= mask
    return {e for t, e in enumerate(edges) if not covered >> t & 1}


# exhaustive oracle -----------------------------------------------------------


class OracleStatus(enum.Enum):
    TIMEOUT = "timeout"


TIMEOUT = OracleStatus.TIMEOUT


def all_simple_paths(g: Graph) -> list[Path]:
    """Every simple path with at least one edge, once, in canonical form, sorted."""
    out: list[Path] = []

    def grow(path: list[int], on: set[int]) -> None:
        if len(path) >= 2 and path[0] < path[-1]:
            out.append(tuple(path))
        for y in g.neighbors(path[-1]):
            if y not in on:
                path.append(y)
                on.add(y)
                grow(path, on)
                on.discard(y)
                path.pop()

    for v in g.vertices():
        grow([v], {v})
    out.sort()
    return out


def _constraint_masks(g: Graph, paths: list[Path], mode: str) -> tuple[list[int], int]:
    """Per path, the bitmask of separation constraints it satisfies."""
    m = g.edge_count
    pmasks = path_masks(g, paths)
    if mode == "strong":
        # (e, e) stands for "e is covered"; implied by the pairs once m >= 2
        pairs = [(e, f) for e in range(m) for f in range(m)]
    elif mode == "weak":
        pairs = [(e, f) for e in range(m) for f in range(e + 1, m)]
    else:
        raise ValueError(f"mode must be 'strong' or 'weak', not {mode!r}")
    out = []
    for pm in pmasks:
        c = 0
        for k, (e, f) in enumerate(pairs):
            has_e, has_f = pm >> e & 1, pm >> f & 1
            if (mode == "strong" and has_e and (e == f or not has_f)) or (mode == "weak" and has_e != has_f):
                c |= 1 << k
        out.append(c)
    return out, (1 << len(pairs)) - 1


class _Deadline(Exception):
    pass


def exhaustive_min_separator(
    g: Graph,
    mode: str = "strong",
    max_paths: int | None = None,
    max_millis: int | None = None,
) -> tuple[int, PathSystem] | OracleStatus:
    """Smallest family of paths that strongly (or weakly) separates ``g``.

    In strong mode the family must also cover every edge, which only
    matters for single-edge graphs.

    Iterative deepening over the family size; at each node the branching
    constraint is the unsatisfied one with fewest candidate paths, and
    candidates dominated by another (on the unsatisfied constraints) are
    dropped.  Returns ``TIMEOUT`` if the answer would exceed ``max_paths``
    or the search runs longer than ``max_millis``.
    """
    deadline = None if max_millis is None else time.monotonic() + max_millis / 1000
    paths = all_simple_paths(g)
    cmasks, universe = _constraint_masks(g, paths, mode)
    if universe == 0:
        return 0, PathSystem(g, ())

    n_constraints = universe.bit_length()
    # per constraint, bitmask over path indices of the paths satisfying it
    by_constraint = [0] * n_constraints
    for k, cm in enumerate(cmasks):
        for c in _bits(cm):
            by_constraint[c] |= 1 << k
    if not all(by_constraint):
        raise AssertionError("some constraint is satisfied by no path")
    ticks = 0

    def search(uncovered: int, budget: int, allowed: int, chosen: list[int]) -> list[int] | None:
        # ``allowed`` excludes paths already ruled out by earlier siblings
        nonlocal ticks
        if uncovered == 0:
            return list(chosen)
        if budget == 0:
            return None
        ticks += 1
        if deadline is not None and ticks % 16 == 0 and time.monotonic() > deadline:
            raise _Deadline
        biggest = max((cmasks[k] & uncovered).bit_count() for k in _bits(allowed))
        if biggest == 0 or -(-uncovered.bit_count() // biggest) > budget:
            return None
        best = None
        for c in _bits(uncovered):
            cands = by_constraint[c] & allowed
            if cands == 0:
                return None
            if best is None or cands.bit_count() < best.bit_count():
                best = cands
        restricted: dict[int, int] = {}
        for k in _bits(best):
            restricted.setdefault(cmasks[k] & uncovered, k)
        options = sorted(restricted.items(), key=lambda kv: -kv[0].bit_count())
        kept: list[tuple[int, int]] = []
        for mask, k in options:
            if not any(mask | other == other for other, _ in kept):
                kept.append((mask, k))
        for mask, k in kept:
            chosen.append(k)
            found = search(uncovered & ~mask, budget - 1, allowed & ~(1 << k), chosen)
            chosen.pop()
            if found is not None:
                return found
            allowed &= ~(1 << k)
        return None

    cap = max_paths if max_paths is not None else len(paths)
    try:
        for size in range(1, cap + 1):
            found = search(universe, size, (1 << len(paths)) - 1, [])
            if found is not None:
                system = PathSystem.build(g, [paths[k] for k in found])
                return size, system
    except _Deadline:
        return TIMEOUT
    return TIMEOUT


def brute_force_min_separator(g: Graph, mode: str = "strong", limit: int | None = None) -> int | None:
    """Plain enumeration of all families by increasing size; tiny graphs only.

    Shares nothing with the oracle above except path enumeration; each family
    is judged by :func:`check_strong_separation` / :func:`check_weak_separation`.
    """
    if mode == "strong":
        def check(fam, g):
            return check_strong_separation(fam, g) or check_coverage(fam, g)
    else:
        check = check_weak_separation
    if not check([], g):
        return 0
    paths = _enumerate_paths_naively(g)
    top = len(paths) if limit is None else limit
    for size in range(1, top + 1):
        for family in combinations(paths, size):
            if not check(family, g):
                return size
    return None


def _enumerate_paths_naively(g: Graph) -> list[Path]:
    # permutations of vertex subsets, kept when consecutive pairs are edges
    from itertools import permutations

    seen = set()
    for r in range(2, g.vertex_count + 1):
        for perm in permutations(g.vertices(), r):
            if all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                seen.add(canonical_path(perm))
    return sorted(seen)
