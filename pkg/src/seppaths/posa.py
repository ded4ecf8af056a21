"""Rotation-maximal paths and their set of derived endpoints.

A path ``P = u ... v`` admits an *elementary exchange fixing v* whenever the
mobile end ``u`` has a neighbour ``x`` on ``P`` other than its successor:
drop the edge ``x^- x`` and add ``u x``, which reverses the prefix
``u ... x^-`` and makes ``x^-`` the new mobile end.

:func:`posa_path` alternates greedy extension with a breadth-first closure
over exchanges until no derived endpoint has a neighbour off the path.  At
that fixpoint the derived endpoint set ``S`` satisfies
``N_G(S) ⊆ N_P(S)``, so ``|N_G(S)| <= 2|S|``; this is what the separator
relies on, and it holds without needing a longest path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, Path


class EmptyGraphError(GraphError):
    """posa_path was called on a graph without edges."""


class NotDerivedEndpointError(KeyError):
    pass


@dataclass(frozen=True)
class Exchange:
    """One elementary exchange: mobile end ``source`` rotates about ``pivot``.

    The new mobile end is the vertex that preceded ``pivot``.
    """

    source: int
    pivot: int
    new_end: int

    @property
    def removed_edge(self) -> tuple[int, int]:
        return (self.new_end, self.pivot)

    @property
    def added_edge(self) -> tuple[int, int]:
        return (self.source, self.pivot)


@dataclass(frozen=True)
class PosaResult:
    path: Path
    fixed_end: int
    endpoints: frozenset[int]
    parents: dict[int, Exchange | None]
    boundary: frozenset[int]

    @property
    def mobile_end(self) -> int:
        return self.path[0]


def _rotate(q: list[int], pos_of_pivot: int) -> list[int]:
    # q = x ... pivot^- pivot ... v  ->  pivot^- ... x pivot ... v
    return q[pos_of_pivot - 1 :: -1] + q[pos_of_pivot:]


def _extend_head(g: Graph, path: list[int], on: set[int]) -> list[int]:
    head: list[int] = []
    end = path[0]
    while True:
        nxt = next((y for y in g.neighbors(end) if y not in on), None)
        if nxt is None:
            break
        head.append(nxt)
        on.add(nxt)
        end = nxt
    return head[::-1] + path if head else path


def _extend_tail(g: Graph, path: list[int], on: set[int]) -> list[int]:
    end = path[-1]
    while True:
        nxt = next((y for y in g.neighbors(end) if y not in on), None)
        if nxt is None:
            return path
        path.append(nxt)
        on.add(nxt)
        end = nxt


def posa_path(g: Graph, initial: Sequence[int] | None = None) -> PosaResult:
    """Rotation-maximal path of ``g`` with its derived endpoint set.

    Without ``initial`` the search starts from the edge between the
    smallest non-isolated vertex and its smallest neighbour; the tail is
    extended first, then the head, and the tail becomes the fixed end.
    Ties are always broken by smallest vertex id.
    """
    if g.edge_count == 0:
        raise EmptyGraphError("graph has no edges")
    if initial is None:
        u0 = next(v for v in g.vertices() if g.degree(v))
        path = [u0, g.neighbors(u0)[0]]
    else:
        path = list(initial)
        if len(path) < 2 or len(set(path)) != len(path) or not all(
            g.has_edge(a, b) for a, b in zip(path, path[1:])
        ):
            raise GraphError(f"initial path {initial} is not a path of the graph")
    on = set(path)

    while True:
        path = _extend_tail(g, path, on)
        path = _extend_head(g, path, on)
        grown = _closure(g, path, on)
        if isinstance(grown, list):
            path = grown
            continue
        parents = grown
        break

    endpoints = frozenset(parents)
    boundary = frozenset(y for x in endpoints for y in g.neighbors(x)) - endpoints
    return PosaResult(
        path=tuple(path),
        fixed_end=path[-1],
        endpoints=endpoints,
        parents=parents,
        boundary=boundary,
    )


def _closure(g: Graph, path: list[int], on: set[int]) -> list[int] | dict[int, Exchange | None]:
    """BFS over exchanges fixing ``path[-1]``.

    Returns the parent map at the fixpoint, or a strictly longer path as
    soon as some derived endpoint can be extended.
    """
    parents: dict[int, Exchange | None] = {path[0]: None}
    queue = deque([path])
    while queue:
        q = queue.popleft()
        x = q[0]
        nbrs = g.neighbors(x)
        if any(y not in on for y in nbrs):
            return _extend_head(g, q, on)
        pos = {w: i for i, w in enumerate(q)}
        for y in nbrs:
            i = pos[y]
            if i == 1:
                continue
            z = q[i - 1]
            if z not in parents:
                parents[z] = Exchange(source=x, pivot=y, new_end=z)
                queue.append(_rotate(q, i))
    return parents


def derived_path(r: PosaResult, x: int) -> Path:
    """Replay the recorded exchanges that first produced endpoint ``x``."""
    if x not in r.parents:
        raise NotDerivedEndpointError(f"{x} is not a derived endpoint")
    chain: list[Exchange] = []
    cur = x
    while (ex := r.parents[cur]) is not None:
        chain.append(ex)
        cur = ex.source
    q = list(r.path)
    for ex in reversed(chain):
        assert q[0] == ex.source
        q = _rotate(q, q.index(ex.pivot))
        assert q[0] == ex.new_end
    return tuple(q)


def path_neighborhood(path: Sequence[int], s: set[int] | frozenset[int]) -> set[int]:
    """Vertices outside ``s`` adjacent along ``path`` to a vertex of ``s``."""
    out = set()
    for a, b in zip(path, path[1:]):
        if a in s and b not in s:
            out.add(b)
        elif b in s and a not in s:
            out.add(a)
    return out
