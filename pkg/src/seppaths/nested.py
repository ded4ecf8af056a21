"""Chord classes over a path indexing and threading them into single paths.

Vertices of a subgraph ``H`` lying on a path ``P`` are numbered
``1..n'`` in the order they occur along ``P``.  An edge ``v_i v_j``
(``i < j``) falls in M-class ``i + j`` and in N-class ``i + 2j``.  Within a
class the chords are strictly nested with respect to ``P``, so one simple
path can use all of them together with segments of ``P`` between them.
Two distinct edges never share both their M-class and their N-class.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import EdgeKey, GraphError, Path


class VertexOffPathError(GraphError):
    pass


class NotNestedError(ValueError):
    pass


class ChordKind(enum.Enum):
    M = "M"
    N = "N"


@dataclass(frozen=True)
class PathIndexing:
    order: tuple[int, ...]
    position: dict[int, int]
    p_position: dict[int, int]

    @property
    def n_prime(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class ChordFamily:
    kind: ChordKind
    k: int
    chords: tuple[tuple[int, int], ...]


def index_along_path(p: Sequence[int], hverts: Iterable[int]) -> PathIndexing:
    p_position = {v: i for i, v in enumerate(p)}
    hverts = set(hverts)
    missing = hverts - p_position.keys()
    if missing:
        raise VertexOffPathError(f"vertices {sorted(missing)} are not on the path")
    order = tuple(sorted(hverts, key=p_position.__getitem__))
    position = {v: i for i, v in enumerate(order, start=1)}
    return PathIndexing(order, position, p_position)


def class_index(i: int, j: int, kind: ChordKind) -> int:
    return i + j if kind is ChordKind.M else i + 2 * j


def build_chord_classes(
    hprime_edges: Iterable[tuple[int, int]], idx: PathIndexing, kind: ChordKind
) -> list[ChordFamily]:
    """Nonempty classes in increasing ``k``; chords as ``(x, y)`` with
    ``x`` earlier on the path, sorted by increasing index of ``x``."""
    classes: dict[int, list[tuple[int, int, int, int]]] = defaultdict(list)
    for a, b in hprime_edges:
        try:
            i, j = idx.position[a], idx.position[b]
        except KeyError as exc:
            raise VertexOffPathError(f"edge ({a}, {b}) has an unindexed endpoint") from exc
        if i > j:
            i, j, a, b = j, i, b, a
        classes[class_index(i, j, kind)].append((i, j, a, b))
    out = []
    for k in sorted(classes):
        chords = sorted(classes[k])
        out.append(ChordFamily(kind, k, tuple((a, b) for _, _, a, b in chords)))
    return out


def check_nested(fam: ChordFamily, p_position: dict[int, int]) -> None:
    """Raise NotNestedError unless each chord lies strictly inside the previous."""
    prev = None
    for x, y in fam.chords:
        px, py = p_position[x], p_position[y]
        if not px < py:
            raise NotNestedError(f"chord ({x}, {y}) is not oriented along the path")
        if prev is not None and not (prev[0] < px < py < prev[1]):
            raise NotNestedError(f"chord ({x}, {y}) is not strictly inside the previous chord")
        prev = (px, py)


def thread_chords(p: Sequence[int], fam: ChordFamily, idx: PathIndexing) -> Path:
    """One simple path through every chord of ``fam`` plus segments of ``p``.

    Starts with the innermost chord traversed ``y -> x``; then, working
    outward, walks along ``p`` from the current free end to the same-side
    endpoint of the next chord and crosses that chord.
    """
    if not fam.chords:
        raise ValueError("empty chord family")
    pp = idx.p_position
    check_nested(fam, pp)
    x, y = fam.chords[-1]
    out = [y, x]
    on_x_side = True
    for x, y in reversed(fam.chords[:-1]):
        here = pp[out[-1]]
        if on_x_side:
            out.extend(p[t] for t in range(here - 1, pp[x] - 1, -1))
            out.append(y)
        else:
            out.extend(p[t] for t in range(here + 1, pp[y] + 1))
            out.append(x)
        on_x_side = not on_x_side
    return tuple(out)
