"""Named graph families and a small descriptor language for them.

Descriptors look like function calls: ``clique(4)``,
``complete_bipartite(2, 3)``, ``gnp(50, 0.2, seed=1)``.
"""

from __future__ import annotations

import ast
from itertools import combinations

import numpy as np

from .graph import Graph


class DescriptorError(ValueError):
    pass


def empty(n: int) -> Graph:
    return Graph(n)


def clique(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def triangles(t: int) -> Graph:
    edges = []
    for k in range(t):
        x, y, z = 3 * k, 3 * k + 1, 3 * k + 2
        edges += [(x, y), (y, z), (x, z)]
    return Graph(3 * t, edges)


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise DescriptorError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdős–Rényi G(n, p) from numpy's PCG64 stream for ``seed``."""
    if not 0.0 <= p <= 1.0:
        raise DescriptorError(f"edge probability {p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    lo, hi = np.triu_indices(n, k=1)
    keep = rng.random(lo.size) < p
    return Graph(n, zip(lo[keep].tolist(), hi[keep].tolist()))


FAMILIES = {
    "empty": empty,
    "clique": clique,
    "complete_bipartite": complete_bipartite,
    "biclique": complete_bipartite,
    "triangles": triangles,
    "path": path,
    "cycle": cycle,
    "star": star,
    "gnp": gnp,
}


def parse_descriptor(text: str) -> tuple[str, tuple, dict]:
    try:
        node = ast.parse(text.strip(), mode="eval").body
    except SyntaxError as exc:
        raise DescriptorError(f"malformed family descriptor {text!r}") from exc
    if isinstance(node, ast.Name):
        node = ast.Call(func=node, args=[], keywords=[])
    if not (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)):
        raise DescriptorError(f"malformed family descriptor {text!r}")
    name = node.func.id
    if name not in FAMILIES:
        raise DescriptorError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    try:
        args = tuple(ast.literal_eval(a) for a in node.args)
        kwargs = {kw.arg: ast.literal_eval(kw.value) for kw in node.keywords}
    except ValueError as exc:
        raise DescriptorError(f"non-literal argument in {text!r}") from exc
    return name, args, kwargs


def generate_family(descriptor: str, seed: int | None = None) -> Graph:
    """Build the graph named by ``descriptor``.

    ``seed`` fills in a missing ``seed=`` for ``gnp``.
    """
    name, args, kwargs = parse_descriptor(descriptor)
    if name == "gnp" and seed is not None and len(args) < 3:
        kwargs.setdefault("seed", seed)
    try:
        return FAMILIES[name](*args, **kwargs)
    except TypeError as exc:
        raise DescriptorError(f"bad arguments in {descriptor!r}: {exc}") from exc
