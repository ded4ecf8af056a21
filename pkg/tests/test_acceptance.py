"""Acceptance criteria, one test per criterion.

Set ``SEPPATHS_REGEN_GOLDENS=1`` to rewrite ``tests/data/goldens.json``
after a fully verified run.
"""

import itertools
import json
import os
import time
from pathlib import Path

import pytest

from seppaths.bench import run_bench
from seppaths.cover import CoverStrategy, cover_edges
from seppaths.generators import complete_bipartite, generate_family, gnp, triangles
from seppaths.graph import Graph
from seppaths.posa import derived_path, path_neighborhood, posa_path
from seppaths.separator import separate
from seppaths.verify import (
    TIMEOUT,
    all_simple_paths,
    brute_force_min_separator,
    check_coverage,
    check_strong_separation,
    exhaustive_min_separator,
    is_valid_path,
)

GOLDENS = Path(__file__).parent / "data" / "goldens.json"
REGEN = os.environ.get("SEPPATHS_REGEN_GOLDENS") == "1"


def named_families():
    out = []
    for n in range(2, 13):
        out += [f"clique({n})", f"path({n})", f"star({n})"]
    for n in range(3, 13):
        out.append(f"cycle({n})")
    for t in range(1, 6):
        out.append(f"triangles({t})")
    for a in range(1, 5):
        for b in range(a, 7):
            out.append(f"complete_bipartite({a}, {b})")
    return out


def theorem_corpus():
    out = [f"clique({n})" for n in range(1, 41)]
    out += [f"complete_bipartite({a}, {b})" for a in range(1, 21) for b in range(a, 41 - a)]
    out += [f"triangles({t})" for t in range(1, 14)]
    out += [f"path({n})" for n in range(1, 201)]
    out += [f"cycle({n})" for n in range(3, 201)]
    ps = (0.05, 0.1, 0.2, 0.4)
    out += [f"gnp({10 + 5 * i}, {ps[i % 4]}, seed={i})" for i in range(20)]
    return out


@pytest.fixture(scope="module")
def corpus_runs():
    """separate() on the whole corpus for the default and the mk strategy."""
    runs = {}
    start = time.perf_counter()
    for strategy in (CoverStrategy.BEST_OF, CoverStrategy.RECURSIVE_MK):
        for desc in theorem_corpus():
            g = generate_family(desc)
            system, cert = separate(g, strategy)
            runs[strategy.value, desc] = (g, system, cert)
    return runs, time.perf_counter() - start


def test_c1_posa_lemma(criterion):
    criterion("C1 rotation-maximal path neighbourhood bound")
    start = time.perf_counter()
    graphs = [generate_family(d) for d in named_families()]
    for n in range(2, 61):
        for p in (0.05, 0.1, 0.3, 0.7):
            for seed in range(2):
                graphs.append(gnp(n, p, seed=1000 * n + seed))
    checked = 0
    for g in graphs:
        if g.edge_count == 0:
            continue
        r = posa_path(g)
        s = set(r.endpoints)
        boundary = {y for x in s for y in g.neighbors(x)} - s
        assert boundary <= path_neighborhood(r.path, s)
        assert len(boundary) <= 2 * len(s)
        for x in s:
            q = derived_path(r, x)
            assert is_valid_path(g, q) and q[-1] == r.fixed_end and set(q) == set(r.path)
            assert set(g.neighbors(x)) <= set(r.path)
        checked += 1
    elapsed = time.perf_counter() - start
    assert checked >= 500
    assert elapsed < 30
    criterion("C1 rotation-maximal path neighbourhood bound", f"{checked} graphs, {elapsed:.1f}s")


def test_c2_theorem_correctness(corpus_runs, criterion):
    criterion("C2 strong separation on corpus")
    runs, build_time = corpus_runs
    start = time.perf_counter()
    failures = [key for key, (g, system, _) in runs.items() if check_strong_separation(system, g)]
    elapsed = build_time + time.perf_counter() - start
    assert failures == []
    assert elapsed < 300
    criterion("C2 strong separation on corpus", f"{len(runs)} runs (2 strategies), 0 violations, {elapsed:.1f}s")


def test_c3_size_bound(corpus_runs, criterion):
    criterion("C3 certificate arithmetic and size bounds")
    runs, _ = corpus_runs
    sizes = {}
    for (strategy, desc), (g, system, cert) in runs.items():
        assert cert.total_paths == sum(
            lv.count_ps + lv.count_d + lv.count_m_threads + lv.count_n_threads for lv in cert.levels
        )
        for lv in cert.levels:
            assert lv.count_ps <= 2 * lv.s_size
            assert lv.count_m_threads <= 2 * lv.n_prime
            assert lv.count_n_threads <= 3 * lv.n_prime
            assert lv.n_prime <= 3 * lv.s_size
        assert sum(lv.s_size for lv in cert.levels) <= g.vertex_count
        if cert.bound_19_satisfied:
            assert cert.total_paths <= 19 * g.vertex_count
        if strategy == CoverStrategy.RECURSIVE_MK.value:
            assert cert.total_paths <= 35 * g.vertex_count
        assert cert.violations() == []
        sizes[f"{strategy} {desc}"] = [cert.total_paths, len(system)]

    if REGEN:
        GOLDENS.parent.mkdir(exist_ok=True)
        GOLDENS.write_text(json.dumps(sizes, indent=0, sort_keys=True) + "\n")
    frozen = json.loads(GOLDENS.read_text())
    assert frozen == sizes
    within = sum(1 for _, _, c in runs.values() if c.bound_19_satisfied)
    worst = max(c.total_paths / g.vertex_count for g, _, c in runs.values() if g.vertex_count)
    criterion(
        "C3 certificate arithmetic and size bounds",
        f"{len(sizes)} goldens match; cover budget met on {within}/{len(runs)}; max total/n {worst:.2f}",
    )


def test_c4_self_contained_cover(criterion):
    criterion("C4 M-class cover within 6|V|")
    count = 0
    for desc in theorem_corpus():
        g = generate_family(desc)
        rep = cover_edges(g, CoverStrategy.RECURSIVE_MK)
        assert not check_coverage(rep.system, g)
        assert rep.count <= 6 * g.vertex_count
        assert all(is_valid_path(g, p) for p in rep.system)
        count += 1
    criterion("C4 M-class cover within 6|V|", f"{count} graphs")


def test_c5_triangle_tightness(criterion):
    criterion("C5 disjoint triangles need 2t cover paths")
    tri = triangles(1)
    paths = all_simple_paths(tri)
    assert all(check_coverage([p], tri) for p in paths)
    assert any(not check_coverage(fam, tri) for fam in itertools.combinations(paths, 2))
    for t in range(1, 14):
        g = triangles(t)
        for strategy in CoverStrategy:
            rep = cover_edges(g, strategy)
            assert rep.count >= 2 * t
            assert not check_coverage(rep.system, g)
    criterion("C5 disjoint triangles need 2t cover paths", "t = 1..13, all strategies")


def graphs_on_four_vertices():
    """One representative per isomorphism class of graphs on 4 vertices."""
    pairs = list(itertools.combinations(range(4), 2))
    seen = {}
    for bits in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        canon = min(
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            for perm in itertools.permutations(range(4))
        )
        seen.setdefault(canon, Graph(4, edges))
    return list(seen.values())


def test_c6_oracle_cross_validation(criterion):
    criterion("C6 exhaustive oracle cross-validation")
    start = time.perf_counter()
    small = graphs_on_four_vertices()
    assert len(small) == 11
    for g in small:
        result = exhaustive_min_separator(g, "strong")
        assert result is not TIMEOUT
        size, system = result
        assert not check_strong_separation(system, g) and not check_coverage(system, g)
        assert brute_force_min_separator(g, "strong", limit=size) == size
        assert len(separate(g)[0]) >= size
    for seed in range(100):
        g = gnp(5, 0.5, seed=seed)
        result = exhaustive_min_separator(g, "strong", max_millis=60_000)
        assert result is not TIMEOUT
        size, system = result
        assert not check_strong_separation(system, g) and not check_coverage(system, g)
        assert len(separate(g)[0]) >= size
    elapsed = time.perf_counter() - start
    assert elapsed < 600
    criterion("C6 exhaustive oracle cross-validation", f"11 + 100 graphs, {elapsed:.1f}s")


# frozen from exhaustive_min_separator, confirmed by brute_force_min_separator
BIPARTITE_STRONG_MINIMA = {(1, 3): 3, (2, 2): 4}


def test_c7_bipartite_probe(criterion, capsys):
    criterion("C7 complete bipartite lower-bound (probe)")
    notes = []
    for (a, b), golden in sorted(BIPARTITE_STRONG_MINIMA.items()):
        g = complete_bipartite(a, b)
        size, _ = exhaustive_min_separator(g, "strong")
        assert size == golden == brute_force_min_separator(g, "strong")
    for a, b in [(1, 3), (2, 2), (1, 4), (2, 3), (1, 5), (2, 4), (3, 3)]:
        g = complete_bipartite(a, b)
        n = a + b
        eps = min(a, b) / n
        bound = 2 * (1 - 2 * eps) * n
        result = exhaustive_min_separator(g, "strong", max_millis=20_000)
        found = "timeout" if result is TIMEOUT else str(result[0])
        notes.append(f"K{a},{b}: min={found} 2(1-2e)n={bound:.2f} separate={len(separate(g)[0])}")
    with capsys.disabled():
        print("\n  " + "\n  ".join(notes))
    criterion("C7 complete bipartite lower-bound (probe)", "; ".join(notes))


def test_c8_determinism(tmp_path, criterion):
    criterion("C8 bench determinism")
    corpus = ["clique(2)", "empty(10)", "clique(20)", "gnp(50, 0.2, seed=1)", "triangles(5)", "cycle(30)"]
    outputs = []
    for run in ("a", "b"):
        csv_path = tmp_path / f"{run}.csv"
        with open(csv_path, "w", newline="") as fh:
            records = run_bench(corpus, "best", fh, seed=7, out_dir=tmp_path / run)
        assert all(r.verified for r in records)
        assert all(r.ratio <= 19 for r in records)
        files = {p.name: p.read_bytes() for p in sorted((tmp_path / run).iterdir())}
        outputs.append((csv_path.read_bytes(), files))
    assert outputs[0] == outputs[1]
    assert records[0].system_size == 1 and records[1].system_size == 0
    criterion("C8 bench determinism", f"CSV + {len(outputs[0][1])} path-system files byte-identical")
