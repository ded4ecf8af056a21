"""Benchmark harness: separate, verify, and tabulate a corpus of graph families."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, TextIO

from .cover import CoverStrategy
from .generators import generate_family
from .io import format_path_system
from .separator import separate
from .verify import check_strong_separation

CSV_HEADER = ["family", "n", "m", "system_size", "ratio", "bound19", "strategy", "millis", "verified"]


@dataclass(frozen=True)
class RunRecord:
    family: str
    n: int
    m: int
    system_size: int
    ratio: Fraction
    bound_19_satisfied: bool
    cover_strategy: str
    wall_millis: int
    verified: bool

    def row(self) -> list[str]:
        return [
            self.family,
            str(self.n),
            str(self.m),
            str(self.system_size),
            f"{float(self.ratio):.4f}",
            str(self.bound_19_satisfied).lower(),
            self.cover_strategy,
            str(self.wall_millis),
            str(self.verified).lower(),
        ]


def run_instance(
    family: str, strategy: str = "best", seed: int | None = None, timing: bool = False
) -> tuple[RunRecord, str]:
    """Returns the record and the instance's path-system document."""
    g = generate_family(family, seed=seed)
    start = time.perf_counter()
    system, cert = separate(g, CoverStrategy.parse(strategy))
    millis = round((time.perf_counter() - start) * 1000) if timing else 0
    verified = not check_strong_separation(system, g) and not cert.violations()
    record = RunRecord(
        family=family,
        n=g.vertex_count,
        m=g.edge_count,
        system_size=len(system),
        ratio=Fraction(len(system), g.vertex_count) if g.vertex_count else Fraction(0),
        bound_19_satisfied=cert.bound_19_satisfied,
        cover_strategy=CoverStrategy.parse(strategy).value,
        wall_millis=millis,
        verified=verified,
    )
    return record, format_path_system(system, cert.as_dict())


def _run_star(args: tuple) -> tuple[RunRecord, str]:
    return run_instance(*args)


def _slug(family: str) -> str:
    return "".join(c if c.isalnum() or c in "._-" else "_" for c in family).strip("_")


def run_bench(
    corpus: Iterable[str],
    strategy: str = "best",
    sink: TextIO | None = None,
    seed: int | None = None,
    timing: bool = False,
    jobs: int = 1,
    out_dir: str | Path | None = None,
) -> list[RunRecord]:
    """Run every descriptor in ``corpus``; rows are written in corpus order.

    Wall-clock times are recorded only with ``timing=True`` (otherwise the
    ``millis`` column is 0) so that repeated runs give identical output.
    """
    corpus = list(corpus)
    tasks = [(family, strategy, seed, timing) for family in corpus]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_star, tasks))
    else:
        results = [_run_star(t) for t in tasks]

    if sink is not None:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for record, _ in results:
            writer.writerow(record.row())
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, (record, doc) in enumerate(results):
            (out / f"{i:03d}_{_slug(record.family)}.paths").write_text(doc)
    return [record for record, _ in results]


def bench_csv(corpus: Iterable[str], strategy: str = "best", seed: int | None = None) -> str:
    buf = io.StringIO()
    run_bench(corpus, strategy, buf, seed=seed)
    return buf.getvalue()
