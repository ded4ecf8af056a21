"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error, 3 oracle
timeout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .bench import run_bench
from .cover import CoverStrategy, cover_edges
from .generators import generate_family
from .graph import Graph, PathSystem, parse_edge_list, serialize_edge_list
from .io import format_path_system, parse_path_system, to_dot
from .separator import separate
from .verify import TIMEOUT, check_coverage, check_strong_separation, check_weak_separation, exhaustive_min_separator

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3
SHOW_VIOLATIONS = 20


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read_text(path))


def cmd_gen(args: argparse.Namespace) -> int:
    g = generate_family(args.family, seed=args.seed)
    _write_text(args.output, serialize_edge_list(g))
    if args.dot:
        Path(args.dot).write_text(to_dot(g))
    return EXIT_OK


def cmd_separate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    system, cert = separate(g, CoverStrategy.parse(args.strategy))
    _write_text(args.output, format_path_system(system, cert.as_dict()))
    if args.dot:
        Path(args.dot).write_text(to_dot(g, system.paths))
    problems = cert.violations()
    bad = check_strong_separation(system, g)
    for line in problems:
        print(f"certificate: {line}", file=sys.stderr)
    _report_violations(bad)
    return EXIT_FAIL if bad or problems else EXIT_OK


def cmd_cover(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = cover_edges(g, CoverStrategy.parse(args.strategy))
    info = {
        "strategy": report.strategy,
        "count": report.count,
        "guaranteed_bound": report.guaranteed_bound if report.guaranteed_bound is not None else "none",
        "edge_disjoint": str(report.edge_disjoint).lower(),
    }
    _write_text(args.output, format_path_system(report.system, info))
    return EXIT_FAIL if check_coverage(report.system, g) else EXIT_OK


def _report_violations(violations: Sequence) -> None:
    for v in violations[:SHOW_VIOLATIONS]:
        print(
            f"violation: {tuple(v.contained_edge)} vs {tuple(v.excluded_edge)}: {v.reason.value}",
            file=sys.stderr,
        )
    if len(violations) > SHOW_VIOLATIONS:
        print(f"... {len(violations) - SHOW_VIOLATIONS} more violations", file=sys.stderr)


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    doc = parse_path_system(_read_text(args.paths))
    check = check_strong_separation if args.mode == "strong" else check_weak_separation
    violations = check(doc.paths, g)
    uncovered = check_coverage(doc.paths, g)
    _report_violations(violations)
    print(
        f"paths={len(doc.paths)} mode={args.mode} violations={len(violations)} "
        f"uncovered={len(uncovered)}"
    )
    return EXIT_FAIL if violations else EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    result = exhaustive_min_separator(g, args.mode, max_paths=args.max_paths, max_millis=args.max_millis)
    if result is TIMEOUT:
        print("timeout")
        return EXIT_TIMEOUT
    size, system = result
    _write_text(args.output, format_path_system(system, {"mode": args.mode, "minimum": size}))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    corpus = list(args.families)
    if args.corpus:
        corpus += [
            ln.strip() for ln in _read_text(args.corpus).splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")
        ]
    if not corpus:
        print("bench: empty corpus", file=sys.stderr)
        return EXIT_USAGE
    if args.output in (None, "-"):
        records = run_bench(corpus, args.strategy, sys.stdout, args.seed, args.timing, args.jobs, args.out_dir)
    else:
        with open(args.output, "w", newline="") as fh:
            records = run_bench(corpus, args.strategy, fh, args.seed, args.timing, args.jobs, args.out_dir)
    return EXIT_OK if all(r.verified for r in records) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seppaths", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    strategies = [s.value for s in CoverStrategy]

    p = sub.add_parser("gen", help="write a named graph family as an edge list")
    p.add_argument("family", help="descriptor, e.g. 'clique(5)' or 'gnp(30, 0.2)'")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("separate", help="build and verify a strongly-separating path system")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--strategy", choices=strategies, default="best")
    p.add_argument("-o", "--output")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("cover", help="cover the edges of a graph by paths")
    p.add_argument("graph")
    p.add_argument("--strategy", choices=strategies, default="best")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="check a path-system document against a graph")
    p.add_argument("graph")
    p.add_argument("paths")
    p.add_argument("--mode", choices=["strong", "weak"], default="strong")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive minimum separating family (tiny graphs)")
    p.add_argument("graph")
    p.add_argument("--mode", choices=["strong", "weak"], default="strong")
    p.add_argument("--max-millis", type=int, default=None)
    p.add_argument("--max-paths", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="separate and verify a corpus; CSV to stdout or -o")
    p.add_argument("families", nargs="*", help="family descriptors")
    p.add_argument("--corpus", help="file with one descriptor per line")
    p.add_argument("--strategy", choices=strategies, default="best")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="fill the millis column")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", help="also write one path-system document per instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"seppaths {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
