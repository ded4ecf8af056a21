import csv
import io

import pytest

from seppaths.bench import CSV_HEADER, run_bench
from seppaths.cli import main
from seppaths.io import parse_path_system


@pytest.fixture
def k4(tmp_path):
    f = tmp_path / "k4.txt"
    assert main(["gen", "clique(4)", "-o", str(f)]) == 0
    return f


def test_gen_and_separate(k4, tmp_path, capsys):
    out = tmp_path / "k4.paths"
    dot = tmp_path / "k4.dot"
    assert main(["separate", str(k4), "-o", str(out), "--dot", str(dot)]) == 0
    doc = parse_path_system(out.read_text())
    assert (doc.n, doc.m) == (4, 6)
    assert doc.certificate["bound19"] in ("true", "false")
    assert dot.read_text().startswith("graph")
    assert main(["verify", str(k4), str(out)]) == 0
    assert "violations=0" in capsys.readouterr().out


def test_verify_reports_failure(k4, tmp_path, capsys):
    bad = tmp_path / "bad.paths"
    bad.write_text("4 6 1\n0 1 2 3\n")
    assert main(["verify", str(k4), str(bad)]) == 1
    assert "violation" in capsys.readouterr().err


def test_cover_subcommand(k4, tmp_path):
    out = tmp_path / "cover.paths"
    assert main(["cover", str(k4), "--strategy", "mk", "-o", str(out)]) == 0
    doc = parse_path_system(out.read_text())
    assert doc.certificate["strategy"] == "mk"
    assert int(doc.certificate["guaranteed_bound"]) == 24


def test_oracle_subcommand(k4, tmp_path):
    out = tmp_path / "oracle.paths"
    assert main(["oracle", str(k4), "-o", str(out)]) == 0
    assert parse_path_system(out.read_text()).certificate["minimum"] == "5"
    k6 = tmp_path / "k6.txt"
    main(["gen", "clique(6)", "-o", str(k6)])
    assert main(["oracle", str(k6), "--max-millis", "20"]) == 3


def test_usage_errors(tmp_path, capsys):
    assert main(["gen", "nosuch(3)"]) == 2
    loop = tmp_path / "loop.txt"
    loop.write_text("1 1\n")
    assert main(["separate", str(loop)]) == 2
    assert "self-loop" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["separate", str(loop), "--strategy", "nope"])
    assert exc.value.code == 2


def test_bench_rows(tmp_path):
    buf = io.StringIO()
    records = run_bench(["clique(2)", "empty(10)"], sink=buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == CSV_HEADER
    assert rows[1][:4] == ["clique(2)", "2", "1", "1"]
    assert rows[1][-1] == "true"
    assert rows[2][3] == "0"
    assert all(r.verified for r in records)


def test_bench_cli_deterministic(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# demo\nclique(6)\ngnp(30, 0.2)\n")
    for run in ("a", "b"):
        assert main(["bench", "--corpus", str(corpus), "triangles(2)", "--seed", "4",
                     "-o", str(tmp_path / f"{run}.csv"), "--out-dir", str(tmp_path / run)]) == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    files_a = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert files_a == sorted(p.name for p in (tmp_path / "b").iterdir())
    for name in files_a:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_bench_parallel_matches_serial():
    corpus = ["clique(5)", "cycle(9)", "gnp(20, 0.3, seed=2)"]
    a, b = io.StringIO(), io.StringIO()
    run_bench(corpus, sink=a)
    run_bench(corpus, sink=b, jobs=2)
    assert a.getvalue() == b.getvalue()


def test_bench_empty_corpus():
    assert main(["bench"]) == 2
