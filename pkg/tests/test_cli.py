import json

import pytest

from multidom import Graph, parse_dimacs, write_dimacs
from multidom.cli import main


C6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def c6_path(tmp_path):
    path = tmp_path / "c6.dimacs"
    path.write_text(write_dimacs(C6))
    return str(path)


def test_gen_to_stdout(capsys):
    assert main(["gen", "--family", "cycle", "--n", "6"]) == 0
    g = parse_dimacs(capsys.readouterr().out)
    assert g == C6


def test_gen_to_file_edgelist(tmp_path):
    out = tmp_path / "g.edges"
    code = main(
        ["gen", "--family", "erdos_renyi", "--n", "8", "--p", "0.4",
         "--seed", "3", "--format", "edgelist", "--output", str(out)]
    )
    assert code == 0
    assert out.read_text().startswith("# n 8\n")


def test_gen_bad_family_params(capsys):
    assert main(["gen", "--family", "cycle", "--n", "2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_solve(c6_path, capsys, tmp_path):
    trace = tmp_path / "trace.json"
    code = main(
        ["solve", c6_path, "--mode", "kdom", "--k", "2", "--trace", str(trace)]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["mode"] == "kdom"
    assert doc["size"] == len(doc["chosen"])
    assert not doc["trivial"]
    trace_doc = json.loads(trace.read_text())
    assert len(trace_doc["iterations"]) == doc["size"]
    assert trace_doc["chosen"] == doc["chosen"]


def test_solve_from_stdin(monkeypatch, capsys):
    import io
    import sys
    monkeypatch.setattr(sys, "stdin", io.StringIO(write_dimacs(C6)))
    assert main(["solve", "-", "--mode", "dom"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["size"] == 2


def test_solve_k_out_of_range(c6_path, capsys):
    assert main(["solve", c6_path, "--mode", "ktuple", "--k", "4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_exact(c6_path, capsys):
    assert main(["exact", c6_path, "--mode", "dom"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["optimum"] == 2
    assert len(doc["witness"]) == 2


def test_exact_over_cap(c6_path, capsys):
    assert main(["exact", c6_path, "--mode", "dom", "--max-n", "4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify(c6_path, capsys):
    assert main(["verify", c6_path, "--mode", "ktuple", "--k", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ledger_checks_passed"] is True
    assert doc["bound_satisfied"] is True
    assert len(doc["ledger"]) == 6
    for item in doc["ledger"]:
        num, den = item["lhs"].split("/")
        assert int(den) > 0 and int(num) >= 0


def test_verify_skip_exits_nonzero(tmp_path, capsys):
    star = Graph(7, [(0, i) for i in range(1, 7)])
    path = tmp_path / "star.dimacs"
    path.write_text(write_dimacs(star))
    assert main(["verify", str(path), "--mode", "ktuple", "--k", "3"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["skip_reason"] is not None


def test_bench_custom_corpus(tmp_path, capsys):
    corpus = [
        {"spec": {"family": "cycle", "n": 8}, "mode": "dom", "k": 1},
        {"spec": {"family": "star", "n": 8}, "mode": "kdom", "k": 2},
        {"spec": {"family": "erdos_renyi", "n": 8, "p": 0.4, "seed": 1},
         "mode": "ktuple", "k": 2},
    ]
    corpus_path = tmp_path / "corpus.json"
    corpus_path.write_text(json.dumps(corpus))
    csv_path = tmp_path / "out.csv"
    json_path = tmp_path / "out.json"
    code = main(
        ["bench", "--corpus", str(corpus_path), "--csv", str(csv_path),
         "--json", str(json_path)]
    )
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["status"] == "pass"
    assert summary["reports"] == 3
    assert summary["bound_violations"] == 0
    csv_lines = csv_path.read_text().splitlines()
    assert len(csv_lines) == 4  # header + 3 reports
    assert csv_lines[0].startswith("instance_id,family,seed,")
    docs = json.loads(json_path.read_text())
    assert {d["instance_id"] for d in docs} == {
        "cycle(n=8)", "star(n=8)", "erdos_renyi(n=8,p=0.4,seed=1)"
    }


def test_bench_edge_list_graphs_not_needed_for_corpus(tmp_path, capsys):
    # a corpus entry with a skip still benches clean overall
    corpus = [{"spec": {"family": "star", "n": 8}, "mode": "ktuple", "k": 3}]
    corpus_path = tmp_path / "corpus.json"
    corpus_path.write_text(json.dumps(corpus))
    assert main(["bench", "--corpus", str(corpus_path)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["skipped"] == 1


def test_selfcheck(capsys):
    code = main(
        ["selfcheck", "--x-max", "60", "--delta-max", "60", "--gap-k-max", "3"]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "pass"
    assert doc["harmonic_inequalities"] is True
    assert doc["ratio_improvement"] is True
    assert doc["gap_witness"] is True


def test_missing_file_is_usage_error(capsys):
    assert main(["solve", "/nonexistent/g.dimacs", "--mode", "dom"]) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_graph_file_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.dimacs"
    path.write_text("p edge 3 1\ne 1 9\n")
    assert main(["solve", str(path), "--mode", "dom"]) == 2
    assert "line 2" in capsys.readouterr().err
