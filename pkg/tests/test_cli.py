import json

import pytest

from gfree import cli
from gfree.formats import encode_graph6
from gfree.named import complete_bipartite
from gfree.patterns import PatternSpec


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("graph, pattern, chi", [("K5", "K3", 3), ("C5", "C5", 2), ("K2", "K3", 1)])
def test_chi_examples(capsys, graph, pattern, chi):
    code, out, _ = run(capsys, "chi", "--graph", graph, "--pattern", pattern)
    assert code == 0 and f"chi_G = {chi}" in out
    code, out, _ = run(capsys, "chi", "--graph", graph, "--pattern", pattern, "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["chi"] == chi and len(doc["classes"]) == chi


def test_chi_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "chi", "--graph", "Petersen", "--pattern", "C5")
    _, js, _ = run(capsys, "chi", "--graph", "Petersen", "--pattern", "C5", "--format", "json")
    doc = json.loads(js)
    assert f"chi_G = {doc['chi']}" in text
    for name, b in doc["bounds"].items():
        if b["value"] is not None:
            assert f"bound {name:<11} {b['value']}  slack {b['slack']}" in text


def test_ng_k44_self(capsys):
    g6 = encode_graph6(complete_bipartite(4, 4))
    code, out, _ = run(capsys, "ng", "--graph", f"g6:{g6}", "--pattern", "self", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["sum"] == 3 and doc["sharp"]
    code, out, _ = run(capsys, "ng", "--graph", f"g6:{g6}", "--pattern", "self")
    assert "sum = 3" in out and "sharp" in out


def test_critical(capsys):
    code, out, _ = run(capsys, "critical", "--graph", "K6+4K1", "--pattern", "K4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["k"] == 3 and len(doc["vertices"]) == 7


def test_refined(capsys):
    code, out, _ = run(capsys, "refined", "--graph", "K9", "--d", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["applicable"] and not doc["cond_ii"]


def test_verify_enumerate(capsys):
    code, out, _ = run(capsys, "verify", "--enumerate", "6", "--pattern", "K3", "--pattern", "cycles",
                       "--format", "json", "--summary-only", "--no-certificates")
    doc = json.loads(out)
    assert code == 0 and doc["violations"] == []
    assert doc["summary"]["pairs"] == 2 * 156 and doc["records"] == []


def test_verify_text_table(capsys):
    code, out, _ = run(capsys, "verify", "--enumerate", "4", "--cumulative", "--pattern", "K3")
    assert code == 0 and "sharp" in out


def test_verify_violation_exit(capsys, monkeypatch):
    class Bad:
        ok = False

        def table(self):
            return "violation"

    monkeypatch.setattr(cli, "verify_corpus", lambda *a, **k: Bad())
    code, _, _ = run(capsys, "verify", "--enumerate", "3", "--pattern", "K3")
    assert code == cli.EXIT_VIOLATION


def test_witness(capsys):
    code, out, _ = run(capsys, "witness")
    assert code == 0 and out.count("PASS") == 6
    code, out, _ = run(capsys, "witness", "--format", "json")
    assert all(r["sharp"] for r in json.loads(out))


def test_witness_failure_exit(capsys, monkeypatch):
    def boom():
        raise cli.WitnessMismatch("C5: expected 2")
    monkeypatch.setattr(cli, "witness_suite", boom)
    code, _, err = run(capsys, "witness")
    assert code == cli.EXIT_VIOLATION and "C5" in err


def test_dimacs_input(tmp_path, capsys):
    f = tmp_path / "c5.col"
    f.write_text("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
    code, out, _ = run(capsys, "chi", "--input", str(f), "--pattern", "K2", "--format", "json")
    assert code == 0 and json.loads(out)["chi"] == 3


def test_graph6_file_input(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("Dhc\nD~{\n")
    code, out, _ = run(capsys, "ng", "--input", str(f), "--pattern", "K3", "--format", "json")
    assert code == 0 and [d["graph6"] for d in json.loads(out)] == ["Dhc", "D~{"]


@pytest.mark.parametrize("argv", [
    ["chi", "--graph", "K5", "--pattern", "X9"],
    ["chi", "--graph", "K5", "--pattern", "C2"],
    ["chi", "--graph", "Q7", "--pattern", "K3"],
    ["chi", "--graph", "g6:!!", "--pattern", "K3"],
    ["chi", "--pattern", "K3"],
    ["chi", "--graph", "K5", "--pattern", "K3", "--time-limit", "0"],
    ["verify", "--enumerate", "3"],
    ["verify", "--pattern", "K3"],
    ["ng", "--graph", "K5", "--pattern", "self", "--induced", "--format", "xml"],
    ["chi", "--input", "/nonexistent/file", "--pattern", "K3"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(cli.main(argv))
    assert exc.value.code == cli.EXIT_USAGE


def test_timeout_exit(capsys):
    code, _, err = run(capsys, "chi", "--graph", "g6:" + encode_graph6(complete_bipartite(7, 7)),
                       "--pattern", "C5", "--time-limit", "0.001")
    assert code == cli.EXIT_TIMEOUT and "timeout" in err


def test_parse_pattern():
    assert cli.parse_pattern("cycles").is_family
    assert cli.parse_pattern("K4,4").graph == complete_bipartite(4, 4)
    assert cli.parse_pattern("P3", induced=True).induced
    assert isinstance(cli.parse_pattern("g6:Bw"), PatternSpec)
    with pytest.raises(cli.UsageError):
        cli.parse_pattern("self")
