import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from hfree import harness
from hfree.cli import main
from hfree.fileio import parse_graph, serialize_graph
from hfree.graph import Graph

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "report.schema.json").read_text())


@pytest.fixture
def triangle_path(tmp_path):
    path = tmp_path / "g.txt"
    path.write_bytes(serialize_graph(Graph(range(1, 7), [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)])))
    return path


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_kernelize(triangle_path, tmp_path, capsys):
    out = tmp_path / "kernel.txt"
    assert main(["kernelize", "--graph", str(triangle_path), "--family", "K3", "--k", "1", "--out", str(out)]) == 0
    report = _json(capsys)
    jsonschema.validate(report, SCHEMA)
    row = report["rows"][0]
    assert row["rule"] == "rule0" and row["kept"] == [1, 2, 3, 4]
    assert row["threshold"] == 1.0 and row["radius"] == 1
    assert parse_graph(out.read_bytes()).num_vertices == 4


def test_kernelize_ktfree(tmp_path, capsys):
    path = tmp_path / "claw.txt"
    path.write_text("p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n")
    assert main(["kernelize", "--graph", str(path), "--family", "K1,3", "--k", "0", "--mode", "ktfree", "--t", "4"]) == 0
    assert _json(capsys)["rows"][0]["rule"] == "trivial_no"


def test_solve_engines(triangle_path, capsys):
    assert main(["solve", "--graph", str(triangle_path), "--family", "K3", "--k", "1", "--engine", "brute"]) == 0
    brute = _json(capsys)
    assert main(["solve", "--graph", str(triangle_path), "--family", "K3", "--k", "1"]) == 0
    branch = _json(capsys)
    assert brute["answer"] and branch["answer"]
    assert len(brute["edges"]) == len(branch["edges"]) == 1


def test_verify_graph(triangle_path, capsys):
    assert main(["verify", "--graph", str(triangle_path), "--family", "K3", "--k-max", "3"]) == 0
    assert _json(capsys)["disagreements"] == 0


def test_verify_campaign(capsys):
    assert main(["verify", "--family", "K3,P3", "--seeds", "10", "--full"]) == 0
    summary = _json(capsys)
    assert summary["instances"] == 10 and summary["disagreements"] == 0
    for report in summary["reports"]:
        jsonschema.validate(report, SCHEMA)


def test_verify_disagreement_exits_1_with_reproducer(monkeypatch, tmp_path, capsys):
    real = harness.kernelize

    def broken(inst, fam, mode, t=None, s=None):
        result = real(inst, fam, mode, t, s)
        # pretend the kernel is always a yes-instance
        return type(result)(harness.ProblemInstance(Graph(), inst.budget), result.rule, result.removed, result.params)

    monkeypatch.setattr(harness, "kernelize", broken)
    rdir = tmp_path / "repro"
    code = main(["verify", "--family", "K3", "--seeds", "3", "--reproducer-dir", str(rdir)])
    assert code == 1
    files = sorted(rdir.iterdir())
    assert files
    data = json.loads(files[0].read_text())
    assert {"graph", "family", "k", "seed", "mode"} <= data.keys()
    parse_graph(data["graph"])


def test_gen_is_seeded(tmp_path, capsys, monkeypatch):
    assert main(["gen", "--kind", "bounded", "--n", "8", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    monkeypatch.setenv("HFREE_SEED", "4")
    assert main(["gen", "--kind", "bounded", "--n", "8"]) == 0
    assert capsys.readouterr().out == first
    out = tmp_path / "g.txt"
    assert main(["gen", "--kind", "ktfree", "--n", "8", "--t", "3", "--seed", "1", "--out", str(out)]) == 0
    parse_graph(out.read_bytes())


def test_bound(capsys):
    assert main(["bound", "--delta", "3", "--diameter", "1", "--k", "1"]) == 0
    assert _json(capsys)["bound"] == 54
    assert main(["bound", "--mode", "ktfree", "--s", "3", "--t", "4", "--diameter", "2", "--k", "1"]) == 0
    data = _json(capsys)
    assert data["delta"] == 5 and data["bound"] == 625000 and data["radius"] == 4


def test_usage_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("e 1 2\n")
    assert main(["kernelize", "--graph", str(bad), "--family", "K3", "--k", "1"]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["bound", "--diameter", "1", "--k", "1"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["kernelize"])
    assert info.value.code == 2


def test_module_entry_point(triangle_path):
    proc = subprocess.run(
        [sys.executable, "-m", "hfree", "bound", "--delta", "2", "--diameter", "1", "--k", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["bound"] == 16
