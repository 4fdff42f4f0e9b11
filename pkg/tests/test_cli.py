import json
import math

import pytest

from monotight.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_measure_on_majority_file(tmp_path, capsys):
    path = tmp_path / "maj6.col"
    code, _ = run(capsys, "construct", "majority", "--n", "6", "--out", str(path))
    assert code == 0
    code, rep = run(capsys, "measure", "--coloring", str(path), "--t", "2", "--s", "2")
    assert code == 0
    assert rep["value"] == 12


def test_constants_subcommand(capsys):
    code, rep = run(capsys, "constants")
    assert code == 0
    assert rep["x0"] == pytest.approx((math.sqrt(21) - 3) / 2)
    assert rep["lambda_2313"] == pytest.approx(6 * math.sqrt(21) - 27)
    assert 0.3176 <= rep["z_root"] <= 0.3178


def test_verify_r2a_exit_zero(capsys):
    code, rep = run(capsys, "verify", "r2a", "--n", "5", "--k", "4", "--t", "1", "--s", "2")
    assert code == 0
    assert rep["cases"][0]["pass"]


def test_components_and_shadow(tmp_path, capsys):
    path = tmp_path / "h.hg"
    path.write_text("7 3\n1 2 3\n3 4 5\n5 6 7\n")
    code, rep = run(capsys, "components", "--hypergraph", str(path), "--t", "1")
    assert code == 0
    assert rep["count"] == 1
    code, rep = run(capsys, "shadow", "--hypergraph", str(path), "--s", "2")
    assert code == 0
    assert rep["count"] == 9


def test_search_subcommand(tmp_path, capsys):
    wit = tmp_path / "wit.col"
    code, rep = run(
        capsys,
        "search", "--n", "5", "--r", "2", "--k", "3", "--t", "1", "--s", "1",
        "--emit-witness", str(wit),
    )
    assert code == 0
    assert rep["value"] == 5
    assert rep["status"] == "exact"
    assert wit.exists()


def test_search_labels_novel_parameters(capsys):
    code, rep = run(capsys, "search", "--n", "4", "--r", "2", "--k", "3", "--t", "2", "--s", "3")
    assert code == 0
    assert "note" in rep


def test_blowup_roundtrip(tmp_path, capsys):
    base = tmp_path / "base.col"
    out = tmp_path / "blown.col"
    run(capsys, "construct", "parity", "--n", "6", "--out", str(base))
    code, rep = run(capsys, "blowup", "--base", str(base), "--n", "10", "--out", str(out))
    assert code == 0
    assert rep["n"] == 10
    code, rep = run(capsys, "measure", "--coloring", str(out), "--t", "1", "--s", "1")
    assert code == 0


def test_design_subcommand(capsys):
    code, rep = run(capsys, "design", "ap5", "--partition-t", "1")
    assert code == 0
    assert rep["blocks"] == 30
    assert rep["classes"] == 6


def test_bad_file_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.hg"
    path.write_text("5 3\n1 2\n")
    code = main(["components", "--hypergraph", str(path), "--t", "1"])
    assert code == 2
    code = main(["measure", "--coloring", str(tmp_path / "missing.col"), "--t", "1", "--s", "1"])
    assert code == 2


def test_deterministic_json(tmp_path, capsys):
    args = ["bound", "--kind", "general_lower", "--n", "9", "--r", "4", "--k", "2", "--t", "1", "--s", "1"]
    code = main(args)
    first = capsys.readouterr().out
    code = main(args)
    second = capsys.readouterr().out
    assert first == second
