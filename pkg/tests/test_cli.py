"""The command line interface, driven in process through main(argv)."""

import json

import pytest

from takiff.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "e", "fbar")
    assert code == 0
    assert out.strip() == "[e, fbar] = hbar"


def test_bracket_zero(capsys):
    code, out, _ = run(capsys, "bracket", "ebar", "fbar")
    assert code == 0
    assert out.strip() == "[ebar, fbar] = 0"


def test_bracket_rejects_unknown_generator(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bracket", "e", "q"])
    assert exc.value.code == 2


def test_straighten_text_and_json(capsys):
    code, out, _ = run(capsys, "straighten", "e*fbar^2")
    assert code == 0
    assert out.strip() == "2*fbar*hbar + fbar^2*e"
    code, out, _ = run(capsys, "straighten", "e", "fbar", "fbar",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {"exp": [0, 1, 0, 1, 0, 0], "coef": "2"} in data["terms"]


def test_straighten_bad_expression(capsys):
    code, _, err = run(capsys, "straighten", "e^x")
    assert code == 1
    assert "exponent" in err


def test_casimir_check(capsys):
    code, out, _ = run(capsys, "casimir-check")
    assert code == 0
    assert "central: commutes with all generators" in out


def test_verma_table_and_json(capsys):
    code, out, _ = run(capsys, "verma", "--h", "3", "--depth", "3")
    assert code == 0
    assert "slice dims: [1, 2, 3, 4]" in out
    assert "relations: ok" in out
    code, out, _ = run(capsys, "verma", "--h", "3", "--depth", "2",
                       "--format", "json")
    data = json.loads(out)
    assert data["dims"] == [1, 2, 3]


def test_simple_complete_flag(capsys):
    code, out, _ = run(capsys, "simple", "--h", "2", "--depth", "5",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["dims"] == [1, 1, 1, 0, 0, 0]
    assert data["complete"] is True


def test_character(capsys):
    code, out, _ = run(capsys, "character", "--h", "0", "--depth", "4",
                       "--module", "simple", "--format", "json")
    data = json.loads(out)
    assert data["dims"] == {"0": 1}


def test_multiplicities(capsys):
    code, out, _ = run(capsys, "multiplicities", "--h", "2",
                       "--depth", "10", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["multiplicities"]["2"] == 2
    assert data["multiplicities"]["3"] == 2


def test_singular(capsys):
    code, out, _ = run(capsys, "singular", "--h", "4", "--mu-h", "2",
                       "--depth", "4")
    assert code == 0
    assert "dimension 1" in out


def test_filtration(capsys):
    code, out, _ = run(capsys, "filtration", "--n", "3")
    assert code == 0
    assert "layer 0: simple with top (3, 0)" in out
    assert "layer 1: simple with top (1, 0)" in out
    assert "uniserial: True" in out


def test_hasse_dot_and_table(capsys):
    code, out, _ = run(capsys, "hasse", "--n", "2")
    assert code == 0
    assert out.startswith("digraph")
    code, out, _ = run(capsys, "hasse", "--n", "2", "--format", "table")
    assert "covering relations" in out
    assert "K0 > V2" in out


def test_block(capsys):
    code, out, _ = run(capsys, "block", "--h", "5/2")
    assert out.strip() == "coset (1/2, 0) + Z*alpha"
    code, out, _ = run(capsys, "block", "--h", "3", "--hbar", "1")
    assert out.strip() == "nondegenerate (3, 1)"


def test_ext_stabilized(capsys):
    code, out, _ = run(capsys, "ext", "--h", "1/2", "--mu-h", "-3/2")
    assert code == 0
    assert "dimension 1" in out
    assert "stabilized: True" in out


def test_ext_fixed_window_json(capsys):
    code, out, _ = run(capsys, "ext", "--h", "0", "--mu-h", "-2",
                       "--window", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 1 and data["window"] == 4


def test_ext_depth_cap_failure(capsys, monkeypatch):
    monkeypatch.setenv("TAKIFF_DEPTH_CAP", "3")
    code, _, err = run(capsys, "ext", "--h", "3", "--mu-h", "1")
    assert code == 1
    assert "depth cap" in err


def test_quiver_dot(capsys):
    code, out, _ = run(capsys, "quiver", "--h", "1/2", "--lo", "-1",
                       "--hi", "1")
    assert code == 0
    assert out.startswith("digraph ext_quiver")
    assert '"m+0" -> "m+1"' in out


def test_quiver_json(capsys):
    code, out, _ = run(capsys, "quiver", "--h", "3", "--hbar", "1",
                       "--cat", "Otilde", "--format", "json")
    data = json.loads(out)
    assert data["arrows"] == [{"from": 0, "to": 0, "dim": 2}]


def test_paper_check_subset_and_report(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "paper-check", "--only",
                       "lie-bracket-axioms", "depth-one-hbar-action",
                       "--report", str(report))
    assert code == 0
    assert "2/2 checks passed" in out
    data = json.loads(report.read_text())
    assert data["passed"] is True
    assert [c["id"] for c in data["checks"]] == ["lie-bracket-axioms",
                                                 "depth-one-hbar-action"]


def test_paper_check_unknown_id(capsys):
    code, _, err = run(capsys, "paper-check", "--only", "no-such-check")
    assert code == 1
    assert "unknown check" in err
