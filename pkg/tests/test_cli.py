import json
import subprocess
import sys

import pytest

from besse import cli
from besse.seifert import normalize, parse_seifert


def run(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr().out
    return status, out


def run_json(capsys, *argv):
    status, out = run(capsys, *argv)
    return status, json.loads(out)


def test_realizable_trivial(capsys):
    status, doc = run_json(capsys, "realizable", "--seifert", "0;(1,0)")
    assert status == 0
    assert doc["verdict"] is False
    assert doc["realizability"]["reason"] == "euler_number = 0"
    assert doc["spectrum"] is None


def test_realizable_poincare(capsys):
    status, doc = run_json(capsys, "realizable", "--seifert", "0;(1,-1),(2,1),(3,1),(5,1)")
    assert status == 0
    assert doc["verdict"] is True
    assert doc["euler_number"] == "-1/30"
    assert doc["base"]["chi_orb"] == "+1/30"
    assert doc["base"]["geometry"] == "Spherical"
    assert doc["spectrum"] == ["+1/1", "+1/2", "+1/3", "+1/5"]
    assert "-1/30" in doc["realizability"]["reason"]


def test_compare(capsys):
    status, doc = run_json(capsys, "compare", "--first", "0;(2,3)", "--second", "0;(1,1),(2,1)")
    assert status == 0
    assert doc["verdict"] == "StrictlyContactomorphic"
    assert doc["spectra_match"] is True


def test_compare_reversal(capsys):
    args = ["compare", "--first", "0;(1,-1),(3,1)", "--second", "0;(1,1),(3,-1)"]
    assert run_json(capsys, *args)[1]["verdict"] == "Distinct"
    assert run_json(capsys, *args, "--allow-reversal")[1]["verdict"] == "StrictlyContactomorphic"


def test_compare_not_realizable(capsys):
    _, doc = run_json(capsys, "compare", "--first", "0;(1,-1)", "--second", "2;(1,0)")
    assert doc["verdict"] == "NotRealizable"
    assert doc["not_realizable_side"] == "second"


def test_cohomology_weights(capsys):
    status, doc = run_json(capsys, "cohomology", "--weights", "2,3", "--euler-coeff", "5")
    assert status == 0
    assert doc["euler_class"]["total_space_is_manifold"] is True
    assert doc["ring"] == {"d": 2, "m": 6, "presentation": "Z[u]/<6u^2>"}
    assert doc["bundle_classes"] == "InfiniteCyclic"
    assert doc["groups"]["4"] == "Z/6"
    assert doc["thresholds"] == {"stable_range_from": 4, "besse_bundle_threshold": 3}


def test_cohomology_cyclic(capsys):
    _, doc = run_json(capsys, "cohomology", "--cyclic", "6", "--euler-coeff", "10")
    assert doc["euler_class"]["k"] == 4
    assert doc["euler_class"]["total_space_is_manifold"] is False
    assert doc["bundle_classes"] == "Finite(6)"


@pytest.mark.parametrize(
    "argv, token",
    [
        (["realizable", "--seifert", "0;(2,2)"], "0;(2,2)"),
        (["euler", "--seifert", "0;(1,0"], "0;(1,0"),
        (["spectrum", "--seifert", "0;(1,0)"], "0;(1,0)"),
        (["cohomology", "--weights", "2,x"], "2,x"),
        (["cohomology", "--weights", ""], ""),
        (["example", "--hopf", "2", "4"], "2 4"),
        (["example", "--ellipsoid", "0", "1"], "0 1"),
    ],
)
def test_invalid_input_exit_1(capsys, argv, token):
    status, doc = run_json(capsys, *argv)
    assert status == 1
    assert doc["token"] == token
    assert doc["expected"]


def test_usage_error_exit_1(capsys):
    status, doc = run_json(capsys, "frobnicate")
    assert status == 1
    assert "frobnicate" in doc["error"]
    status, doc = run_json(capsys, "cohomology")
    assert status == 1


@pytest.mark.parametrize(
    "argv, euler",
    [
        (["example", "--hopf", "2", "3"], "-1/6"),
        (["example", "--ellipsoid", "1", "3/2"], "-1/6"),
        (["example", "--trivial", "-2"], "0/1"),
        (["euler", "--seifert", "0;(2,-1)"], "+1/2"),
        (["normalize", "--seifert", "0;(2,-1)"], "+1/2"),
    ],
)
def test_euler_strings(capsys, argv, euler):
    status, doc = run_json(capsys, *argv)
    assert status == 0
    assert doc["euler_number"] == euler


def test_base(capsys):
    _, doc = run_json(capsys, "base", "--seifert", "-1;(2,1)")
    assert doc["base"]["orbifold"] == "RP2(2)"
    assert doc["base"]["orientable"] is False


def test_nonorientable_note(capsys):
    _, doc = run_json(capsys, "realizable", "--seifert", "-1;(2,1)")
    assert "nonorientable" in doc["note"]


def test_text_format(capsys):
    status, out = run(capsys, "normalize", "--seifert", "0;(2,3)", "--format", "text")
    assert status == 0
    assert "normal_form: 0;(1,1),(2,1)" in out.splitlines()


def test_deterministic_output(capsys):
    argv = ["compare", "--first", "0;(1,-1),(2,1)", "--second", "1;(3,2)"]
    assert run(capsys, *argv) == run(capsys, *argv)


@pytest.mark.parametrize("text", ["0;(2,3)", "-2;(5,-7),(1,4),(3,1)", "1;", "0;(1,0),(1,0)"])
def test_input_echo_roundtrip(capsys, text):
    _, doc = run_json(capsys, "normalize", "--seifert", text)
    assert str(normalize(parse_seifert(doc["input"]))) == doc["normal_form"]


def test_fraction_str():
    from fractions import Fraction

    assert cli.fraction_str(Fraction(-2, 4)) == "-1/2"
    assert cli.fraction_str(Fraction(3)) == "+3/1"
    assert cli.fraction_str(Fraction(0)) == "0/1"


def test_selftest_ok(capsys):
    status, doc = run_json(capsys, "selftest", "--seed", "5", "--trials", "500")
    assert status == 0
    assert doc["ok"] is True


def test_selftest_reports_disagreement(capsys, monkeypatch):
    monkeypatch.setattr(cli, "finitely_covered_by_trivial", lambda s: True)
    status, doc = run_json(capsys, "selftest", "--seed", "5", "--trials", "50")
    assert status == 2
    assert doc["error"] == "internal inconsistency"


def test_realizable_inconsistency_exit_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "is_besse_realizable", lambda s: True)
    status, _ = run_json(capsys, "realizable", "--seifert", "0;(1,0)")
    assert status == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "besse", "realizable", "--seifert", "0;(1,-1)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] is True
