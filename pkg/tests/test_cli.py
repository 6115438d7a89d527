import json
import subprocess
import sys

import pytest

from involab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_enumerate_distribution(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "involutions", "--avoid", "1-3-2", "--n", "4",
                       "--stats", "fixed_points")
    assert code == 0
    data = json.loads(out)
    assert data["distribution"] == {"0": "2", "2": "3", "4": "1"}
    assert data["total"] == "6"


def test_enumerate_empty(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "involutions", "--n", "0", "--format", "plain")
    assert (code, out) == (0, "ε")


def test_enumerate_rtl_ballot_row(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "permutations", "--avoid", "1-3-2", "--n", "5",
                       "--stats", "rtl_maxima", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["rtl_maxima,count", "1,14", "2,14", "3,9", "4,4", "5,1"]


def test_enumerate_contain(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--contain", "1-3-2=1", "--format", "plain")
    assert (code, out) == (0, "1 3 2")


@pytest.mark.parametrize("argv, expected", [
    (("--map", "stack", "--input", "4 3 5 1 2"), "UUDDUUDUDD"),
    (("--map", "xi", "--input", "UDUUUDUDUUUDDU"), "UDDDUDUDUUUDDU"),
    (("--map", "xi-inv", "--input", "UDDDUDUDUUUDDU"), "UDUUUDUDUUUDDU"),
    (("--map", "psi", "--input", "1 3 2"), "1"),
    (("--map", "phi", "--input", "2 1"), "UD"),
    (("--map", "phi-inv", "--input", "UD"), "2 1"),
    (("--map", "rtl-lemma", "--input", "12 13 10 9 6 5 7 8 4 3 11 1 2"),
     "13 14 11 10 12 7 6 8 9 4 3 5 1 2"),
    (("--map", "rtl-lemma", "--inverse", "--input", "13 14 11 10 12 7 6 8 9 4 3 5 1 2"),
     "12 13 10 9 6 5 7 8 4 3 11 1 2"),
])
def test_biject(capsys, argv, expected):
    code, out, _ = run(capsys, "biject", *argv, "--format", "plain")
    assert (code, out) == (0, expected)


def test_biject_json_stats(capsys):
    code, out, _ = run(capsys, "biject", "--map", "phi", "--input", "3 2 1")
    data = json.loads(out)
    assert data["input_stats"]["inversions"] == data["output_stats"]["right_dyck_steps"] == "3"
    assert data["input_stats"]["fixed_points"] == data["output_stats"]["surplus"]


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--gf", "Ie_12k", "--k", "2", "--order", "8", "--format", "plain")
    assert (code, out) == (0, "1,1,0,0,1,1,0,0,1")
    code, out, _ = run(capsys, "series", "--gf", "Ie_12k", "--k", "2", "--order", "3")
    data = json.loads(out)
    assert data == {"coefficients": ["1", "1", "0", "0"], "name": "Ie_12k", "order": "3",
                    "params": {"k": "2"}}


def test_series_env_order(capsys, monkeypatch):
    monkeypatch.setenv("INVOLAB_ORDER", "5")
    code, out, _ = run(capsys, "series", "--gf", "C_I", "--format", "plain")
    assert (code, out) == (0, "1,1,2,3,6,10")
    monkeypatch.setenv("INVOLAB_ORDER", "65")
    assert run(capsys, "series", "--gf", "C_I")[0] == 2


def test_series_bivariate(capsys):
    code, out, _ = run(capsys, "series", "--gf", "D_I", "--weights", "x,y", "--order", "4")
    data = json.loads(out)
    assert data["coefficients"][4] == ["1", "2", "2", "1"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--target", "thd1", "--n-max", "8")
    assert code == 0 and json.loads(out)["verdict"] == "all-match"
    code, out, _ = run(capsys, "verify", "--target", "all", "--n-max", "5", "--format", "plain")
    assert code == 0 and out.endswith("verdict: all-match")


def test_table_and_closed(capsys):
    code, out, _ = run(capsys, "table", "--kind", "inversions", "--n", "2")
    assert out.splitlines()[0] == "n,p,i,count"
    code, out, _ = run(capsys, "table", "--kind", "bounded", "--k", "3", "--n", "3")
    assert out.splitlines() == ["label0,count", "1,2"]
    assert run(capsys, "table", "--kind", "rises", "--n", "21")[0] == 3
    code, out, _ = run(capsys, "closed", "--name", "ballot", "--n", "4", "--param", "p=2", "--format", "plain")
    assert (code, out) == (0, "3")


@pytest.mark.parametrize("argv, code", [
    (("enumerate", "--n", "13"), 3),
    (("enumerate", "--n", "3", "--contain", "1-3-2"), 2),
    (("enumerate", "--n", "3", "--stats", "height"), 5),
    (("enumerate", "--n", "3", "--avoid", "1--2"), 4),
    (("biject", "--map", "psi", "--input", "1 2 3"), 4),
    (("biject", "--map", "xi", "--input", "DU"), 4),
    (("series", "--gf", "nope"), 5),
    (("series", "--gf", "C_S", "--weights", "1,x"), 4),
    (("verify", "--target", "nope"), 5),
    (("verify", "--target", "tha1", "--n-max", "13"), 3),
    (("closed", "--name", "once_12", "--n", "0"), 4),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["biject", "--map", "nope", "--input", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_byte_identical_json():
    cmd = [sys.executable, "-m", "involab", "series", "--gf", "Je_empty", "--order", "12"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["coefficients"][5] == "2"


def test_mismatch_exit_code(monkeypatch, capsys):
    import involab.cli as cli

    monkeypatch.setattr(cli, "verify", lambda *a, **k: {"target": "x", "params": {}, "rows": [
        {"n": 0, "expected": 1, "observed": 0, "match": False}], "verdict": "mismatch"})
    assert run(capsys, "verify", "--target", "tha1")[0] == 1
