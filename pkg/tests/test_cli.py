import contextlib
import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from coxcell.cli import main
from coxcell.reps import MatrixRep, check_relations

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def run(args, cwd=GOLDEN):
    out, err = io.StringIO(), io.StringIO()
    old = os.getcwd()
    os.chdir(cwd)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(args)
    finally:
        os.chdir(old)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case):
    code, out, err = run(case["args"])
    assert code == case["exit"], err
    if code == 2:
        assert err.strip()
        assert not out
    else:
        assert out == (GOLDEN / f"{case['name']}.out").read_text()


def test_afunction_d3():
    code, out, _ = run(["afunction", "--graph", "d3.json"])
    assert code == 0
    assert json.loads(out) == {"e": 0, "r": 1, "t": 1, "rt": 1, "tr": 1, "rtr": 3}


def test_error_messages():
    assert "parameter x must be nonzero" in run(["rrep-build", "--graph", "triangle.json", "--x", "0"])[2]
    assert "--graph is required" in run(["kl"])[2]
    assert "cannot parse parameter" in run(["rrep-build", "--graph", "triangle.json", "--x", "abc"])[2]


def test_emitted_representations_round_trip(tmp_path):
    for args in (["rrep-build", "--graph", "triangle.json", "--x", "2"],
                 ["rrep-build", "--graph", "triangle.json", "--x", '{"conductor": 3, "coeffs": ["2", "1"]}'],
                 ["rrep-build", "--graph", "triangle.json", "--x", "1", "--tilde"],
                 ["rrep-build", "--graph", "a3.json"]):
        code, out, err = run(args)
        assert code == 0, err
        rep = MatrixRep.from_json(json.loads(out))
        assert check_relations(rep) is None
        assert json.dumps(rep.to_json(), indent=2) + "\n" == out
        path = tmp_path / "rep.json"
        path.write_text(out)
        code, _, _ = run(["rep-check", "--rep", str(path)])
        assert code == 0


def test_out_flag(tmp_path):
    target = tmp_path / "a.json"
    code, out, _ = run(["afunction", "--graph", "d3.json", "--out", str(target)])
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["rtr"] == 3


def test_cap_environment(monkeypatch):
    monkeypatch.setenv("COXCELL_CAP", "2")
    code, out, _ = run(["enumerate", "--graph", "d4.json"])
    assert code == 0 and json.loads(out)["sizes"] == [1, 2, 2]
    code, _, err = run(["kl", "--graph", "d4.json"])
    assert code == 2 and "not exhausted" in err
    monkeypatch.setenv("COXCELL_CAP", "12,5")
    assert run(["kl", "--graph", "d4.json"])[0] == 2
    monkeypatch.setenv("COXCELL_CAP", "junk")
    assert run(["kl", "--graph", "d4.json"])[0] == 2


def test_with_constants():
    code, out, _ = run(["afunction", "--graph", "d3.json", "--with-constants"])
    data = json.loads(out)
    assert data["h"]["r"]["r"] == {"r": {"-1": -1, "1": -1}}


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "coxcell.cli", "rep-check", "--rep", "sign_d3.json"],
        cwd=GOLDEN, capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["verdict"] == "greater_than_1"
