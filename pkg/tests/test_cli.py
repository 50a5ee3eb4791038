import json
import subprocess
import sys
from pathlib import Path

import pytest

from thetaext.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_star_on_x3(capsys):
    code, out, _ = call(capsys, "check", "--instance", DATA / "x3.json", "--condition", "star")
    report = json.loads(out)
    assert code == 1 and report["holds"] is False
    assert report["witness"]["family"] == [["0"], ["1"]]


def test_extend_sierpinski(capsys):
    code, out, _ = call(capsys, "extend", "--instance", DATA / "sierp_ext.json", "--mode", "continuous")
    report = json.loads(out)
    assert code == 0 and report["exists"]
    assert report["constructed"]["map"]["b"] == "0"


def test_theta_closure_on_zigzag(capsys):
    code, out, _ = call(capsys, "closure", "--space", DATA / "zig5.json", "--set", "5", "--alpha", "2")
    assert code == 0 and json.loads(out)["result"] == ["2", "3", "4", "5"]


def test_validate_good_and_bad(capsys):
    code, out, _ = call(capsys, "validate", "--space", DATA / "sierp.json")
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = call(capsys, "validate", "--space", DATA / "bad_union.json")
    report = json.loads(out)
    assert code == 1 and not report["valid"] and sorted(report["pair"]) == [["a"], ["b"]]


def test_emitted_space_round_trips(capsys, tmp_path):
    _, out, _ = call(capsys, "validate", "--space", DATA / "zig5.json")
    path = tmp_path / "again.json"
    path.write_text(json.dumps(json.loads(out)["space"]))
    code, again, _ = call(capsys, "validate", "--space", path)
    assert code == 0 and json.loads(again)["space"] == json.loads(out)["space"]


def test_classify(capsys, tmp_path):
    code, out, _ = call(capsys, "classify", "--space", DATA / "sierp.json")
    report = json.loads(out)
    assert code == 0 and report["S"]["0"] is False and not report["discrete"]
    path = tmp_path / "discrete.json"
    path.write_text(json.dumps({"points": ["a", "b"], "opens": [[], ["a"], ["b"], ["a", "b"]]}))
    report = json.loads(call(capsys, "classify", "--space", path)[1])
    assert all(report["S"].values()) and all(report["regular_U"].values())


def test_verify_is_byte_identical_across_runs_and_jobs(capsys):
    argv = ["verify", "--theorem", "thm_3_3", "--max-x", "3", "--max-y", "2", "--y-class", "u_alpha(1)"]
    outs = [call(capsys, *argv)[1], call(capsys, *argv)[1], call(capsys, *argv, "--jobs", "2")[1]]
    assert outs[0] == outs[1] == outs[2]
    assert json.loads(outs[0])["violation_count"] == 0


def test_verify_exit_status_follows_violations(capsys):
    code, out, _ = call(capsys, "verify", "--theorem", "prop_3_2", "--max-x", "2", "--max-y", "2",
                        "--y-class", "any")
    assert code == 1 and json.loads(out)["violation_count"] > 0


def test_mine_exit_status(capsys):
    code, out, _ = call(capsys, "mine", "--condition", "¬star ∧ extension_exists", "--max-x", "3", "--max-y", "2")
    assert code == 0 and json.loads(out)["count"] == 0
    code, out, _ = call(capsys, "mine", "--condition", "not star", "--max-x", "3", "--max-y", "2", "--limit", "3")
    assert code == 1 and json.loads(out)["count"] == 3


def test_mysior_claims(capsys):
    code, out, _ = call(capsys, "mysior", "--claim", "1", "--i-max", "2")
    assert code == 0 and json.loads(out)["a"]["verified"]
    code, out, _ = call(capsys, "mysior", "--claim", "2")
    assert code == 0 and json.loads(out)["verified"]


def test_broken_certificate_reports_failure(capsys, tmp_path):
    from thetaext.mysior import U, Z0, HullCertificate
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(HullCertificate(Z0, (U(5), U(5))).to_dict()))
    code, out, _ = call(capsys, "mysior", "--claim", "2", "--certificate", path)
    assert code == 1 and json.loads(out)["error"] == "ChainBroken"


@pytest.mark.parametrize("argv", [
    ["closure", "--space", "missing.json"],
    ["closure", "--space", str(DATA / "sierp.json"), "--alpha", "-1"],
    ["closure", "--space", str(DATA / "sierp.json"), "--set", "zz"],
    ["verify", "--theorem", "thm_9_9"],
    ["verify"],
    ["frobnicate"],
    ["check", "--instance", str(DATA / "x3.json"), "--condition", "nope"],
    ["verify", "--theorem", "prop_1_4", "--jobs", "0"],
])
def test_bad_usage_exits_2(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2 and "error" in json.loads(out) and err


def test_malformed_json_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, out, _ = call(capsys, "validate", "--space", path)
    assert code == 2


def test_pretty_goes_to_stderr(capsys):
    code, out, err = call(capsys, "closure", "--space", DATA / "zig5.json", "--set", "5", "--pretty")
    assert json.loads(out)["result"] and "closure: ok" in err


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "thetaext.cli", "closure", "--space", str(DATA / "sierp.json"),
                           "--set", "a"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
