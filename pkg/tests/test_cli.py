import json
import subprocess
import sys

import pytest

from rrbij import harness
from rrbij.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_lw(capsys):
    code, out, _ = run(capsys, "verify-identity", "LW", "--order", "30")
    assert code == 0
    assert "equal to q^30" in out


def test_unknown_identity_exits_2(capsys):
    code, out, err = run(capsys, "verify-identity", "BOGUS")
    assert code == 2 and out == "" and "BOGUS" in err


def test_theta1_example(capsys):
    code, out, _ = run(capsys, "run-map", "theta1", "--input", "(3+3+5+9+9+15 | 14+16)")
    assert code == 0
    assert out == "(1+1+1+5+5+9 | 2+8+12+14+16)\n"


@pytest.mark.parametrize("argv, want", [
    (["run-map", "phi", "--input", "(1+3_x | 5+9)"], "(1_x | 3+5+9)"),
    (["run-map", "iota", "--input", "(9 | e)"], "(ε | 9)"),
    (["run-map", "iota", "--input", "(4_x | 5)"], "(4_x+5 | ε)"),
    (["run-map", "alpha", "--input", "(1,1 | 2 | 4)"], "(3+5+7)"),
    (["run-map", "alpha", "--inverse", "--input", "(3+5+7)"], "(1,1 | 2 | 4)"),
    (["run-map", "tau", "--input", "(1,1 | 1 | 2)"], "(3_xy2+5_x2y2)"),
    (["run-map", "tau", "--inverse", "--input", "(3_xy2+5_x2y2)"], "(1,1 | 1 | 2)"),
    (["run-map", "theta2", "--input", "(1+3 | ε)"], "(2 | 2)"),
    (["run-map", "psi1", "--input", "(9 | ε)"], "(ε | 9)"),
    (["run-map", "psi2", "--input", "(3 | ε)"], "(ε | 3 | ε)"),
])
def test_run_map(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == want


@pytest.mark.parametrize("text", ["(3+4 |)", "(1+3_q | 5)", "(1 | 2 | 3)", "((1)"])
def test_bad_input_exits_2(capsys, text):
    code, _, err = run(capsys, "run-map", "theta1", "--input", text)
    assert code == 2 and "error" in err


def test_usage_errors(capsys):
    assert run(capsys, "run-map", "nope", "--input", "(1|2)")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "verify-identity")[0] == 2
    assert run(capsys, "enumerate", "AI")[0] == 2


def test_json_records(capsys):
    code, out, _ = run(capsys, "--json", "verify-identity", "RR1", "--order", "5")
    assert json.loads(out) == {"id": "RR1", "order": 5, "equal": True, "discrepancy": None}
    code, out, _ = run(capsys, "--json", "run-map", "phi", "--input", "(1 | 17)")
    rec = json.loads(out)
    assert rec["output"] == "(ε | 1+17)"
    assert (rec["sign_in"], rec["sign_out"], rec["weight_in"]) == (-1, 1, 18)


def test_emit_table_matches_harness(capsys):
    code, out, _ = run(capsys, "emit-table", "phi", "--weight", "18")
    assert code == 0
    assert out == harness.emit_table("phi", 18)
    code, out, _ = run(capsys, "--json", "emit-table", "iota", "--weight", "9")
    rec = json.loads(out)
    assert len(rec["fixed"]) == 8 and len(rec["pairs"]) == 38


def test_check_map(capsys):
    code, out, _ = run(capsys, "check-map", "theta2", "--max-weight", "12")
    assert code == 0 and out.startswith("PASS ")
    code, out, _ = run(capsys, "--json", "check-map", "psi2", "--max-weight", "20")
    assert json.loads(out)["status"] == "pass"


def test_enumerate_and_list(capsys):
    code, out, _ = run(capsys, "enumerate", "R", "--max-weight", "4")
    assert code == 0
    assert out.splitlines() == ["ε", "1", "1+3", "2", "3", "4",
                                "# 6 members of R with weight <= 4"]
    code, out, _ = run(capsys, "--json", "list")
    rec = json.loads(out)
    assert len(rec["identities"]) == 23 and "theta1" in rec["maps"]


def test_failure_exit_code(capsys, monkeypatch):
    from rrbij import cli
    from rrbij.catalog import VerificationReport

    monkeypatch.setattr(cli, "verify_identity",
                        lambda i, n: VerificationReport(i, n, False, (4, 0, 0, 1, 0)))
    code, out, _ = run(capsys, "verify-identity", "RR1", "--order", "3")
    assert code == 1 and "NOT equal" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rrbij", "list"], capture_output=True,
                          text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("identities: RR1")
