import json
import subprocess
import sys

import pytest

from rootheights.cli import emit_report, main
from rootheights.identities import VerificationReport, verify_prop1
from rootheights.rootsys import root_system
from rootheights.tpoly import TPoly


def run_cli(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_json(capsys):
    code, out, _ = run_cli(capsys, "roots", "--family", "A", "--rank", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 3
    assert [r["height"] for r in doc["rows"]] == [1, 1, 2]


def test_roots_tsv(capsys):
    code, out, _ = run_cli(capsys, "roots", "--family", "A", "--rank", "2", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["0,1\t1", "1,0\t1", "1,1\t2"]


def test_xi_coeff(capsys):
    code, out, _ = run_cli(capsys, "xi-coeff", "--family", "A", "--rank", "2", "--gamma", "1,1")
    assert code == 0
    assert json.loads(out)["coeff"] == [0, -1, 1]


def test_xi_coeff_bad_gamma(capsys):
    code, _, err = run_cli(capsys, "xi-coeff", "--family", "A", "--rank", "2", "--gamma", "1,1,1")
    assert code == 2 and "usage" in err


def test_verify_g2_all(capsys):
    code, out, _ = run_cli(capsys, "verify", "--family", "G", "--rank", "2", "--target", "all")
    assert code == 0
    doc = json.loads(out)
    assert doc["system"] == "G2" and doc["pass"] is True
    assert {c["id"] for c in doc["claims"]} >= {"prop1", "oracle", "fact1", "fact2", "telescoping", "exponents", "conjugate", "constant_term"}


def test_verify_a2_duality_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--family", "A", "--rank", "2", "--target", "duality")
    assert code == 0
    assert out.startswith('{"system":"A2","pass":true,')


def test_exponents(capsys):
    code, out, _ = run_cli(capsys, "exponents", "--family", "F", "--rank", "4")
    doc = json.loads(out)
    assert code == 0
    assert doc["exponents_from_heights"] == doc["exponents_from_kostka"] == [1, 5, 7, 11]


def test_emit_tsv_pass():
    text = emit_report(verify_prop1(root_system("A", 1)), "tsv")
    lines = text.splitlines()
    assert len(lines) == 1 and lines[0].endswith("\tpass")


def test_emit_tsv_failure():
    report = VerificationReport("A1")
    report.add("prop1", {"beta": [1]}, TPoly([-1, 1]), TPoly([0, 1]))
    assert emit_report(report, "tsv").rstrip("\n").endswith("\tFAIL")
    assert json.loads(emit_report(report, "json"))["pass"] is False


def test_failure_exit_status(capsys, monkeypatch):
    import rootheights.cli as cli

    def broken(system, cap):
        report = VerificationReport(system.label)
        report.add("prop1", {}, TPoly([1]), TPoly([2]))
        return report

    monkeypatch.setattr(cli, "verify_prop1", broken)
    code, out, _ = run_cli(capsys, "verify", "--family", "A", "--rank", "1", "--target", "prop1")
    assert code == 1
    assert json.loads(out)["claims"][0]["pass"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["roots", "--family", "B", "--rank", "1"],
        ["verify", "--family", "A", "--rank", "2"],
        ["verify", "--family", "A", "--rank", "2", "--target", "nope"],
        ["xi-coeff", "--family", "A", "--rank", "2"],
        ["verify", "--family", "E", "--rank", "6", "--target", "duality"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_cap_exit_3(capsys):
    code, _, err = run_cli(capsys, "verify", "--family", "F", "--rank", "4", "--target", "duality", "--weyl-order-cap", "10")
    assert code == 3 and "weyl_order_cap" in err


def test_env_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("ROOTHEIGHTS_PARTITION_CAP", "5")
    code, _, err = run_cli(capsys, "verify", "--family", "F", "--rank", "4", "--target", "prop1")
    assert code == 3 and "partition_cap" in err


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "rootheights", "verify", "--family", "B", "--rank", "2", "--target", "all"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
