import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from nonic_theta import cli
from nonic_theta.puiseux import QSeries
from nonic_theta.report import CheckReport


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def strip_ms(doc):
    return [{k: v for k, v in r.items() if k != "ms"} for r in doc["reports"]]


def test_single_check_text():
    code, text = run("verify", "--check", "nonic-i", "--order", "20")
    assert code == 0
    assert text.startswith("PASS  nonic-i")
    assert "1/1 passed" in text


def test_unknown_check_is_usage_error(capsys):
    code, _ = run("verify", "--check", "no-such-id")
    assert code == 2
    assert "no-such-id" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["verify", "--all", "--digits", "5"],
    ["verify", "--all", "--order", "3"],
    ["verify", "--all", "--parallelism", "0"],
    ["verify"],
    ["frobnicate"],
    ["eval", "X:1"],
    ["eval", "G:729"],
    ["series", "nope"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_failing_check_exits_one(monkeypatch):
    from nonic_theta import checks

    def broken(order):
        return CheckReport("nonic-i", "fail", "formal", order=Fraction(order), reason="forced")

    real = checks.registry

    def patched():
        reg = real()
        reg["nonic-i"] = checks.Check("nonic-i", "formal", broken)
        return reg

    monkeypatch.setattr(checks, "registry", patched)
    code, text = run("verify", "--check", "nonic-i", "--order", "20")
    assert code == 1
    assert "FAIL" in text and "forced" in text


def test_json_round_trip_and_determinism():
    argv = ["verify", "--check", "lemma-u3-i", "--check", "thm-4.10", "--check", "trig-cos-sum",
            "--order", "20", "--digits", "30", "--json"]
    code, first = run(*argv)
    assert code == 0
    doc = json.loads(first)
    assert [r["id"] for r in doc["reports"]] == ["lemma-u3-i", "thm-4.10", "trig-cos-sum"]
    assert doc["summary"] == {"total": 3, "passed": 3, "failed": 0}
    suite = cli.SuiteReport.from_json(doc)
    assert suite.to_json() == doc
    for r in doc["reports"]:
        assert CheckReport.from_json(r).to_json() == r
    _, second = run(*argv)
    assert strip_ms(json.loads(second)) == strip_ms(doc)
    assert json.loads(second)["config"] == doc["config"]


def test_parallel_matches_serial():
    argv = ["verify", "--check", "nonic-ii", "--check", "septic-ii", "--check", "trig-sec-sum",
            "--order", "20", "--digits", "20", "--json"]
    _, serial = run(*argv)
    _, parallel = run(*argv, "--parallelism", "2")
    assert strip_ms(json.loads(serial)) == strip_ms(json.loads(parallel))


@pytest.mark.parametrize("expr, order, terms", [
    ("u3", "11", {"1": "2", "4": "2", "10": "-4"}),
    ("phi", "5", {"0": "1", "1": "2", "4": "2"}),
    ("theta:11/7", "12", {"0": "1", "7": "1", "11": "1"}),
])
def test_series_command(expr, order, terms):
    code, text = run("series", expr, "--order", order)
    assert code == 0
    s = QSeries.from_json(json.loads(text))
    assert {str(e): str(c) for e, c in s.items()} == terms


def test_eval_command():
    code, text = run("eval", "u3:1/9", "--digits", "50")
    assert code == 0
    doc = json.loads(text)
    assert doc["value"].startswith("0.7320508075688772935274463415058723669428052538103")
    assert doc["error_bound_exponent"] < -50
    code, text = run("eval", "phi-ratio:thm-4.11", "--digits", "30")
    doc = json.loads(text)
    assert doc["value"] == doc["closed_form"]["value"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nonic_theta", "verify", "--check", "septic-i", "--order", "20"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
