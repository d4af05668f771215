import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from jacobitau.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_phi(capsys):
    code, out, _ = run(capsys, "phi", "--n", "4", "--alpha", "0", "--beta", "0")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["1", "45", "105"]
    code, out, _ = run(capsys, "phi", "--n", "5", "--alpha", "1/2", "--beta", "1", "--full", "--beta-shift")
    assert len(json.loads(out)["coeffs"]) == 6


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "--n", "4", "--alpha", "0", "--beta", "0", "--precision", "1e-8")
    d = json.loads(out)
    assert code == 0 and d["all_real"] and d["verdict"] == "negative_simple"
    assert abs(float(Fraction(d["roots"][0]["mid"])) + 0.0235121369) < 1e-7


def test_interlace_pairs(capsys):
    code, out, _ = run(capsys, "interlace", "--pair", "phi:N,N-1", "--n", "4", "--alpha", "0", "--beta", "0")
    assert json.loads(out)["verdict"] == "strict"
    code, out, _ = run(capsys, "interlace", "--pair", "phi:6,4", "--alpha", "1/2", "--beta", "-1/2")
    assert json.loads(out)["verdict"] == "fail"
    code, out, _ = run(capsys, "interlace", "--pair", "custom", "--p", "3,4,1", "--q", "2,1")
    assert json.loads(out)["verdict"] == "strict"


def test_stability(capsys):
    code, out, _ = run(capsys, "stability", "--target", "thm4", "--n", "12", "--alpha", "979/1000", "--beta", "-4/5")
    d = json.loads(out)
    assert code == 0 and d["stable"] is False and d["witness"]["stage"] >= 0
    code, out, _ = run(capsys, "stability", "--target", "g", "--n", "5", "--alpha", "-1/2", "--beta", "1", "--A", "2")
    assert json.loads(out)["stable"] is True


def test_threshold(capsys):
    code, out, _ = run(capsys, "threshold", "--n", "12", "--beta", "-4/5", "--bracket", "9/10:1", "--tol", "1e-5")
    d = json.loads(out)
    assert abs(float(d["decimal"]) - 0.97842) < 5e-4
    assert "/" in d["alpha_star"]


def test_vieta(capsys):
    code, out, _ = run(capsys, "vieta", "--n-max", "6", "--alpha", "0", "--beta", "0")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "sum", "decimal"]
    assert rows[1][:2] == ["4", "-3/7"]


def test_scan_exit_codes(capsys, tmp_path):
    summary = tmp_path / "s.json"
    code, out, _ = run(
        capsys, "scan", "--check", "conjB", "--alpha-range", "1/2:1/2:1", "--beta-range", "-1/2:-1/2:1",
        "--n-range", "6:6", "--summary", str(summary),
    )
    # failures inside the pocket are not claimed against, so they are not unexpected
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["verdict"] for r in rows} == {"fails"}
    assert json.loads(summary.read_text())["counts"]["fails"] == 2
    # inside the claimed strip every point is stable
    code, _, _ = run(capsys, "scan", "--check", "thm4", "--alpha-range", "-1/2:-1/4:1/4", "--beta-range", "0:0:1", "--n-range", "5:6")
    assert code == 0


def test_scan_reports_unexpected_failures(capsys, monkeypatch):
    from jacobitau import scanner
    from jacobitau.scanner import Verdict

    monkeypatch.setitem(scanner.CHECKS, "ccw", lambda p, extra: (Verdict.FAILS, "ccw", True, {"forced": True}))
    code, _, err = run(capsys, "scan", "--check", "ccw", "--alpha-range", "0:0:1", "--beta-range", "0:0:1", "--n-range", "4:4")
    assert code == 2
    assert json.loads(err)["unexpected"] == 1


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == 1
    with pytest.raises(SystemExit) as e:
        main(["phi", "--n", "4", "--alpha", "x", "--beta", "0"])
    assert e.value.code == 1
    code, _, err = run(capsys, "threshold", "--n", "12", "--beta", "-4/5", "--bracket", "1/2:9/10")
    assert code == 1 and "does not straddle" in err
    code, _, err = run(capsys, "stability", "--target", "f", "--n", "5", "--alpha", "0", "--beta", "1")
    assert code == 1 and "--A" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "jacobitau", "phi", "--n", "3", "--alpha", "0", "--beta", "0"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(res.stdout)["coeffs"] == ["1", "15"]
