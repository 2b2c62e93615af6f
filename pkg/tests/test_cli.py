import json
import shutil
import subprocess
from pathlib import Path

import pytest

from eulerium import identities as ids
from eulerium.cli import main

DATA = Path(__file__).resolve().parents[1] / "src" / "eulerium" / "data" / "catalog.json"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def strip_runtime(report):
    for it in report["items"]:
        it.pop("runtime_ms")
    return report


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "R{1;2}", "--digits", "25", "--tol", "1e-15")
    assert code == 0
    assert out.startswith("R{1;2} = ")
    assert abs(float(out.split()[2]) - 1.5733098582600434) < 1e-14


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "MRV(2,1)", "--json", "--digits", "20", "--tol", "1e-12")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"spec", "config", "value", "err_estimate", "terms_used", "method"}
    assert data["config"] == {"digits": 20, "terms": 10**6, "tol": 1e-12}
    assert abs(float(data["value"]) - 1.5733098582600434) < 1e-12


@pytest.mark.parametrize("spec", ["R{1;1}", "X{1;2}", "R{1;2", "MRV(1,2)", "MRV(0)"])
def test_eval_bad_input_exit_2(capsys, spec):
    code, _, err = run(capsys, "eval", spec)
    assert code == 2
    assert err


def test_convergence_failure_exit_1(capsys):
    code, _, err = run(capsys, "eval", "R{1^3;2}", "--terms", "300", "--digits", "20", "--tol", "1e-14")
    assert code == 1
    assert "tol" in err


def test_verify_examples_json_deterministic(capsys):
    args = ("verify", "examples", "--json", "--digits", "30", "--tol", "1e-12")
    c1, o1, _ = run(capsys, *args)
    c2, o2, _ = run(capsys, *args)
    assert c1 == c2 == 0
    r1, r2 = strip_runtime(json.loads(o1)), strip_runtime(json.loads(o2))
    assert r1 == r2
    assert r1["suite"] == "examples" and len(r1["items"]) == 11
    assert all(it["pass"] and it["digits"] >= 8 for it in r1["items"])
    keys = {"name", "lhs", "rhs", "abs_err", "tol", "digits", "terms_used", "pass"}
    assert all(set(it) == keys for it in r1["items"])
    assert list(json.loads(o1)) == sorted(json.loads(o1))


def test_verify_single_identity(capsys):
    code, out, _ = run(capsys, "verify", "R(2,1)")
    assert code == 0
    assert out.startswith("PASS  R(2,1)")
    assert out.rstrip().endswith("1/1 pass")


def test_verify_malformed_catalog_exit_2(capsys, tmp_path):
    recs = json.loads(DATA.read_text())
    recs[0]["rhs"] = "1 + " + recs[0]["rhs"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(recs))
    assert run(capsys, "verify", "examples", "--catalog", str(bad))[0] == 2


def test_verify_unknown_exit_2(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2 and "unknown suite" in err


def test_verify_failing_catalog_exit_1(capsys, tmp_path):
    recs = json.loads(DATA.read_text())
    recs[0]["rhs"] += " + 1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(recs))
    code, out, _ = run(capsys, "verify", "examples", "--catalog", str(bad))
    assert code == 1
    assert out.startswith("FAIL")
    assert "10/11 pass" in out


def test_verify_jobs_same_results(capsys):
    _, o1, _ = run(capsys, "verify", "triple", "--json")
    _, o2, _ = run(capsys, "verify", "triple", "--json", "--jobs", "2")
    assert strip_runtime(json.loads(o1)) == strip_runtime(json.loads(o2))


def test_gf_rows(capsys):
    code, out, _ = run(capsys, "gf", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("(1,1)  R(2)")
    row = next(l for l in lines if l.startswith("(1,2)"))
    assert "R(2,1)" in row and "7 z3 - 6 z2 log2" in row


def test_gf_json_and_bounds(capsys):
    code, out, _ = run(capsys, "gf", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["degree"] == 4 and len(data["coefficients"]) == 6
    assert run(capsys, "gf", "9")[0] == 2
    assert run(capsys, "gf", "1")[0] == 2


def test_catalog_write_matches_bundled(capsys, tmp_path):
    out = tmp_path / "c.json"
    assert run(capsys, "catalog", "--write", str(out))[0] == 0
    assert out.read_text() == DATA.read_text() == ids.catalog_to_json(ids.example_catalog())
    code, text, _ = run(capsys, "catalog")
    assert code == 0 and len(text.splitlines()) == 11


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


@pytest.mark.skipif(shutil.which("eulerium") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["eulerium", "eval", "R{2;~2}", "--digits", "20", "--tol", "1e-12"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("R{2;~2} = ")


def test_eval_empty_factor_is_scaled_zeta(capsys):
    import mpmath

    code, out, _ = run(capsys, "eval", "R{;2}", "--digits", "25", "--tol", "1e-15")
    assert code == 0
    with mpmath.workdps(30):
        assert abs(mpmath.mpf(out.split()[2]) - mpmath.pi**2 / 2) < 1e-14


def test_eval_inadmissible_message(capsys):
    code, _, err = run(capsys, "eval", "MRV(1,2)")
    assert code == 2 and "inadmissible: k1=1" in err
