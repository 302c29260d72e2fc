import json
import subprocess
import sys

import pytest

from frobverify.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from frobverify.report import validate_report


@pytest.fixture(scope="module")
def full_report(tmp_path_factory):
    out = tmp_path_factory.mktemp("report") / "report.json"
    code = main(["verify", "--n", "all", "-o", str(out)])
    return code, json.loads(out.read_text())


def test_verify_all_passes(full_report):
    code, doc = full_report
    assert code == EXIT_OK
    validate_report(doc)
    by_id = {c["id"]: c for c in doc["cases"]}
    assert by_id["n2.trace.exact"]["status"] == "pass"
    assert by_id["n2.trace.exact"]["residual"] == 0
    assert all(c["status"] == "pass" for c in doc["cases"])


def test_verify_is_deterministic(tmp_path, capsys):
    texts = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        assert main(["verify", "--n", "0", "--suite", "exact", "-o", str(out)]) == EXIT_OK
        texts.append(out.read_text())
    assert texts[0] == texts[1]
    assert "cases:" in capsys.readouterr().err


def test_verify_failing_tolerance_exits_1(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--n", "0", "--suite", "numeric", "--tol", "1e-16", "--warn", "1e-15", "-o", str(out)]) == EXIT_FAIL
    statuses = {c["status"] for c in json.loads(out.read_text())["cases"]}
    assert "fail" in statuses


def test_bad_n_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--n", "5"])
    assert info.value.code == EXIT_USAGE


def test_sample_rows(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["sample", "--n", "1", "--range", "2", "2", "--points", "1", "-o", str(out)]) == EXIT_OK
    head, row = out.read_text().splitlines()
    assert head.startswith("w_re,w_im,t_re,t_im,g11_re")
    vals = [float(v) for v in row.split(",")]
    assert vals[:2] == [2.0, 0.0]
    assert vals[2] == pytest.approx(-3 / 125)
    assert vals[4] == pytest.approx(243 / 980, rel=1e-14)


def test_sample_skips_poles(capsys):
    assert main(["sample", "--n", "0", "--range", "1", "1", "--points", "1"]) == EXIT_FAIL
    err = capsys.readouterr().err
    assert "skipping" in err and "no valid samples" in err


def test_sample_path_file(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"waypoints": [[2, 0], [2, 0.5]]}))
    assert main(["sample", "--n", "0", "--path", str(path)]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 3


def test_integrate(tmp_path, capsys):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"waypoints": [[-0.05, 0], [-0.05, 0.01]]}))
    out = tmp_path / "traj.csv"
    assert main(["integrate", "--n", "0", "--path", str(path), "-o", str(out)]) == EXIT_OK
    summary = json.loads(capsys.readouterr().err)
    assert summary["max_trace_drift"] < 1e-9
    assert summary["endpoint_vs_exact"] < 1e-8
    lines = out.read_text().splitlines()
    assert lines[0].startswith("s,t_re,t_im")
    assert float(lines[1].split(",")[1]) == pytest.approx(-3 / 125)


def test_integrate_bad_path_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{}")
    assert main(["integrate", "--n", "0", "--path", str(path)]) == EXIT_USAGE


def test_pvi(tmp_path, capsys):
    cand = tmp_path / "cand.poly"
    cand.write_text("lambda-candidate v1\n2 0\n\n1 0\n")
    assert main(["pvi", "--n", "0", "--sign", "plus", "--lambda", str(cand), "--w", "2.0"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["coefficients"] == {"alpha": "1/8", "beta": "-1/8", "gamma": "1/8", "delta": "3/8"}
    assert doc["lambda"] == [2.0, 0.0]
    assert doc["abs_residual"] > 0


def test_pvi_requires_lambda():
    with pytest.raises(SystemExit) as info:
        main(["pvi", "--n", "0", "--sign", "plus", "--w", "2"])
    assert info.value.code == EXIT_USAGE


def test_pvi_bad_candidate(tmp_path):
    cand = tmp_path / "cand.poly"
    cand.write_text("nonsense\n")
    assert main(["pvi", "--n", "0", "--sign", "minus", "--lambda", str(cand), "--w", "2"]) == EXIT_USAGE


def test_parse(capsys):
    assert main(["parse", "(z1 + z2)^2", "--vars", "z"]) == EXIT_OK
    out = capsys.readouterr().out
    assert main(["parse", out.strip()]) == EXIT_OK
    assert capsys.readouterr().out == out
    assert main(["parse", "z1 + y"]) == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "frobverify", "parse", "w^2 - 1", "--vars", "w"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip()
