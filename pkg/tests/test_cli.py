import csv
import io
import json
import os
import subprocess
import sys

import pytest

from parkpoly import arith
from parkpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_volume_all_formulas_agree(capsys):
    code, doc, _ = run_json(capsys, "volume", "3", "1", "1", "--formula", "all")
    assert code == 0
    assert {r["normalized"] for r in doc["results"]["volumes"]} == {24}
    assert doc["checks"][0]["passed"] is True


def test_volume_segment(capsys):
    code, doc, _ = run_json(capsys, "volume", "1", "5", "9")
    assert code == 0
    assert doc["results"]["volumes"][0]["normalized"] == 4


def test_volume_closed_matches_ehrhart(capsys):
    _, closed, _ = run_json(capsys, "volume", "3", "2", "1", "--formula", "closed")
    _, oracle, _ = run_json(capsys, "volume", "3", "2", "1", "--formula", "ehrhart")
    assert closed["results"]["volumes"][0]["normalized"] == oracle["results"]["volumes"][0]["normalized"] == 129
    assert closed["results"]["volumes"][0]["euclidean"] == "43/2"


def test_fvector_csv(capsys):
    code, out, _ = run(capsys, "fvector", "3", "1", "1", "--csv")
    assert code == 0
    table = out.split("\r\n\r\n")[0]
    rows = list(csv.reader(io.StringIO(table)))
    assert [int(r[1]) for r in rows[1:]] == [10, 15, 7, 1]


def test_vertices(capsys):
    code, doc, _ = run_json(capsys, "vertices", "2", "2", "1")
    assert code == 0
    rows = doc["results"]["vertices"]
    assert len(rows) == 5
    pts = [(r["x1"], r["x2"]) for r in rows]
    assert pts == sorted(pts)


def test_count_rational_vertices(capsys):
    code, doc, _ = run_json(capsys, "count", "rational-vertices", "3", "5")
    assert code == 0
    assert doc["results"]["counts"][0]["value"] == 10


def test_count_census(capsys):
    code, doc, _ = run_json(capsys, "count", "census", "3")
    assert code == 0
    assert doc["results"]["counts"][0]["pinned_pf_facets"] == 3


def test_ehrhart_xpf(capsys):
    code, doc, _ = run_json(capsys, "ehrhart", "xpf", "3", "1", "1", "--tmax", "3")
    assert code == 0
    assert [r["points"] for r in doc["results"]["counts"]][:2] == [1, 17]
    poly = doc["results"]["polynomial"][0]
    assert poly["leading"] == "4" and poly["normalized_volume"] == "24"


def test_ehrhart_wipf_and_ps_agree(capsys):
    _, wipf, _ = run_json(capsys, "ehrhart", "wipf", "3", "1", "1", "--tmax", "2")
    _, ps, _ = run_json(capsys, "ehrhart", "ps", "0,1,1", "--tmax", "2")
    assert wipf["results"]["counts"][1]["points"] == 5
    assert wipf["results"]["counts"] == ps["results"]["counts"]


def test_ehrhart_short_range_has_no_polynomial(capsys):
    code, doc, _ = run_json(capsys, "ehrhart", "xpf", "3", "1", "1", "--tmax", "1")
    assert code == 0
    assert "polynomial" not in doc["results"]


def test_series_commands(capsys):
    code, doc, _ = run_json(capsys, "series", "g", "1", "--order", "3")
    assert code == 0
    assert [r["coefficient"] for r in doc["results"]["coefficients"]] == ["0", "1", "1", "3/2"]
    code, doc, _ = run_json(capsys, "series", "f", "2", "3", "--order", "6")
    assert code == 0 and all(c["passed"] for c in doc["checks"])
    code, doc, _ = run_json(capsys, "series", "ck")
    assert code == 0
    assert doc["results"]["coefficients"][2]["coefficient"] == -2


@pytest.mark.parametrize("suite", ["volume", "series", "faces", "rational", "weakly"])
def test_verify_suites_pass(capsys, suite):
    code, doc, _ = run_json(capsys, "verify", "--suite", suite)
    assert code == 0
    assert doc["checks"] and all(c["passed"] for c in doc["checks"])


def test_verify_negative_control(capsys, monkeypatch):
    real = arith.odd_double_factorial
    monkeypatch.setattr(arith, "odd_double_factorial", lambda m: 1 if m == -3 else real(m))
    code, doc, err = run_json(capsys, "verify", "--suite", "all")
    assert code == 1
    failed = {c["name"]: c["details"] for c in doc["checks"] if not c["passed"]}
    assert failed["published nVol(PF_2)"] == "got -8, expected 1"
    assert "FAIL published nVol(PF_2)" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["volume", "3", "1"],
        ["volume", "0", "1", "1"],
        ["volume", "3", "1", "1", "--formula", "magic"],
        ["count", "permanent", "7"],
        ["count", "vertices", "3", "1"],
        ["count", "rational-vertices", "2", "4"],
        ["fvector", "-1", "1", "1"],
        ["vertices", "9", "1", "1"],
        ["ehrhart", "xpf", "6", "1", "1"],
        ["ehrhart", "xpf", "3", "1", "1", "--tmax", "99"],
        ["ehrhart", "ps", "1,x"],
        ["series", "f", "1"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_threads_env_validated(capsys, monkeypatch):
    monkeypatch.setenv("PARKPOLY_THREADS", "zero")
    assert run(capsys, "verify", "--suite", "series")[0] == 2
    monkeypatch.setenv("PARKPOLY_THREADS", "0")
    assert run(capsys, "verify", "--suite", "series")[0] == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "volume", "4", "2", "3", "--formula", "all")[1]
    second = run(capsys, "volume", "4", "2", "3", "--formula", "all")[1]
    assert first == second
    assert json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n" == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parkpoly", "volume", "2", "1", "1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["volumes"][0]["normalized"] == 1


def test_parallel_verify_matches_serial():
    env_out = []
    for threads in ("1", "3"):
        proc = subprocess.run(
            [sys.executable, "-m", "parkpoly", "verify", "--suite", "all"],
            capture_output=True,
            text=True,
            check=False,
            env={**os.environ, "PARKPOLY_THREADS": threads},
        )
        assert proc.returncode == 0
        env_out.append(proc.stdout)
    assert env_out[0] == env_out[1]
