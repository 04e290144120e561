import json
import os
import subprocess
import sys

import pytest

from dp6 import cli
from dp6 import surface as srf

PENCIL = {"b0": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "b1": [[0, 0, 0], [0, 1, 0], [0, 0, 2]]}
W_TENSOR = {"t": [[[0, 1], [1, 0]], [[1, 0], [0, 0]]]}
O4_TENSOR = {"t": [[[1, 0], [0, 1]], [[0, 0], [0, 0]]]}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_classify_pencil(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "pencil", write(tmp_path, "p.json", PENCIL))
    report = json.loads(out)
    assert code == 0
    assert report["command"] == "classify" and report["family"] == "pencil"
    assert [r["type"] for r in report["results"]] == [0]
    assert len(report["inputs_digest"]) == 64


def test_classify_tensor_table(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "tensor", write(tmp_path, "t.json", W_TENSOR), "--format", "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["#", "type", "singularities", "z1", "z2", "z3"]
    assert lines[2].split()[:3] == ["0", "1", "A1"]


def test_classify_rejection_exits_2(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "tensor", write(tmp_path, "t.json", O4_TENSOR))
    assert code == 2
    err = json.loads(out)["error"]
    assert err["code"] == "NotDelPezzo" and err["condition"] == "O4"
    assert err["message"].startswith("NotDelPezzo: O4")


def test_classify_malformed(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out, _ = run(capsys, "classify", "pencil", str(path))
    assert code == 2 and json.loads(out)["error"]["code"] == "ParseError"
    code, out, _ = run(capsys, "classify", "pencil", write(tmp_path, "x.json", {"b0": 1}))
    assert code == 2 and json.loads(out)["error"]["code"] == "ParseError"


def test_classify_batch_keeps_order(capsys, tmp_path):
    batch = [W_TENSOR, O4_TENSOR, {"t": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]}] * 3
    path = write(tmp_path, "batch.json", batch)
    code, serial, _ = run(capsys, "classify", "tensor", path)
    assert code == 2
    code2, pooled, _ = run(capsys, "classify", "tensor", path, "--jobs", "3")
    assert code2 == 2 and pooled == serial
    results = json.loads(serial)["results"]
    assert [r.get("type", r.get("error", {}).get("condition")) for r in results] == [1, "O4", 0] * 3


def test_tables(capsys):
    code, out, _ = run(capsys, "tables")
    rows = json.loads(out)
    assert code == 0 and [r["type"] for r in rows] == list(range(6))
    for r in rows:
        assert (r["z1"], r["z2"], r["z3"]) == tuple(srf.z_scheme(r["type"], d).to_list() for d in (1, 2, 3))
        assert r["z_from_blocks"] == [r["z1"], r["z2"], r["z3"]]
    code, out, _ = run(capsys, "tables", "--type", "5")
    assert code == 0 and "A2 + A1" in out
    code, out, _ = run(capsys, "tables", "--type", "5", "--format", "table")
    assert "A2 + A1" in out and "R3" in out
    code, out, _ = run(capsys, "tables", "--type", "9")
    assert code == 2


def test_tables_json_round_trip(capsys):
    _, out, _ = run(capsys, "tables")
    assert cli.dumps(json.loads(out)) + "\n" == out


@pytest.mark.parametrize("t, divisor, want", [
    ("2", "0,1,-1,0", "(1, 1, 0)"),
    ("0", "0,0,0,0", "(1, 0, 0)"),
    ("1", "1,-1,-1,-1", "(1, 1, 0)"),
])
def test_cohomology(capsys, t, divisor, want):
    code, out, _ = run(capsys, "cohomology", "--type", t, f"--divisor={divisor}")
    assert code == 0 and out.strip() == want


@pytest.mark.parametrize("divisor", ["1,2,3", "a,b,c,d", "1,2,3,4,5", "1.5,0,0,0"])
def test_cohomology_parse_error(capsys, divisor):
    code, out, _ = run(capsys, "cohomology", "--type", "0", f"--divisor={divisor}")
    assert code == 2 and json.loads(out)["error"]["code"] == "ParseError"


def test_verify_quick(capsys, monkeypatch):
    monkeypatch.setenv("DP6_SEED", "3")
    code, out, err = run(capsys, "verify", "--quick")
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["seed"] == 3
    assert all(c["pass"] for c in report["results"]["checks"])
    assert [t["type"] for t in report["results"]["types"]] == list(range(6))
    assert "checks passed" in err


def test_verify_bad_seed(capsys, monkeypatch):
    monkeypatch.setenv("DP6_SEED", "abc")
    code, out, _ = run(capsys, "verify", "--quick")
    assert code == 2


def test_verify_fails_on_corrupted_inventory(capsys, monkeypatch):
    bad = srf.CurveInventory(srf.negative_curves(5).minus_one, (srf.DELTA_12, srf.DELTA_123))
    monkeypatch.setitem(srf._inventory_override, 5, bad)
    code, out, _ = run(capsys, "verify", "--quick")
    report = json.loads(out)
    assert code == 1 and not report["ok"]
    assert report["results"]["types"][5]["error"]["code"] == "UnrecognizedPattern"
    code, out, _ = run(capsys, "tables", "--type", "5")
    assert code == 1 and json.loads(out)["error"]["code"] == "UnrecognizedPattern"


def test_console_script_is_deterministic(tmp_path):
    path = write(tmp_path, "p.json", [PENCIL, W_TENSOR])
    env = dict(os.environ, DP6_SEED="1")
    cmd = [sys.executable, "-m", "dp6.cli", "classify", "pencil", path]
    a = subprocess.run(cmd, capture_output=True, env=env)
    b = subprocess.run(cmd, capture_output=True, env=env)
    assert a.returncode == b.returncode == 2
    assert a.stdout == b.stdout
