import json
import os
import subprocess
from pathlib import Path

BIN = os.environ["HSGON_BIN"]
DATA = Path(os.environ["HSGON_DATA"])


def run(*args):
    proc = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_graph_reports():
    code, out, _ = run("graph", DATA / "subgroup_H.json")
    assert code == 0
    r = json.loads(out)
    assert (r["index"], r["period"]) == (4, 1)
    code, out, _ = run("graph", DATA / "subgroup_N.json")
    r = json.loads(out)
    assert (r["index"], r["period"]) == (4, 2)
    assert r["denominator"]["text"] == "1 - 4z^2"


def test_graph_infinite_index():
    code, _, err = run("graph", DATA / "infinite_index.json")
    assert code == 2
    assert json.loads(err)["error"] == "InfiniteIndex"


def test_missing_file():
    code, _, err = run("graph", DATA / "no_such_file.json")
    assert code == 2


def test_analyze_three_parts(tmp_path):
    code, out, _ = run("analyze", DATA / "partition_L_Na_Nab.json", "--svg-dir", tmp_path)
    assert code == 0
    r = json.loads(out)
    assert r["h"] == 2 and r["J"] == [2, 3]
    assert r["multiplicity"] == "proven"
    assert "timing" not in r
    assert (tmp_path / "polygon_1.svg").read_text().startswith("<?xml")


def test_analyze_is_byte_identical():
    a = run("analyze", DATA / "partition_N_cosets.json")
    b = run("analyze", DATA / "partition_N_cosets.json")
    assert a == b
    r = json.loads(a[1])
    assert r["h"] == 2 and len(r["J"]) == 4


def test_timing_flag():
    code, out, _ = run("analyze", DATA / "partition_L_Na_Nab.json", "--timing")
    assert code == 0
    assert json.loads(out)["timing"]["seconds"] >= 0


def test_not_covering():
    code, _, err = run("analyze", DATA / "not_covering.json")
    assert code == 3
    e = json.loads(err)
    assert e["error"] == "NotCovering"
    assert len(e["info"]) == 4


def test_census():
    code, out, _ = run("census", DATA / "partition_L_Na_Nab.json", "--kmax", 1)
    assert code == 0
    assert [p["counts"] for p in json.loads(out)["parts"]] == [[1, 1], [0, 1], [0, 0]]


def test_random_deterministic_and_valid(tmp_path):
    a = run("random", "--seed", 1, "--depth", 2)
    b = run("random", "--seed", 1, "--depth", 2)
    assert a[0] == 0 and a == b
    path = tmp_path / "p.json"
    path.write_text(a[1])
    code, out, _ = run("analyze", path)
    assert code == 0


def test_random_guard():
    code, _, err = run("random", "--guard", 2, "--depth", 5)
    assert code == 4
    assert json.loads(err)["error"] == "GuardExceeded"


def test_random_target_period(tmp_path):
    code, out, _ = run("random", "--seed", 4, "--depth", 3, "--target-period", 3)
    assert code == 0
    path = tmp_path / "p.json"
    path.write_text(out)
    assert json.loads(run("analyze", path)[1])["h"] == 3
