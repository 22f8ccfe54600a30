import json
from pathlib import Path

import pytest

import hsgon

DATA = Path(__file__).resolve().parents[2] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_fold_matches_action_form():
    n = hsgon.fold(["aa", "bb", "abba", "abaaba", "abab"])
    assert n.index == 4
    assert n.period == 2
    assert n == hsgon.from_action([[1, 0, 3, 2], [3, 2, 1, 0]])
    assert n.denominator() == ["1", "0", "-4"]


def test_generating_function_of_base_loop():
    n = hsgon.fold(["aa", "bb", "abba", "abaaba", "abab"])
    num, den = n.generating_function(0, 0)
    assert den == ["1", "0", "-4"]
    assert num == ["1", "0", "-2"]


def test_infinite_index_raises():
    with pytest.raises(hsgon.HsgonError, match="InfiniteIndex"):
        hsgon.fold(["a"])


def test_analyze_three_part_partition():
    report = hsgon.analyze(load("partition_L_Na_Nab.json"))
    assert report["h"] == 2
    assert report["J"] == [2, 3]
    assert [t["m"] for t in report["vanishing_sum"]["terms"]] == [1, 2]
    assert report["multiplicity"] == "proven"
    assert report["multiplicity_witness"] == {"index": 4, "parts": [2, 3]}


def test_not_covering_raises():
    with pytest.raises(hsgon.HsgonError, match="NotCovering"):
        hsgon.verify_partition(load("not_covering.json"))


def test_census_totals():
    census = hsgon.census(load("partition_N_cosets.json"), k_max=5)
    for k, total in enumerate(census["totals"]):
        assert sum(p["counts"][k] for p in census["parts"]) == int(total)


def test_random_partition_is_deterministic_and_valid():
    a = hsgon.random_partition(7, depth=3)
    assert a == hsgon.random_partition(7, depth=3)
    assert hsgon.verify_partition(a)["parts"]
    densities = sum(1 / p["subgroup"]["degree"] for p in a["parts"])
    assert densities == pytest.approx(1.0)


def test_random_partition_with_period():
    p = hsgon.random_partition(3, depth=3, target_period=4, coherent_percent=30)
    assert hsgon.analyze(p)["h"] == 4
