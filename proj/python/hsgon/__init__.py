"""Schreier graphs, coset partitions of free groups and their vanishing sums."""

import json

from ._hsgon import (
    HsgonError,
    SchreierGraph,
    fold,
    from_action,
    subgroup_from_json,
)
from . import _hsgon

__all__ = [
    "HsgonError",
    "SchreierGraph",
    "analyze",
    "census",
    "fold",
    "from_action",
    "graph_report",
    "random_partition",
    "subgroup_from_json",
    "verify_partition",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def graph_report(subgroup):
    return json.loads(_hsgon.graph_report(_text(subgroup)))


def verify_partition(partition):
    return json.loads(_hsgon.verify_partition(_text(partition)))


def census(partition, k_max=6):
    return json.loads(_hsgon.census(_text(partition), k_max))


def analyze(partition, k_max=8):
    return json.loads(_hsgon.analyze(_text(partition), k_max))


def random_partition(seed, depth=2, rank=2, target_period=0, guard=256, coherent_percent=0):
    return json.loads(_hsgon.random_partition(seed, depth, rank, target_period, guard, coherent_percent))
