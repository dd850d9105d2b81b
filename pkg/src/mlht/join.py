"""Equi-join of two keyed datasets.

hash_join loads the larger side into a multilevel table and probes it with
the smaller; nested_loop_join is the exhaustive pairwise scan that serves
as its correctness oracle. Keys must be unique within each side, so the
join is one-to-one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Sequence

from .hashers import _as_bytes
from .table import MultiLevelTable, TableConfig


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class JoinResult:
    """matches holds (key, left payload, right payload) for every key
    present on both sides, in probe-side input order."""

    matches: tuple[tuple[Any, Any, Any], ...]
    build_side: Side
    probe_comparisons: int


def _as_pairs(entries: Iterable, side: str) -> list[tuple[Any, Any]]:
    pairs = list(entries)
    seen: set[bytes] = set()
    for key, _ in pairs:
        k = _as_bytes(key)
        if k in seen:
            raise ValueError(f"duplicate key {key!r} in {side} input")
        seen.add(k)
    return pairs


def _larger_side(left: Sequence, right: Sequence) -> Side:
    # ties build on the right
    return Side.LEFT if len(left) > len(right) else Side.RIGHT


def hash_join(left: Iterable, right: Iterable,
              config: TableConfig | None = None) -> JoinResult:
    """Join two (key, payload) sequences through a multilevel table."""
    left = _as_pairs(left, "left")
    right = _as_pairs(right, "right")
    build_side = _larger_side(left, right)
    build, probe = (left, right) if build_side is Side.LEFT else (right, left)

    table = MultiLevelTable(config)
    for key, payload in build:
        table.insert(key, payload)

    matches: list[tuple[Any, Any, Any]] = []
    comparisons = 0
    for key, payload in probe:
        result = table.lookup(key)
        comparisons += result.comparisons
        if result.found:
            if build_side is Side.LEFT:
                matches.append((key, result.value, payload))
            else:
                matches.append((key, payload, result.value))
    return JoinResult(tuple(matches), build_side, comparisons)


def nested_loop_join(left: Iterable, right: Iterable) -> JoinResult:
    """Scan the whole right side for every left key; O(n*m) worst case.

    Matches come out in left input order; probe_comparisons counts every
    key-equality test the scans perform.
    """
    left = _as_pairs(left, "left")
    right = _as_pairs(right, "right")
    right_keys = [_as_bytes(key) for key, _ in right]

    matches: list[tuple[Any, Any, Any]] = []
    comparisons = 0
    for key, left_payload in left:
        k = _as_bytes(key)
        try:
            pos = right_keys.index(k)  # sequential scan; unique keys let it stop at the hit
        except ValueError:
            comparisons += len(right_keys)
            continue
        comparisons += pos + 1
        matches.append((key, left_payload, right[pos][1]))
    return JoinResult(tuple(matches), _larger_side(left, right), comparisons)
