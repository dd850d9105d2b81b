"""Benchmarks over the multilevel table: comparison counts per geometry,
the flat perfect-hash-style baseline, and lookup timing.

Comparison counts are the primary, fully deterministic metric; wall-clock
numbers come from a monotonic clock and are reported but never asserted.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .hashers import HasherSpec
from .table import LevelStats, MultiLevelTable, TableConfig


@dataclass(frozen=True)
class TimingReport:
    depth: int
    probe_count: int
    repetitions: int
    elapsed_ns: int
    per_probe_ns: float
    comparisons: int


def build_from_keys(keys: Sequence[bytes | str], config: TableConfig) -> MultiLevelTable:
    """Load keys (payload-free) into a fresh table."""
    table = MultiLevelTable(config)
    for key in keys:
        table.insert(key)
    return table


def comparison_table(keys: Sequence[bytes | str],
                     geometries: Sequence[TableConfig]) -> list[LevelStats]:
    """One LevelStats per geometry, all built from the same key set."""
    return [build_from_keys(keys, config).stats() for config in geometries]


def flat_baseline(keys: Sequence[bytes | str], m: int, hasher: HasherSpec) -> LevelStats:
    """Single-level table of m buckets under one hasher; isolates what the
    extra levels buy over simply using as many flat buckets."""
    config = TableConfig(depth=0, bucket_counts=(m,), hashers=(hasher,))
    return build_from_keys(keys, config).stats()


def _probe_total(table: MultiLevelTable, probes: Sequence[bytes | str],
                 repetitions: int) -> int:
    total = 0
    for _ in range(repetitions):
        for probe in probes:
            total += table.lookup(probe).comparisons
    return total


def lookup_timing(keys: Sequence[bytes | str], probes: Sequence[bytes | str],
                  config: TableConfig, repetitions: int = 1,
                  parallel: int = 0) -> TimingReport:
    """Build a table from keys, run repetitions x len(probes) lookups.

    parallel > 1 splits the probe list over that many threads; the
    comparison total is identical either way, only elapsed_ns moves.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    if not probes:
        raise ValueError("probes must be non-empty")
    table = build_from_keys(keys, config)
    start = time.perf_counter_ns()
    if parallel > 1:
        chunk = (len(probes) + parallel - 1) // parallel
        slices = [probes[i:i + chunk] for i in range(0, len(probes), chunk)]
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            comparisons = sum(pool.map(
                lambda part: _probe_total(table, part, repetitions), slices))
    else:
        comparisons = _probe_total(table, probes, repetitions)
    elapsed_ns = time.perf_counter_ns() - start
    lookups = repetitions * len(probes)
    return TimingReport(
        depth=config.depth,
        probe_count=len(probes),
        repetitions=repetitions,
        elapsed_ns=elapsed_ns,
        per_probe_ns=elapsed_ns / lookups,
        comparisons=comparisons,
    )
