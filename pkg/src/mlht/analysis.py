"""Bucket-distribution experiments: histogram a hasher over M buckets and
quantify how evenly it spreads a key set."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .hashers import HasherSpec, bucket_index, hash_key


@dataclass(frozen=True)
class Histogram:
    bucket_count: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class DistStats:
    mean: float
    min_load: int
    max_load: int
    stddev: float
    chi_square: float
    degrees_of_freedom: int


def histogram(spec: HasherSpec, keys: Iterable[bytes | str], bucket_count: int) -> Histogram:
    """Count how many keys each bucket receives under the given hasher."""
    if bucket_count < 1:
        raise ValueError("bucket_count must be >= 1")
    counts = [0] * bucket_count
    for key in keys:
        counts[bucket_index(hash_key(spec, key), bucket_count)] += 1
    return Histogram(bucket_count, tuple(counts))


def dist_stats(h: Histogram) -> DistStats:
    """Uniformity statistics: chi_square is sum((count - mean)^2) / mean
    against the flat expectation, 0 for an empty histogram."""
    mean = h.total / h.bucket_count
    squared_dev = sum((c - mean) ** 2 for c in h.counts)
    chi_square = squared_dev / mean if mean > 0 else 0.0
    return DistStats(
        mean=mean,
        min_load=min(h.counts),
        max_load=max(h.counts),
        stddev=math.sqrt(squared_dev / h.bucket_count),
        chi_square=chi_square,
        degrees_of_freedom=h.bucket_count - 1,
    )
