"""Multilevel chained hash table.

A table of depth d hashes a key through d+1 levels of buckets, each level
with its own hash function and bucket count, and stores it in an
insertion-ordered chain at the deepest level. All sub-tables exist from
construction, so a depth-d geometry always has prod(bucket_counts) leaf
chains. Lookup cost is counted as key-equality tests inside the leaf
chain: the 1-based chain position on a hit, the full chain length on a
miss.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .hashers import AP, JENKINS, PJW, HasherSpec, _as_bytes, bucket_index, hash_key

DEFAULT_BUCKETS = (7, 5, 3)
DEFAULT_HASHERS = (JENKINS, PJW, AP)


@dataclass(frozen=True)
class TableConfig:
    """Depth plus per-level bucket counts and hasher assignment.

    Omitted bucket_counts/hashers default to (7, 5, 3) and
    (jenkins, pjw, ap) truncated to depth+1 levels.
    """

    depth: int = 2
    bucket_counts: tuple[int, ...] = ()
    hashers: tuple[HasherSpec, ...] = ()

    def __post_init__(self) -> None:
        if self.depth not in (0, 1, 2):
            raise ValueError("depth must be 0, 1 or 2")
        levels = self.depth + 1
        object.__setattr__(self, "bucket_counts",
                           tuple(self.bucket_counts) or DEFAULT_BUCKETS[:levels])
        object.__setattr__(self, "hashers",
                           tuple(self.hashers) or DEFAULT_HASHERS[:levels])
        if len(self.bucket_counts) != levels:
            raise ValueError(f"depth {self.depth} needs {levels} bucket counts")
        if len(self.hashers) != levels:
            raise ValueError(f"depth {self.depth} needs {levels} hashers")
        if any(b < 1 for b in self.bucket_counts):
            raise ValueError("bucket counts must be >= 1")

    @property
    def leaf_count(self) -> int:
        n = 1
        for b in self.bucket_counts:
            n *= b
        return n


@dataclass(frozen=True)
class Entry:
    key: bytes | str
    value: Any = None


@dataclass(frozen=True)
class LookupResult:
    found: bool
    value: Any
    comparisons: int
    path: tuple[int, ...]


@dataclass(frozen=True)
class LevelStats:
    """Chain statistics of one table configuration.

    average is the exact mean 1-based chain position over all stored keys
    (successful-search cost); histogram maps chain length to the number of
    leaf chains of that length.
    """

    depth: int
    size: int
    bucket_counts: tuple[int, ...]
    average: Fraction
    worst: int
    histogram: dict[int, int]

    @property
    def average_rounded(self) -> int:
        """average rounded half-up to an integer."""
        return int(self.average + Fraction(1, 2))


class MultiLevelTable:
    """The nested table. Leaves live in a flat array addressed by the
    mixed-radix bucket path; each leaf keeps parallel key/value lists in
    insertion order, so a chain scan is a plain list scan."""

    def __init__(self, config: TableConfig | None = None) -> None:
        self.config = config if config is not None else TableConfig()
        leaf_count = self.config.leaf_count
        self._chain_keys: list[list[bytes]] = [[] for _ in range(leaf_count)]
        self._chain_values: list[list[Any]] = [[] for _ in range(leaf_count)]
        self._size = 0

    def __len__(self) -> int:
        return self._size

    @property
    def size(self) -> int:
        return self._size

    def path_for(self, key: bytes | str) -> tuple[int, ...]:
        """Bucket index chosen at each level for this key."""
        k = _as_bytes(key)
        return tuple(
            bucket_index(hash_key(spec, k), count)
            for spec, count in zip(self.config.hashers, self.config.bucket_counts)
        )

    def _flat_index(self, path: Sequence[int]) -> int:
        idx = 0
        for p, count in zip(path, self.config.bucket_counts):
            idx = idx * count + p
        return idx

    def insert(self, key: bytes | str, value: Any = None) -> Any:
        """Map semantics: returns the previous value if the key existed
        (keeping its chain position), else None."""
        k = _as_bytes(key)
        if not k:
            raise ValueError("key must be non-empty")
        chain = self._flat_index(self.path_for(k))
        keys = self._chain_keys[chain]
        try:
            pos = keys.index(k)
        except ValueError:
            keys.append(k)
            self._chain_values[chain].append(value)
            self._size += 1
            return None
        values = self._chain_values[chain]
        previous = values[pos]
        values[pos] = value
        return previous

    def lookup(self, key: bytes | str) -> LookupResult:
        k = _as_bytes(key)
        path = self.path_for(k)
        keys = self._chain_keys[self._flat_index(path)]
        try:
            pos = keys.index(k)  # sequential equality scan of the chain
        except ValueError:
            return LookupResult(False, None, len(keys), path)
        return LookupResult(True, self._chain_values[self._flat_index(path)][pos],
                            pos + 1, path)

    def remove(self, key: bytes | str) -> Any:
        """Removes the key if present and returns its value; later chain
        entries keep their relative order."""
        k = _as_bytes(key)
        chain = self._flat_index(self.path_for(k))
        keys = self._chain_keys[chain]
        try:
            pos = keys.index(k)
        except ValueError:
            return None
        keys.pop(pos)
        self._size -= 1
        return self._chain_values[chain].pop(pos)

    def chain_keys(self, path: Sequence[int]) -> list[bytes]:
        """Keys of the leaf chain at the given bucket path, insertion order."""
        if len(path) != self.config.depth + 1:
            raise ValueError(f"path must have {self.config.depth + 1} indices")
        for p, count in zip(path, self.config.bucket_counts):
            if not 0 <= p < count:
                raise ValueError(f"path index {p} out of range")
        return list(self._chain_keys[self._flat_index(path)])

    def chain_lengths(self) -> list[int]:
        return [len(c) for c in self._chain_keys]

    def stats(self) -> LevelStats:
        lengths = self.chain_lengths()
        if self._size == 0:
            return LevelStats(self.config.depth, 0, self.config.bucket_counts,
                              Fraction(0), 0, dict(Counter(lengths)))
        # sum of 1-based positions over a chain of length L is L(L+1)/2
        position_sum = sum(length * (length + 1) // 2 for length in lengths)
        return LevelStats(
            depth=self.config.depth,
            size=self._size,
            bucket_counts=self.config.bucket_counts,
            average=Fraction(position_sum, self._size),
            worst=max(lengths),
            histogram=dict(Counter(lengths)),
        )


def build(config: TableConfig, entries: Iterable[Entry | tuple[Any, Any]]) -> MultiLevelTable:
    """Bulk-load a table. Duplicate keys keep their first chain position;
    the last value wins."""
    table = MultiLevelTable(config)
    for entry in entries:
        if isinstance(entry, Entry):
            table.insert(entry.key, entry.value)
        else:
            key, value = entry
            table.insert(key, value)
    return table
