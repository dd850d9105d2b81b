"""Seeded generators for the two benchmark key populations, plus dataset
file I/O.

Matric keys are two lowercase letters followed by four zero-padded digits
("sj3099"); IPv4 keys are dotted quads with each octet in [0, octet_max].
Generation draws uniform indices into the key space from SplitMix64 and
rejects repeats, so a (kind, count, seed) triple yields the same keys on
every platform.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from .hashers import SplitMix64

MATRIC_KEYSPACE = 26 * 26 * 10_000


class DatasetFormatError(ValueError):
    """Malformed dataset file; carries the offending 1-based line number."""

    def __init__(self, path: str | os.PathLike, line_number: int, reason: str) -> None:
        super().__init__(f"{path}: line {line_number}: {reason}")
        self.path = path
        self.line_number = line_number


def gen_matric(count: int, seed: int) -> list[str]:
    """count distinct matriculation-style keys, deterministic per seed."""
    if count < 0:
        raise ValueError("count must be non-negative")
    if count > MATRIC_KEYSPACE:
        raise ValueError(f"count {count} exceeds the matric key space of {MATRIC_KEYSPACE}")
    rng = SplitMix64(seed)
    keys: list[str] = []
    seen: set[int] = set()
    while len(keys) < count:
        idx = rng.below(MATRIC_KEYSPACE)
        if idx in seen:
            continue
        seen.add(idx)
        prefix, number = divmod(idx, 10_000)
        first, second = divmod(prefix, 26)
        keys.append(f"{chr(97 + first)}{chr(97 + second)}{number:04d}")
    return keys


def gen_ipv4(count: int, seed: int, octet_max: int = 255) -> list[str]:
    """count distinct dotted-quad keys with octets in [0, octet_max]."""
    if count < 0:
        raise ValueError("count must be non-negative")
    if not 0 <= octet_max <= 255:
        raise ValueError("octet_max must lie in [0, 255]")
    base = octet_max + 1
    space = base ** 4
    if count > space:
        raise ValueError(f"count {count} exceeds the address space of {space}")
    rng = SplitMix64(seed)
    keys: list[str] = []
    seen: set[int] = set()
    while len(keys) < count:
        idx = rng.below(space)
        if idx in seen:
            continue
        seen.add(idx)
        rest, x4 = divmod(idx, base)
        rest, x3 = divmod(rest, base)
        x1, x2 = divmod(rest, base)
        keys.append(f"{x1}.{x2}.{x3}.{x4}")
    return keys


def save_dataset(path: str | os.PathLike, keys: Iterable[str]) -> None:
    """Write keys one per line, LF endings, UTF-8, no header."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for key in keys:
            fh.write(f"{key}\n")


def load_dataset(path: str | os.PathLike) -> list[str]:
    """Read a dataset file back; blank lines and control characters are
    format errors reported with their line number."""
    with open(path, "r", encoding="utf-8", newline="\n") as fh:
        data = fh.read()
    if data == "":
        return []
    lines = data.split("\n")
    if lines[-1] == "":
        lines.pop()  # final LF, not a trailing blank line
    keys: list[str] = []
    for number, line in enumerate(lines, start=1):
        if line == "":
            raise DatasetFormatError(path, number, "blank line")
        if any(ord(ch) < 0x20 or ord(ch) == 0x7F for ch in line):
            raise DatasetFormatError(path, number, "control character in key")
        keys.append(line)
    return keys
