"""String hash functions used by the multilevel table.

Jenkins one-at-a-time, PJW (the classic ELF variant) and AP are the three
named 32-bit string hashes; ``universal`` is the textbook family
h(x) = sum(a_i * x_i) mod m with coefficients drawn from a seeded
SplitMix64 stream. All arithmetic wraps at 32 bits (the universal
accumulator at 64) so every value is bit-identical across platforms.

Keys are hashed as their UTF-8 bytes; ``str`` arguments are encoded
transparently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

_MASK32 = 0xFFFFFFFF
_MASK64 = 0xFFFFFFFFFFFFFFFF


class Algorithm(str, Enum):
    JENKINS = "jenkins"
    PJW = "pjw"
    AP = "ap"
    UNIVERSAL = "universal"


class SplitMix64:
    """Deterministic 64-bit generator (SplitMix64 constants).

    Shared by the universal hasher and the dataset generators so that
    seeded runs reproduce byte-for-byte.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Next draw reduced mod bound."""
        return self.next_u64() % bound


@dataclass(frozen=True)
class HasherSpec:
    """Identifies one hash algorithm.

    Jenkins/PJW/AP carry no parameters. Universal carries the modulus m,
    a seed from which per-position coefficients are drawn, and optionally
    an explicit coefficient prefix (each in [0, m)) that overrides the
    drawn values for the leading key positions.
    """

    algorithm: Algorithm
    modulus: int | None = None
    seed: int = 0
    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.algorithm is Algorithm.UNIVERSAL:
            if self.modulus is None or self.modulus < 1:
                raise ValueError("universal hash requires modulus >= 1")
            if any(not 0 <= a < self.modulus for a in self.coefficients):
                raise ValueError("universal coefficients must lie in [0, modulus)")
        elif self.modulus is not None or self.seed != 0 or self.coefficients:
            raise ValueError(f"{self.algorithm.value} hash carries no parameters")


JENKINS = HasherSpec(Algorithm.JENKINS)
PJW = HasherSpec(Algorithm.PJW)
AP = HasherSpec(Algorithm.AP)


def universal(modulus: int, seed: int = 0, coefficients: tuple[int, ...] = ()) -> HasherSpec:
    return HasherSpec(Algorithm.UNIVERSAL, modulus=modulus, seed=seed,
                      coefficients=tuple(coefficients))


def _as_bytes(key: bytes | str) -> bytes:
    return key.encode("utf-8") if isinstance(key, str) else key


def jenkins_oaat(key: bytes | str) -> int:
    """Jenkins one-at-a-time hash of the key bytes."""
    h = 0
    for c in _as_bytes(key):
        h = (h + c) & _MASK32
        h = (h + (h << 10)) & _MASK32
        h ^= h >> 6
    h = (h + (h << 3)) & _MASK32
    h ^= h >> 11
    return (h + (h << 15)) & _MASK32


def pjw_hash(key: bytes | str) -> int:
    """PJW/ELF hash; the masking step keeps the result below 2**28."""
    h = 0
    for c in _as_bytes(key):
        h = ((h << 4) + c) & _MASK32
        g = h & 0xF0000000
        if g:
            h ^= g >> 24
        h &= ~g & _MASK32
    return h


def ap_hash(key: bytes | str) -> int:
    """AP hash: alternating mix per byte index, initial state 0xAAAAAAAA."""
    h = 0xAAAAAAAA
    for i, c in enumerate(_as_bytes(key)):
        if i & 1 == 0:
            h ^= ((h << 7) ^ (c * (h >> 3))) & _MASK32
        else:
            h ^= ~((h << 11) + (c ^ (h >> 5))) & _MASK32
    return h


def universal_hash(key: bytes | str, spec: HasherSpec) -> int:
    """sum(a_i * x_i) mod m over the key bytes.

    Coefficient a_i comes from spec.coefficients when i is inside the
    explicit prefix, otherwise it is draw #i of SplitMix64(spec.seed)
    reduced mod m. The sum accumulates in 64 bits before the final
    reduction.
    """
    if spec.algorithm is not Algorithm.UNIVERSAL:
        raise ValueError("spec does not describe a universal hash")
    m = spec.modulus
    data = _as_bytes(key)
    explicit = spec.coefficients
    stream = SplitMix64(spec.seed) if len(data) > len(explicit) else None
    acc = 0
    for i, x in enumerate(data):
        if i < len(explicit):
            a = explicit[i]
            if stream is not None:
                stream.next_u64()  # keep draw index aligned with position
        else:
            a = stream.below(m)
        acc = (acc + a * x) & _MASK64
    return acc % m


def bucket_index(hash_value: int, bucket_count: int) -> int:
    """Reduce a hash value to an index in [0, bucket_count)."""
    if bucket_count < 1:
        raise ValueError("bucket_count must be >= 1")
    return hash_value % bucket_count


def hash_key(spec: HasherSpec, key: bytes | str) -> int:
    """Hash under spec: 32-bit value for the named hashes, [0, m) for universal."""
    if spec.algorithm is Algorithm.JENKINS:
        return jenkins_oaat(key)
    if spec.algorithm is Algorithm.PJW:
        return pjw_hash(key)
    if spec.algorithm is Algorithm.AP:
        return ap_hash(key)
    return universal_hash(key, spec)
