"""Seeded input generation: random, sorted and nearly sorted integer arrays.

All randomness comes from SplitMix64.  Its k-th output (k = 1, 2, ...) for
seed s is ``mix(s + k * 0x9E3779B97F4A7C15 mod 2**64)``, so a whole stream
can be produced in one vectorised pass and reproduced bit-for-bit anywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Vigna's SplitMix64 generator."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def bounded(self, n: int) -> int:
        """Uniform-ish integer in [0, n) by 64x64 multiply-high (bias < n / 2**64)."""
        return (self.next_u64() * n) >> 64

    def split(self) -> SplitMix64:
        return SplitMix64(self.next_u64())

    def fill_u64(self, n: int) -> np.ndarray:
        """The next ``n`` outputs as a uint64 array; advances the state by n steps."""
        k = np.arange(1, n + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + k * np.uint64(GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
            z ^= z >> np.uint64(31)
        self.state = (self.state + n * GAMMA) & MASK64
        return z


class Kind(str, enum.Enum):
    RANDOM = "Random"
    SORTED = "Sorted"
    NEARLY_SORTED = "NearlySorted"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> Kind:
        key = text.strip().lower().replace("-", "").replace("_", "").replace(" ", "")
        for kind in cls:
            if kind.value.lower() == key:
                return kind
        raise ValueError(f"unknown distribution {text!r}; expected random, sorted or nearly-sorted")


@dataclass(frozen=True)
class Distribution:
    kind: Kind
    perturbation: float = 0.01

    def __post_init__(self):
        if not 0.0 <= self.perturbation <= 1.0:
            raise ValueError(f"perturbation must lie in [0, 1], got {self.perturbation}")

    def __str__(self) -> str:
        return str(self.kind)


RANDOM = Distribution(Kind.RANDOM)
SORTED = Distribution(Kind.SORTED)
NEARLY_SORTED = Distribution(Kind.NEARLY_SORTED)
DISTRIBUTIONS = (RANDOM, SORTED, NEARLY_SORTED)


@dataclass(frozen=True)
class GenSpec:
    size: int
    distribution: Distribution
    seed: int = 42


def swap_count(size: int, perturbation: float) -> int:
    if size < 2 or perturbation <= 0:
        return 0
    return max(1, math.floor(perturbation * size))


def generate(spec: GenSpec) -> list[int]:
    """Materialise the input described by ``spec`` as a list of Python ints.

    Random values cover the signed 64-bit range.  Sorted is ``0..size-1``.
    NearlySorted applies ``swap_count`` seeded index-pair swaps to Sorted.
    """
    n = spec.size
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    kind = spec.distribution.kind
    rng = SplitMix64(spec.seed)
    if kind is Kind.RANDOM:
        return rng.fill_u64(n).view(np.int64).tolist()
    out = list(range(n))
    if kind is Kind.NEARLY_SORTED:
        for _ in range(swap_count(n, spec.distribution.perturbation)):
            i = rng.bounded(n)
            j = rng.bounded(n)
            out[i], out[j] = out[j], out[i]
    return out
