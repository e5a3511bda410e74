"""Reproducible uniform sampling and Monte-Carlo estimates.

The generator is SplitMix64 (Steele, Lea and Flood; constants as in
Vigna's reference code).  ``sample_uniform(n, seed)`` shuffles the identity
with Fisher-Yates, swapping position ``i`` (from ``n`` down to 2) with a
position drawn uniformly from ``1..i``; bounded draws reject raw outputs
below ``2^64 mod i`` so they are exactly uniform.

A Monte-Carlo run with seed ``s`` uses, for its ``t``-th sample, the seed
given by the ``t``-th SplitMix64 output of ``s``.  Samples are therefore
independent of how the run is split between workers or chunks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..perm import Permutation
from .backend import get_backend

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
CHUNK = 1 << 16


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Pure-Python reference generator."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return _mix(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``0..bound-1``."""
        thresh = (1 << 64) % bound
        while True:
            x = self.next()
            if x >= thresh:
                return x % bound


def derive_seed(seed: int, index: int) -> int:
    """The ``index``-th output of SplitMix64 started at ``seed``."""
    return _mix((seed + (index + 1) * GAMMA) & MASK64)


def sample_uniform(n: int, seed: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = SplitMix64(seed)
    a = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        a[i], a[j] = a[j], a[i]
    return Permutation(tuple(a))


def sample_run(n: int, seed: int, start: int, count: int, backend: str | None = None) -> np.ndarray:
    """Rows ``start..start+count-1`` of the run seeded with ``seed``; row
    ``t`` equals ``sample_uniform(n, derive_seed(seed, t))``."""
    return get_backend(backend).sample_rows(n, np.uint64(seed & MASK64), start, count)


@dataclass(frozen=True)
class SampleEstimate:
    samples: int
    hits: int
    seed: int

    @property
    def estimate(self) -> Fraction:
        return Fraction(self.hits, self.samples)

    @property
    def stderr(self) -> float:
        p = self.hits / self.samples
        return math.sqrt(p * (1 - p) / self.samples)

    def z_score(self, exact) -> float:
        """Deviation from ``exact`` in standard errors (inf if stderr is 0
        and the estimate is off)."""
        diff = abs(float(self.estimate - Fraction(exact)))
        if self.stderr == 0:
            return 0.0 if diff == 0 else math.inf
        return diff / self.stderr


def _hits(rows, event, m, pattern, kernels) -> int:
    if event == "so":
        first, _ = kernels.row_stats(rows)
        return int((first > 0).sum())
    if event == "blocks":
        _, blocks = kernels.row_stats(rows)
        return int((blocks == 2 * m + 1).sum())
    if event == "pattern":
        hits = kernels.row_pattern_hits(rows, np.array(pattern.values, dtype=np.int64))
        return int((hits == m).sum())
    raise ValueError(f"unknown event {event!r}")


def estimate_probability(event: str, n: int, samples: int, seed: int, *, m: int | None = None,
                         pattern: Permutation | None = None, backend: str | None = None) -> SampleEstimate:
    """Monte-Carlo frequency of ``event`` among uniform permutations of size ``n``.

    ``event`` is ``"so"``, ``"blocks"`` (exactly ``2m+1`` summands) or
    ``"pattern"`` (exactly ``m`` very tight occurrences of ``pattern``).
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if event in ("blocks", "pattern") and m is None:
        raise ValueError(f"event {event!r} needs m")
    if event == "pattern" and pattern is None:
        raise ValueError("pattern event needs a pattern")
    kernels = get_backend(backend)
    hits = 0
    for start in range(0, samples, CHUNK):
        count = min(CHUNK, samples - start)
        rows = kernels.sample_rows(n, np.uint64(seed & MASK64), start, count)
        hits += _hits(rows, event, m, pattern, kernels)
    return SampleEstimate(samples, hits, seed)
