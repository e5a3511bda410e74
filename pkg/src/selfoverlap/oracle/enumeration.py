"""Exhaustive classification of S_n.

S_n is split into lexicographic blocks by a fixed-length prefix; blocks
are processed independently (optionally on a thread pool, the compiled
kernels release the GIL) and tallies are merged by addition, so results do
not depend on the number of workers.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial

import numpy as np

from ..errors import PatternLargerThanHost, SizeCapExceeded
from ..perm import Permutation
from .backend import get_backend

HARD_MAX_N = 13
DEFAULT_MAX_N = int(os.environ.get("SELFOVERLAP_MAX_N", "11"))


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    total: int
    so_count: int
    nso_count: int
    block_histogram: dict[int, int]
    range_histogram: dict[int, int]


def _check_cap(n: int, max_n: int | None) -> None:
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if cap > HARD_MAX_N:
        raise SizeCapExceeded(f"cap {cap} exceeds the hard limit {HARD_MAX_N}")
    if not 1 <= n <= cap:
        raise SizeCapExceeded(f"n = {n} outside 1..{cap}")


def _prefixes(n: int) -> list[np.ndarray]:
    # numpy blocks hold at most 9! rows
    depth = min(n, max(1, n - 9))
    return [np.array(p, dtype=np.int64) for p in itertools.permutations(range(1, n + 1), depth)]


def default_workers() -> int:
    return os.cpu_count() or 1


def _run_blocks(fn, prefixes, workers):
    workers = workers or default_workers()
    if workers <= 1:
        return [fn(p) for p in prefixes]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, prefixes))


def enumerate_classify(n: int, workers: int | None = None, max_n: int | None = None,
                       backend: str | None = None) -> ClassificationReport:
    """Classify every permutation of size ``n`` by self-overlap, number of
    palindromic summands and minimal overlapping range."""
    _check_cap(n, max_n)
    kernels = get_backend(backend)
    parts = _run_blocks(lambda p: kernels.classify_block(n, p), _prefixes(n), workers)
    blocks = sum(p[0] for p in parts)
    ranges = sum(p[1] for p in parts)
    nso = int(blocks[1])
    total = factorial(n)
    return ClassificationReport(
        n=n,
        total=total,
        so_count=total - nso,
        nso_count=nso,
        block_histogram={b: int(c) for b, c in enumerate(blocks) if c},
        range_histogram={k: int(c) for k, c in enumerate(ranges) if c and k},
    )


def brute_pattern_tables(patterns: list[Permutation], n: int, workers: int | None = None,
                         max_n: int | None = None, backend: str | None = None) -> list[dict[int, int]]:
    """Occurrence histograms for several same-size patterns in one pass."""
    _check_cap(n, 11 if max_n is None else max_n)
    if not patterns:
        return []
    p = len(patterns[0])
    if any(len(q) != p for q in patterns):
        raise ValueError("patterns must share one size")
    if p > n:
        raise PatternLargerThanHost(f"pattern size {p} exceeds host size {n}")
    kernels = get_backend(backend)
    pats = np.array([q.values for q in patterns], dtype=np.int64)
    parts = _run_blocks(lambda pre: kernels.pattern_block(n, pre, pats), _prefixes(n), workers)
    merged = sum(parts)
    return [{m: int(c) for m, c in enumerate(row) if c} for row in merged]


def brute_pattern_table(pi: Permutation, n: int, workers: int | None = None,
                        max_n: int | None = None, backend: str | None = None):
    from ..patterns import PatternCountTable

    counts = brute_pattern_tables([pi], n, workers, max_n, backend)[0]
    return PatternCountTable(n, pi, counts)
