"""Compiled inner loops.  Same signatures as ``_numpy_kernels``.

Permutations are int64 rows with values ``1..n``.
"""

import numpy as np
from numba import njit

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_ZERO = np.uint64(0)
_ONE = np.uint64(1)


@njit(cache=True, nogil=True)
def _mix(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@njit(cache=True, nogil=True)
def _decompose_stats(a, n):
    # returns (minimal range of the whole row or 0, number of summands)
    lo = 0
    hi = n
    blocks = 0
    first = -1
    while hi > lo:
        w = hi - lo
        found = 0
        top = lo
        for k in range(1, w // 2 + 1):
            v = a[lo + k - 1]
            if v > top:
                top = v
            if top == lo + k:
                shift = w - k
                ok = True
                for j in range(k):
                    if a[hi - k + j] != a[lo + j] + shift:
                        ok = False
                        break
                if ok:
                    found = k
                    break
        if first < 0:
            first = found
        if found == 0:
            break
        blocks += 2
        lo += found
        hi -= found
    if first < 0:
        first = 0
    return first, blocks + 1


@njit(cache=True, nogil=True)
def _next_permutation(a, start, n):
    # lexicographic successor of a[start:n] in place; False when exhausted
    i = n - 2
    while i >= start and a[i] >= a[i + 1]:
        i -= 1
    if i < start:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    lo = i + 1
    hi = n - 1
    while lo < hi:
        a[lo], a[hi] = a[hi], a[lo]
        lo += 1
        hi -= 1
    return True


@njit(cache=True, nogil=True)
def _start_row(n, prefix):
    a = np.empty(n, dtype=np.int64)
    used = np.zeros(n + 1, dtype=np.bool_)
    d = prefix.shape[0]
    for i in range(d):
        a[i] = prefix[i]
        used[prefix[i]] = True
    pos = d
    for v in range(1, n + 1):
        if not used[v]:
            a[pos] = v
            pos += 1
    return a


@njit(cache=True, nogil=True)
def classify_block(n, prefix):
    """Tally every permutation of size ``n`` that starts with ``prefix``.

    Returns ``(block_hist, range_hist)`` where ``block_hist[b]`` counts rows
    with ``b`` summands and ``range_hist[k]`` rows with minimal range ``k``
    (``k = 0`` for non-self-overlapping rows).
    """
    block_hist = np.zeros(n + 2, dtype=np.int64)
    range_hist = np.zeros(n + 1, dtype=np.int64)
    a = _start_row(n, prefix)
    d = prefix.shape[0]
    while True:
        first, blocks = _decompose_stats(a, n)
        block_hist[blocks] += 1
        range_hist[first] += 1
        if not _next_permutation(a, d, n):
            break
    return block_hist, range_hist


@njit(cache=True, nogil=True)
def _window_hits(a, n, offsets, p):
    hits = 0
    for i in range(n - p + 1):
        base = a[i]
        ok = True
        for j in range(1, p):
            if a[i + j] - base != offsets[j]:
                ok = False
                break
        if ok:
            hits += 1
    return hits


@njit(cache=True, nogil=True)
def pattern_block(n, prefix, patterns):
    """``out[q, m]`` = rows starting with ``prefix`` having exactly ``m``
    very tight occurrences of ``patterns[q]``."""
    count, p = patterns.shape
    offsets = np.empty((count, p), dtype=np.int64)
    for q in range(count):
        for j in range(p):
            offsets[q, j] = patterns[q, j] - patterns[q, 0]
    out = np.zeros((count, n + 1), dtype=np.int64)
    a = _start_row(n, prefix)
    d = prefix.shape[0]
    while True:
        for q in range(count):
            out[q, _window_hits(a, n, offsets[q], p)] += 1
        if not _next_permutation(a, d, n):
            break
    return out


@njit(cache=True, nogil=True)
def row_stats(rows):
    """Per-row ``(minimal range, summands)`` for an ``(R, n)`` array."""
    r, n = rows.shape
    first = np.empty(r, dtype=np.int64)
    blocks = np.empty(r, dtype=np.int64)
    for i in range(r):
        first[i], blocks[i] = _decompose_stats(rows[i], n)
    return first, blocks


@njit(cache=True, nogil=True)
def row_pattern_hits(rows, pattern):
    r, n = rows.shape
    p = pattern.shape[0]
    offsets = pattern - pattern[0]
    out = np.empty(r, dtype=np.int64)
    for i in range(r):
        out[i] = _window_hits(rows[i], n, offsets, p)
    return out


@njit(cache=True, nogil=True)
def sample_rows(n, seed, start, count):
    """Rows ``start..start+count-1`` of a sampling run.

    Row ``s`` is the Fisher-Yates shuffle driven by SplitMix64 seeded with
    the ``s``-th SplitMix64 output of ``seed``.
    """
    out = np.empty((count, n), dtype=np.int64)
    for t in range(count):
        state = _mix(seed + (np.uint64(start + t) + _ONE) * _GAMMA)
        for v in range(n):
            out[t, v] = v + 1
        for i in range(n - 1, 0, -1):
            bound = np.uint64(i + 1)
            thresh = (_ZERO - bound) % bound
            while True:
                state = state + _GAMMA
                x = _mix(state)
                if x >= thresh:
                    break
            j = np.int64(x % bound)
            tmp = out[t, i]
            out[t, i] = out[t, j]
            out[t, j] = tmp
    return out
