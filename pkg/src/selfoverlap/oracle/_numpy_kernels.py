"""Vectorized fallback for the compiled kernels.

Whole blocks of permutations are materialized as ``(R, n)`` arrays and
classified column-wise, so memory grows with the block size; callers keep
blocks at most ``9!`` rows.
"""

from functools import lru_cache

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


@lru_cache(maxsize=12)
def _lex_indices(r):
    """All permutations of ``range(r)`` in lexicographic order, ``(r!, r)``."""
    if r == 0:
        return np.zeros((1, 0), dtype=np.int64)
    sub = _lex_indices(r - 1)
    parts = []
    for c in range(r):
        remaining = np.array([x for x in range(r) if x != c], dtype=np.int64)
        head = np.full((sub.shape[0], 1), c, dtype=np.int64)
        parts.append(np.hstack([head, remaining[sub]]))
    out = np.vstack(parts)
    out.setflags(write=False)
    return out


def block_rows(n, prefix):
    prefix = np.asarray(prefix, dtype=np.int64)
    rest = np.array(sorted(set(range(1, n + 1)) - set(prefix.tolist())), dtype=np.int64)
    tail = rest[_lex_indices(len(rest))]
    head = np.broadcast_to(prefix, (tail.shape[0], prefix.shape[0]))
    return np.hstack([head, tail])


def row_stats(rows):
    rows = np.asarray(rows, dtype=np.int64)
    r, n = rows.shape
    first = np.full(r, -1, dtype=np.int64)
    blocks = np.zeros(r, dtype=np.int64)
    lo = np.zeros(r, dtype=np.int64)
    hi = np.full(r, n, dtype=np.int64)
    active = np.arange(r)
    while active.size:
        a = rows[active]
        alo, ahi = lo[active], hi[active]
        w = ahi - alo
        found = np.zeros(active.size, dtype=np.int64)
        top = alo.copy()
        for k in range(1, int(w.max()) // 2 + 1):
            live = (found == 0) & (k <= w // 2)
            if not live.any():
                break
            col = np.minimum(alo + k - 1, n - 1)
            top = np.maximum(top, np.take_along_axis(a, col[:, None], 1)[:, 0])
            cand = live & (top == alo + k)
            if not cand.any():
                continue
            idx = np.flatnonzero(cand)
            j = np.arange(k)
            left = np.take_along_axis(a[idx], alo[idx, None] + j, 1)
            right = np.take_along_axis(a[idx], ahi[idx, None] - k + j, 1)
            ok = (right == left + (w[idx, None] - k)).all(axis=1)
            found[idx[ok]] = k
        fresh = first[active] < 0
        first[active[fresh]] = found[fresh]
        stop = found == 0
        blocks[active[stop]] += 1
        go = ~stop
        idx = active[go]
        blocks[idx] += 2
        lo[idx] += found[go]
        hi[idx] -= found[go]
        empty = lo[idx] == hi[idx]
        blocks[idx[empty]] += 1
        active = idx[~empty]
    return first, blocks


def classify_block(n, prefix):
    first, blocks = row_stats(block_rows(n, prefix))
    return (
        np.bincount(blocks, minlength=n + 2).astype(np.int64),
        np.bincount(first, minlength=n + 1).astype(np.int64),
    )


def row_pattern_hits(rows, pattern):
    rows = np.asarray(rows, dtype=np.int64)
    pattern = np.asarray(pattern, dtype=np.int64)
    n, p = rows.shape[1], pattern.shape[0]
    offsets = pattern[1:] - pattern[0]
    hits = np.zeros(rows.shape[0], dtype=np.int64)
    for i in range(n - p + 1):
        hits += ((rows[:, i + 1:i + p] - rows[:, i:i + 1]) == offsets).all(axis=1)
    return hits


def pattern_block(n, prefix, patterns):
    rows = block_rows(n, prefix)
    patterns = np.asarray(patterns, dtype=np.int64)
    out = np.zeros((patterns.shape[0], n + 1), dtype=np.int64)
    for q, pat in enumerate(patterns):
        out[q] = np.bincount(row_pattern_hits(rows, pat), minlength=n + 1)
    return out


def _mix(z):
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def sample_rows(n, seed, start, count):
    idx = np.arange(start, start + count, dtype=np.uint64)
    with np.errstate(over="ignore"):
        state = _mix(np.uint64(seed) + (idx + np.uint64(1)) * _GAMMA)
        out = np.tile(np.arange(1, n + 1, dtype=np.int64), (count, 1))
        rows = np.arange(count)
        for i in range(n - 1, 0, -1):
            bound = np.uint64(i + 1)
            thresh = np.uint64(((1 << 64) - (i + 1)) % (i + 1))
            state = state + _GAMMA
            x = _mix(state)
            bad = np.flatnonzero(x < thresh)
            while bad.size:
                state[bad] += _GAMMA
                x[bad] = _mix(state[bad])
                bad = bad[x[bad] < thresh]
            j = (x % bound).astype(np.int64)
            tmp = out[rows, j].copy()
            out[rows, j] = out[:, i]
            out[:, i] = tmp
    return out
