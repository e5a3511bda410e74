"""Definitional (slow) checks used as independent ground truth for the
fast detectors in :mod:`selfoverlap.perm`."""

from __future__ import annotations

from ..perm import Permutation, PalindromicDecomposition, pattern_of


def literal_is_range(sigma: Permutation, k: int) -> bool:
    """The three conditions verbatim: both end intervals invariant and the
    first/last ``k`` entries order-isomorphic."""
    vals = sigma.values
    n = len(vals)
    low = set(vals[:k]) == set(range(1, k + 1))
    high = set(vals[n - k:]) == set(range(n - k + 1, n + 1))
    return low and high and pattern_of(vals[:k]) == pattern_of(vals[n - k:])


def literal_ranges(sigma: Permutation) -> tuple[int, ...]:
    return tuple(k for k in range(1, len(sigma)) if literal_is_range(sigma, k))


def literal_nso(seq) -> bool:
    """Non-self-overlapping test on the standardized pattern of ``seq``."""
    return not literal_ranges(pattern_of(seq))


def all_palindromic_decompositions(sigma: Permutation) -> list[PalindromicDecomposition]:
    """Every way of writing ``sigma`` as ``pi_1+...+pi_m+tau+pi_m+...+pi_1``
    with all blocks non-self-overlapping and ``tau`` possibly empty."""
    vals = sigma.values
    found: list[PalindromicDecomposition] = []

    def walk(lo: int, hi: int, prefix: tuple[Permutation, ...]):
        w = hi - lo
        if w == 0:
            found.append(PalindromicDecomposition(prefix, Permutation(())))
            return
        window = vals[lo:hi]
        if literal_nso(window):
            found.append(PalindromicDecomposition(prefix, pattern_of(window)))
        for l in range(1, w // 2 + 1):
            head = vals[lo:lo + l]
            tail = vals[hi - l:hi]
            if set(head) != set(range(lo + 1, lo + l + 1)):
                continue
            if any(t != h + (w - l) for h, t in zip(head, tail)):
                continue
            if literal_nso(head):
                walk(lo + l, hi - l, prefix + (pattern_of(head),))

    walk(0, len(vals), ())
    return found
