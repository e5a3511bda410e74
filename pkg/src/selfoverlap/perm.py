"""Permutations in one-line notation, self-overlap detection and the
canonical palindromic decomposition.

A permutation ``sigma`` of size ``n`` is *self-overlapping* with range ``k``
(``1 <= k < n``) when ``{1..k}`` and ``{n-k+1..n}`` are both invariant and the
first and last ``k`` entries are order-isomorphic.  Every permutation splits
uniquely as ``pi_1 + ... + pi_m + tau + pi_m + ... + pi_1`` (direct sums) with
all blocks non-self-overlapping; :func:`decompose` computes that split.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateEntry, EmptyPermutation, MalformedToken, NotABijection

__all__ = [
    "Permutation",
    "OverlapProfile",
    "PalindromicDecomposition",
    "parse_permutation",
    "pattern_of",
    "is_isomorphic",
    "direct_sum",
    "reverse",
    "overlap_profile",
    "minimal_range",
    "is_self_overlapping",
    "decompose",
    "reconstruct",
    "block_count",
]

BONA = "bona"
MYERS = "myers"


@dataclass(frozen=True)
class Permutation:
    """Immutable permutation of ``1..n`` in one-line notation."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        n = len(vals)
        if sorted(vals) != list(range(1, n + 1)):
            raise NotABijection(f"{list(vals)} is not a permutation of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, idx):
        return self.values[idx]

    def __str__(self) -> str:
        return " ".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"Permutation({self.compact()})"

    def compact(self) -> str:
        """Digit-string rendering when every value is a single digit."""
        if len(self) <= 9:
            return "".join(map(str, self.values))
        return str(self)


_SEPARATORS = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"2 1 4 3"``, ``"2,1,4,3"`` or the digit string ``"2143"``.

    A lone multi-character token is read as a digit string, which is only
    meaningful for permutations of size at most 9.
    """
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    values = []
    for tok in tokens:
        if not tok.isdigit():
            raise MalformedToken(f"not a positive integer: {tok!r}")
        values.append(int(tok))
    return Permutation(tuple(values))


def pattern_of(seq: Sequence[int]) -> Permutation:
    """Standardize a sequence of distinct integers to the order-isomorphic
    permutation, e.g. ``(5, 2, 8) -> 213``."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise DuplicateEntry(f"entries of {seq} are not distinct")
    rank = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return Permutation(tuple(rank[v] for v in seq))


def is_isomorphic(a: Sequence[int], b: Sequence[int]) -> bool:
    return len(a) == len(b) and pattern_of(a) == pattern_of(b)


def direct_sum(blocks: Iterable[Permutation]) -> Permutation:
    out: list[int] = []
    for block in blocks:
        shift = len(out)
        out.extend(v + shift for v in block)
    return Permutation(tuple(out))


def reverse(sigma: Permutation) -> Permutation:
    return Permutation(sigma.values[::-1])


@dataclass(frozen=True)
class OverlapProfile:
    """All overlapping ranges of a permutation, ascending."""

    n: int
    ranges: tuple[int, ...]

    @property
    def minimal(self) -> int | None:
        return self.ranges[0] if self.ranges else None

    @property
    def is_self_overlapping(self) -> bool:
        return bool(self.ranges)


# Given that positions 1..k hold exactly the values {1..k}, condition 2 and 3
# together are equivalent to the shift identity
#     sigma[n-k+j] == sigma[j] + (n-k),   0 <= j < k.
# Two permutations of integer intervals of the same length are isomorphic iff
# they agree up to a constant shift, and the shifted block then occupies
# exactly {n-k+1..n}.  A prefix of distinct positive values is {1..k} iff its
# maximum is k.


def _is_range(vals: Sequence[int], lo: int, hi: int, k: int) -> bool:
    # window vals[lo:hi] holds the values lo+1..hi
    shift = hi - lo - k
    for j in range(k):
        if vals[hi - k + j] != vals[lo + j] + shift:
            return False
    return True


def _window_ranges(vals: Sequence[int], lo: int, hi: int, limit: int) -> Iterator[int]:
    top = lo
    for k in range(1, limit + 1):
        top = max(top, vals[lo + k - 1])
        if top == lo + k and _is_range(vals, lo, hi, k):
            yield k


def overlap_profile(sigma: Permutation) -> OverlapProfile:
    """Every overlapping range ``k`` of ``sigma`` in ``1..n-1``.

    Ranges above ``n/2`` are reported too; the minimal one never exceeds
    ``n/2``.
    """
    n = len(sigma)
    if n == 0:
        raise EmptyPermutation("overlap profile of the empty permutation")
    return OverlapProfile(n, tuple(_window_ranges(sigma.values, 0, n, n - 1)))


def minimal_range(sigma: Permutation) -> int | None:
    n = len(sigma)
    if n == 0:
        raise EmptyPermutation("minimal range of the empty permutation")
    return next(_window_ranges(sigma.values, 0, n, n // 2), None)


def is_self_overlapping(sigma: Permutation, convention: str = BONA) -> bool:
    """Classify ``sigma``.

    Under the default (Bona) convention only ``sigma`` itself is tested.
    ``convention="myers"`` also counts ``sigma`` when its reverse is
    self-overlapping.
    """
    if minimal_range(sigma) is not None:
        return True
    if convention == MYERS:
        return minimal_range(reverse(sigma)) is not None
    if convention != BONA:
        raise ValueError(f"unknown convention {convention!r}")
    return False


@dataclass(frozen=True)
class PalindromicDecomposition:
    """``prefix[0] + ... + prefix[-1] + middle + prefix[-1] + ... + prefix[0]``."""

    prefix: tuple[Permutation, ...] = ()
    middle: Permutation = field(default_factory=lambda: Permutation(()))

    @property
    def m(self) -> int:
        return len(self.prefix)


def decompose(sigma: Permutation) -> PalindromicDecomposition:
    """Strip matching minimal-range blocks from both ends until the middle
    window is empty or non-self-overlapping."""
    vals = sigma.values
    n = len(vals)
    if n == 0:
        raise EmptyPermutation("decomposition of the empty permutation")
    lo, hi = 0, n
    prefix = []
    while hi > lo:
        k = next(_window_ranges(vals, lo, hi, (hi - lo) // 2), None)
        if k is None:
            break
        prefix.append(Permutation(tuple(v - lo for v in vals[lo:lo + k])))
        lo += k
        hi -= k
    middle = Permutation(tuple(v - lo for v in vals[lo:hi]))
    return PalindromicDecomposition(tuple(prefix), middle)


def reconstruct(d: PalindromicDecomposition) -> Permutation:
    return direct_sum([*d.prefix, d.middle, *reversed(d.prefix)])


def block_count(d: PalindromicDecomposition) -> int:
    """Number of summands ``2m + 1``; an empty middle still counts as one."""
    return 2 * d.m + 1
