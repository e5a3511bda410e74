"""Truncated ordinary generating functions over Python integers and the
counting sequences of (non-)self-overlapping permutations.

Coefficients are plain ``int`` throughout, so nothing overflows; products
use the schoolbook convolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import NonUnitConstantTerm

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 z + ... + c_N z^N + O(z^(N+1))``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls((1,) + (0,) * order)

    @classmethod
    def from_sequence(cls, coeffs: Sequence[int], order: int) -> TruncatedSeries:
        """Pad or cut ``coeffs`` to exactly ``order + 1`` entries."""
        c = list(coeffs[: order + 1])
        return cls(tuple(c + [0] * (order + 1 - len(c))))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        return self + (-other)

    def __rsub__(self, other: int) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        return series_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> TruncatedSeries:
        if m < 0:
            raise ValueError("negative series power")
        out = TruncatedSeries.one(self.order)
        for _ in range(m):
            out = out * self
        return out


def series_multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (n + 1)
    for i in range(n + 1):
        ai = ac[i]
        if ai:
            for j in range(n + 1 - i):
                out[i + j] += ai * bc[j]
    return TruncatedSeries(tuple(out))


def series_substitute_square(a: TruncatedSeries) -> TruncatedSeries:
    """``a(z) -> a(z^2)`` keeping the input's truncation order."""
    out = [0] * (a.order + 1)
    for k in range(a.order // 2 + 1):
        out[2 * k] = a.coeffs[k]
    return TruncatedSeries(tuple(out))


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Integer-exact ``1/a``; requires ``a_0 = +-1``."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a0} is not a unit in Z")
    n = a.order
    b = [0] * (n + 1)
    b[0] = a0
    for k in range(1, n + 1):
        s = sum(a.coeffs[i] * b[k - i] for i in range(1, k + 1))
        b[k] = -s * a0
    return TruncatedSeries(tuple(b))


def factorial_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``P(z) = sum n! z^n``, all permutations including the empty one."""
    return TruncatedSeries(tuple(factorial(n) for n in range(order + 1)))


@lru_cache(maxsize=None)
def _nso_table(order: int) -> tuple[int, ...]:
    # [z^n] of N = P (1 - N(z^2)) - 1:  n_n = n! - sum_{1<=k<=n/2} n_k (n-2k)!
    nso = [0] * (order + 1)
    for n in range(1, order + 1):
        nso[n] = factorial(n) - sum(nso[k] * factorial(n - 2 * k) for k in range(1, n // 2 + 1))
    return tuple(nso)


def _table(order: int) -> tuple[int, ...]:
    # grow through powers of two so the cache stays small
    size = 16
    while size < order:
        size *= 2
    return _nso_table(size)[: order + 1]


def count_nso(N: int) -> list[int]:
    """Non-self-overlapping counts ``n_1..n_N``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return list(_table(N)[1:])


def count_so(N: int) -> list[int]:
    """Self-overlapping counts ``s_1..s_N`` via ``s_n = sum n_k (n-2k)!``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    nso = _table(N)
    return [
        sum(nso[k] * factorial(n - 2 * k) for k in range(1, n // 2 + 1))
        for n in range(1, N + 1)
    ]


def nso_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries(_table(order))


def so_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries((0,) + tuple(count_so(order))) if order else TruncatedSeries((0,))


def count_nso_m(N: int, m: int) -> list[int]:
    """``[z^n] N(z)^m`` for ``n = 0..N``: ordered sequences of ``m``
    non-self-overlapping blocks of total size ``n``.

    Sequences rather than distinct permutations are counted, since e.g.
    ``1 + 213`` and ``132 + 1`` both give 1324.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    return list((nso_series(N) ** m).coeffs)


def count_so_m(N: int, m: int) -> list[int]:
    """Permutations of size ``n = 1..N`` whose palindromic decomposition has
    exactly ``2m + 1`` summands."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return count_nso(N)
    half = N // 2
    lo = count_nso_m(half, m)
    hi = count_nso_m(half, m + 1)
    return [
        sum((lo[k] - hi[k]) * factorial(n - 2 * k) for k in range(1, n // 2 + 1))
        for n in range(1, N + 1)
    ]
