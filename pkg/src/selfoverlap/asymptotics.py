"""Exact evaluation of the falling-factorial expansions for the
self-overlap probabilities.

Everything here is :class:`fractions.Fraction`; floats only appear when a
caller renders a value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import DegenerateBasis, NegativeExponent
from .series import count_nso, count_nso_m, count_so, count_so_m

FALLING = "falling"
RISING = "rising"


def factorial_power(n: int, k: int, direction: str = FALLING) -> int:
    """``n(n-1)...(n-k+1)`` or ``n(n+1)...(n+k-1)``; the empty product is 1."""
    if k < 0:
        raise NegativeExponent(f"k = {k}")
    step = -1 if direction == FALLING else 1
    if direction not in (FALLING, RISING):
        raise ValueError(f"unknown direction {direction!r}")
    out = 1
    for i in range(k):
        out *= n + step * i
        if out == 0:
            break
    return out


def falling(n: int, k: int) -> int:
    return factorial_power(n, k, FALLING)


def rising(n: int, k: int) -> int:
    return factorial_power(n, k, RISING)


@dataclass(frozen=True)
class FactorialExpansion:
    """``sum_k terms[k] / n^(basis_step * k) + O(1/n^(basis_step * remainder_order))``
    where ``n^(j)`` is the falling factorial."""

    terms: dict[int, Fraction] = field(default_factory=dict)
    remainder_order: int = 1
    basis_step: int = 1

    def __post_init__(self):
        if any(k >= self.remainder_order for k in self.terms):
            raise ValueError("term index at or beyond the remainder order")

    def coefficients(self) -> list[tuple[int, Fraction]]:
        return sorted(self.terms.items())

    def evaluate(self, n: int) -> Fraction:
        total = Fraction(0)
        for k, c in self.terms.items():
            d = falling(n, self.basis_step * k)
            if d == 0:
                raise DegenerateBasis(f"n^({self.basis_step * k}) vanishes at n = {n}")
            total += c / d
        return total


def so_expansion(r: int) -> FactorialExpansion:
    """Self-overlap probability as ``sum_{k<r} n_k / n^(2k)``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    nso = count_nso(r - 1) if r > 1 else []
    return FactorialExpansion({k: Fraction(nso[k - 1]) for k in range(1, r)}, r, 2)


def so_m_expansion(m: int, r: int) -> FactorialExpansion:
    if m < 1:
        raise ValueError("m must be at least 1")
    if r < 1:
        raise ValueError("r must be at least 1")
    lo = count_nso_m(r, m)
    hi = count_nso_m(r, m + 1)
    return FactorialExpansion({k: Fraction(lo[k] - hi[k]) for k in range(1, r)}, r, 2)


def exact_so_probability(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(count_so(n)[-1], factorial(n))


def exact_so_m_probability(n: int, m: int) -> Fraction:
    return Fraction(count_so_m(n, m)[-1], factorial(n))


def _check_basis(n: int, r: int) -> None:
    if r < 1:
        raise ValueError("r must be at least 1")
    if n < 2 * (r - 1):
        raise DegenerateBasis(f"n = {n} is too small for r = {r}: need n >= {2 * (r - 1)}")


def eval_so_expansion(n: int, r: int) -> Fraction:
    """Truncation ``sum_{k=1}^{r-1} n_k / n^(2k)``."""
    _check_basis(n, r)
    return so_expansion(r).evaluate(n)


def eval_so_m_expansion(n: int, m: int, r: int) -> Fraction:
    """Truncation ``sum_{k=1}^{r-1} (n_k^(m) - n_k^(m+1)) / n^(2k)``."""
    _check_basis(n, r)
    return so_m_expansion(m, r).evaluate(n)


def remainder_diagnostic(n: int, r: int) -> Fraction:
    """``(exact - truncation) * n^(2r)``, which tends to ``n_r``."""
    if n < 2 * r:
        raise DegenerateBasis(f"need n >= 2r, got n = {n}, r = {r}")
    return (exact_so_probability(n) - eval_so_expansion(n, r)) * falling(n, 2 * r)


def verify_factorial_identity(n: int, k: int, l: int) -> bool:
    """Check ``(n-k)^[l] = sum_i (-1)^i / i! * k^(i) l^(i) n^[l-i]`` exactly,
    rising powers in brackets, falling in parentheses.

    Also asserts that each ``k^(i) l^(i) / i!`` is an integer.
    """
    rhs = 0
    for i in range(l + 1):
        weight, rem = divmod(falling(k, i) * falling(l, i), factorial(i))
        if rem:
            return False
        rhs += (-1) ** i * weight * rising(n, l - i)
    return rising(n - k, l) == rhs
