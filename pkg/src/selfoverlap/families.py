"""Indecomposable and simple permutations, for comparison with the
non-self-overlapping family.

* indecomposable: no proper prefix ``{1..k}`` is mapped onto itself;
  ``I(z) = 1 - 1/P(z)``.
* simple: no interval of positions of length ``2..n-1`` is mapped onto an
  interval of values; counted through
  ``(F - F^2)/(1 + F) = z + M(F(z))`` with ``F = P - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import exp, factorial

from .asymptotics import FactorialExpansion, falling
from .errors import DegenerateBasis
from .perm import Permutation
from .series import TruncatedSeries, factorial_series, series_multiply, series_reciprocal

NSO, SO, INDECOMPOSABLE, SIMPLE = "nso", "so", "indecomposable", "simple"

# 1/e^2 in double precision; the only floating-point constant in the package
E_NEG2 = exp(-2.0)

# leading terms of the simple-permutation probability over 1/n^(k), after
# factoring out 1/e^2
SIMPLE_EXPANSION = (Fraction(1), Fraction(-4), Fraction(2), Fraction(-40, 3), Fraction(-182, 3))


def is_indecomposable(sigma: Permutation) -> bool:
    top = 0
    n = len(sigma)
    for k, v in enumerate(sigma.values[:-1], start=1):
        top = max(top, v)
        if top == k:
            return False
    return n >= 1


def is_simple(sigma: Permutation) -> bool:
    vals = sigma.values
    n = len(vals)
    for i in range(n):
        lo = hi = vals[i]
        for j in range(i + 1, n):
            v = vals[j]
            lo, hi = min(lo, v), max(hi, v)
            length = j - i + 1
            if length < n and hi - lo == length - 1:
                return False
    return True


def indecomposable_series(order: int) -> TruncatedSeries:
    return 1 - series_reciprocal(factorial_series(order))


def count_indecomposable(N: int) -> list[int]:
    """``i_1..i_N``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return list(indecomposable_series(N).coeffs[1:])


def count_indecomposable_two_part(N: int) -> list[int]:
    """``[z^n] I(z)^2`` for ``n = 1..N``; factorizations into
    indecomposables are unique, so this counts permutations."""
    i = indecomposable_series(N)
    return list(series_multiply(i, i).coeffs[1:])


def simple_series(order: int) -> TruncatedSeries:
    """``M(z)``: simple permutations of size at least 4."""
    f = factorial_series(order) - 1
    lhs = series_multiply(f - series_multiply(f, f), series_reciprocal(1 + f))
    target = list((lhs - TruncatedSeries.from_sequence([0, 1], order)).coeffs)
    # M(F(z)) = target; F = z + O(z^2) so [z^n] F^n = 1 and F^k = O(z^k)
    m = [0] * (order + 1)
    power = TruncatedSeries.one(order)
    powers = [power]
    for k in range(1, order + 1):
        power = series_multiply(power, f)
        powers.append(power)
    for n in range(1, order + 1):
        m[n] = target[n] - sum(m[k] * powers[k][n] for k in range(1, n))
    if any(m[1:4]):
        raise ArithmeticError("functional equation produced simple counts below size 4")
    return TruncatedSeries(tuple(m))


def count_simple(N: int) -> list[int]:
    """``m_4..m_N``."""
    if N < 4:
        raise ValueError("N must be at least 4")
    return list(simple_series(N).coeffs[4:])


def indecomposable_expansion(r: int) -> FactorialExpansion:
    """``1 - sum_{k<r} (2 i_k - i_k^(2)) / n^(k)``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    terms = {0: Fraction(1)}
    if r > 1:
        ind = count_indecomposable(r - 1)
        two = count_indecomposable_two_part(r - 1)
        for k in range(1, r):
            terms[k] = Fraction(-(2 * ind[k - 1] - two[k - 1]))
    return FactorialExpansion(terms, r, 1)


def exact_indecomposable_probability(n: int) -> Fraction:
    return Fraction(count_indecomposable(n)[-1], factorial(n))


def eval_indecomposable_expansion(n: int, r: int) -> Fraction:
    if n < r - 1:
        raise DegenerateBasis(f"need n >= r - 1, got n = {n}, r = {r}")
    return indecomposable_expansion(r).evaluate(n)


def indecomposable_remainder(n: int, r: int) -> Fraction:
    """``(exact - truncation) * n^(r)``."""
    if n < r:
        raise DegenerateBasis(f"need n >= r, got n = {n}, r = {r}")
    return (exact_indecomposable_probability(n) - eval_indecomposable_expansion(n, r)) * falling(n, r)


def eval_simple_expansion(n: int) -> float:
    """Five-term truncation of the simple-permutation probability.  Float."""
    if n < 4:
        raise DegenerateBasis("need n >= 4")
    inner = sum(c / falling(n, k) for k, c in enumerate(SIMPLE_EXPANSION))
    return E_NEG2 * float(inner)


def simple_expansion_rescaled() -> list[Fraction]:
    """Coefficients over the basis ``1/(k! n^(k))``; reported, not interpreted."""
    return [c * factorial(k) for k, c in enumerate(SIMPLE_EXPANSION)]


def exact_simple_probability(n: int) -> Fraction:
    if n < 4:
        raise ValueError("n must be at least 4")
    return Fraction(count_simple(n)[-1], factorial(n))


@dataclass(frozen=True)
class FamilyTable:
    family: str
    counts: tuple[int, ...]
    expansion: FactorialExpansion | tuple[Fraction, ...]


def family_table(family: str, N: int, r: int = 3) -> FamilyTable:
    from .asymptotics import so_expansion
    from .series import count_nso, count_so

    if family == NSO:
        so = so_expansion(r)
        terms = {0: Fraction(1), **{k: -c for k, c in so.terms.items()}}
        return FamilyTable(family, tuple(count_nso(N)), FactorialExpansion(terms, r, 2))
    if family == SO:
        return FamilyTable(family, tuple(count_so(N)), so_expansion(r))
    if family == INDECOMPOSABLE:
        return FamilyTable(family, tuple(count_indecomposable(N)), indecomposable_expansion(r))
    if family == SIMPLE:
        return FamilyTable(family, tuple(count_simple(N)), SIMPLE_EXPANSION)
    raise ValueError(f"unknown family {family!r}")
