"""Very tight (rigid) pattern occurrences and their distribution.

A very tight occurrence of ``pi`` in ``sigma`` is a window of consecutive
positions whose values are ``pi`` shifted by a constant.  For patterns ``pi``
such that neither ``pi`` nor its reverse is self-overlapping, the number of
hosts with exactly ``m`` occurrences has a closed inclusion-exclusion form
(Myers), and two falling-factorial expansions of the resulting probability
are implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .asymptotics import FactorialExpansion, falling
from .errors import BadRange, DegenerateBasis, IneligiblePattern, PatternLargerThanHost
from .perm import Permutation, minimal_range, reverse


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def count_very_tight_occurrences(sigma: Permutation, pi: Permutation) -> int:
    """Number of windows ``i`` with ``sigma[i+j] = pi[j] + h`` for one ``h``.

    Comparing consecutive differences with those of ``pi`` is the same test
    as "window values form an interval and standardize to ``pi``".
    """
    n, p = len(sigma), len(pi)
    if p < 1:
        raise BadRange("pattern must be nonempty")
    if p > n:
        raise PatternLargerThanHost(f"pattern size {p} exceeds host size {n}")
    s, q = sigma.values, pi.values
    offsets = [v - q[0] for v in q]
    hits = 0
    for i in range(n - p + 1):
        base = s[i]
        if all(s[i + j] - base == offsets[j] for j in range(1, p)):
            hits += 1
    return hits


def is_eligible(pi: Permutation) -> bool:
    """True iff neither ``pi`` nor its reverse is self-overlapping."""
    if len(pi) == 0:
        return False
    return minimal_range(pi) is None and minimal_range(reverse(pi)) is None


@dataclass(frozen=True)
class PatternSpec:
    pattern: Permutation

    @property
    def p(self) -> int:
        return len(self.pattern)

    @property
    def eligible(self) -> bool:
        # recomputed on every access, never stored from input
        return is_eligible(self.pattern)


@dataclass(frozen=True)
class PatternCountTable:
    """``counts[m]`` hosts of size ``n`` with exactly ``m`` occurrences."""

    n: int
    pattern: Permutation
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


def _as_spec(pi) -> PatternSpec:
    return pi if isinstance(pi, PatternSpec) else PatternSpec(pi)


def _require_closed_form(spec: PatternSpec) -> None:
    if spec.p < 3:
        raise IneligiblePattern(f"closed formulas need p >= 3, got p = {spec.p}")
    if not spec.eligible:
        raise IneligiblePattern(f"{spec.pattern} or its reverse is self-overlapping")


def myers_count_p(p: int, n: int, m: int) -> int:
    """Closed form for ``a_{n,m}``; depends on the pattern only through ``p``."""
    if p < 3:
        raise BadRange(f"p must be at least 3, got {p}")
    if m < 0:
        raise BadRange("m must be non-negative")
    gap = p - 1
    total = 0
    for k in range(m, n // gap + 1):
        rest = n - gap * k
        total += (-1) ** (k - m) * binom(k, m) * binom(rest, k) * factorial(rest)
    return total


def myers_count(pi, n: int, m: int) -> int:
    spec = _as_spec(pi)
    _require_closed_form(spec)
    return myers_count_p(spec.p, n, m)


def myers_table(pi, n: int) -> PatternCountTable:
    spec = _as_spec(pi)
    _require_closed_form(spec)
    top = n // (spec.p - 1)
    return PatternCountTable(n, spec.pattern, {m: myers_count_p(spec.p, n, m) for m in range(top + 1)})


def exact_pattern_probability(pi, n: int, m: int) -> Fraction:
    return Fraction(myers_count(pi, n, m), factorial(n))


def eval_pattern_expansion_1(p: int, m: int, n: int, r: int) -> Fraction:
    """``(1/m!) sum_{k=m}^{r-1} (-1)^(k-m)/(k-m)! * (n-(p-1)k)^(k) / n^((p-1)k)``."""
    if p < 3:
        raise BadRange(f"p must be at least 3, got {p}")
    if m < 0 or r <= m:
        raise BadRange(f"need 0 <= m < r, got m = {m}, r = {r}")
    if n < (p - 1) * (r - 1):
        raise DegenerateBasis(f"need n >= {(p - 1) * (r - 1)} for p = {p}, r = {r}")
    total = Fraction(0)
    for k in range(m, r):
        num = falling(n - (p - 1) * k, k)
        total += Fraction((-1) ** (k - m) * num, factorial(k - m) * falling(n, (p - 1) * k))
    return total / factorial(m)


def _check_coeff_args(p: int, m: int, r: int) -> None:
    if p < 3:
        raise BadRange(f"p must be at least 3, got {p}")
    if m < 0 or r < 1:
        raise BadRange(f"need m >= 0 and r >= 1, got m = {m}, r = {r}")


def pattern_expansion_coefficients(p: int, m: int, r: int) -> FactorialExpansion:
    """Coefficients ``c_k`` over ``1/n^(k)`` for ``(p-2)m <= k < r``."""
    _check_coeff_args(p, m, r)
    terms = {}
    for k in range((p - 2) * m, r):
        c = Fraction(0)
        for i in range(-(-k // (p - 1)), k // (p - 2) + 1):
            j = (p - 1) * i - k
            c += Fraction((-1) ** j * binom(i, m) * binom(i, k - (p - 2) * i), factorial(j))
        terms[k] = (-1) ** m * c
    return FactorialExpansion(terms, r, 1)


def rebase_expansion_via_lemma(p: int, m: int, r: int) -> FactorialExpansion:
    """Rebuild the ``c_k`` from the first expansion, term by term.

    Each ratio ``(n-(p-1)k)^(k) / n^((p-1)k)`` is rewritten with
    ``N = n-(p-1)k+1`` as ``(N-k)^[k] / N^[(p-1)k]`` (rising powers), the
    numerator is expanded by the rising-factorial shift identity, and
    ``N^[k-i] / N^[(p-1)k] = 1/n^((p-2)k+i)``.  Terms are then regrouped by
    basis index ``s = (p-2)k + i``.
    """
    _check_coeff_args(p, m, r)
    acc: dict[int, Fraction] = {s: Fraction(0) for s in range((p - 2) * m, r)}
    k = m
    while (p - 2) * k < r:
        outer = Fraction((-1) ** (k - m), factorial(m) * factorial(k - m))
        for i in range(k + 1):
            s = (p - 2) * k + i
            if s >= r:
                break
            shift = Fraction((-1) ** i * falling(k, i) * falling(k, i), factorial(i))
            acc[s] += outer * shift
        k += 1
    return FactorialExpansion(acc, r, 1)


def pattern_remainder_diagnostic(p: int, m: int, n: int, r: int) -> Fraction:
    """``(exact - sum_{k<r} c_k / n^(k)) * n^(r)``, which tends to ``c_r``."""
    if n < r:
        raise DegenerateBasis(f"need n >= r, got n = {n}, r = {r}")
    exact = Fraction(myers_count_p(p, n, m), factorial(n))
    approx = pattern_expansion_coefficients(p, m, r).evaluate(n)
    return (exact - approx) * falling(n, r)
