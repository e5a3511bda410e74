from fractions import Fraction
from math import factorial

import pytest

from selfoverlap.asymptotics import (
    FactorialExpansion,
    eval_so_expansion,
    eval_so_m_expansion,
    exact_so_m_probability,
    exact_so_probability,
    factorial_power,
    falling,
    remainder_diagnostic,
    rising,
    so_expansion,
    verify_factorial_identity,
)
from selfoverlap.errors import DegenerateBasis, NegativeExponent
from selfoverlap.oracle import enumerate_classify
from selfoverlap.series import count_nso


def test_factorial_power():
    assert factorial_power(5, 3) == 60
    assert factorial_power(7, 0, "rising") == 1
    assert factorial_power(3, 5) == 0
    assert rising(3, 3) == 60
    assert falling(-2, 2) == 6
    with pytest.raises(NegativeExponent):
        factorial_power(3, -1)
    with pytest.raises(ValueError):
        factorial_power(3, 1, "sideways")


@pytest.mark.parametrize("n,expected", [(2, Fraction(1, 2)), (4, Fraction(1, 8)), (6, Fraction(31, 720))])
def test_exact_probability(n, expected):
    assert exact_so_probability(n) == expected


def test_truncations():
    assert eval_so_expansion(4, 2) == Fraction(1, 12)
    assert eval_so_expansion(17, 1) == 0
    assert eval_so_m_expansion(6, 1, 2) == Fraction(1, 30)


def test_degenerate_basis():
    with pytest.raises(DegenerateBasis):
        eval_so_expansion(3, 3)
    with pytest.raises(DegenerateBasis):
        remainder_diagnostic(5, 3)


@pytest.mark.parametrize("n", range(1, 41))
def test_full_truncation_is_exact(n):
    # dividing s_n = sum n_k (n-2k)! by n! termwise
    nso = count_nso(n)
    direct = sum(Fraction(nso[k - 1], falling(n, 2 * k)) for k in range(1, n // 2 + 1))
    assert exact_so_probability(n) == direct
    assert eval_so_expansion(n, n // 2 + 1) == direct


@pytest.mark.parametrize("n", range(1, 10))
@pytest.mark.parametrize("m", range(1, 4))
def test_block_expansion_matches_enumeration(n, m):
    rep = enumerate_classify(n, workers=1)
    freq = Fraction(rep.block_histogram.get(2 * m + 1, 0), factorial(n))
    assert eval_so_m_expansion(n, m, n // 2 + 1) == freq == exact_so_m_probability(n, m)


def test_block_expansion_s4():
    assert eval_so_m_expansion(4, 1, 3) == Fraction(2, 24)
    assert eval_so_m_expansion(4, 2, 3) == Fraction(1, 24)


class TestRemainder:
    def test_boundary(self):
        assert remainder_diagnostic(2, 1) == 1

    def test_r1_n10(self):
        # (s_10 / 10!) * 10 * 9
        assert remainder_diagnostic(10, 1) == Fraction(41315 * 90, factorial(10))
        assert remainder_diagnostic(100, 1) < remainder_diagnostic(10, 1)

    def test_tail_formula(self):
        nso = count_nso(50)
        for n, r in [(12, 2), (30, 3), (41, 4)]:
            tail = nso[r - 1] + sum(Fraction(nso[k - 1] * falling(n, 2 * r), falling(n, 2 * k))
                                    for k in range(r + 1, n // 2 + 1))
            assert remainder_diagnostic(n, r) == tail

    def test_self_reference(self):
        assert abs(remainder_diagnostic(100, 3) / 5 - 1) < Fraction(1, 100)
        assert abs(remainder_diagnostic(50, 3) / 5 - 1) < Fraction(5, 100)

    @pytest.mark.parametrize("r", range(1, 5))
    def test_bounds(self, r):
        nr = count_nso(r)[-1]
        for n in range(2 * r, 101):
            d = remainder_diagnostic(n, r)
            assert d >= nr
            if n >= 5 * r:
                assert d <= nr + 1
        assert abs(remainder_diagnostic(50, r) / nr - 1) < Fraction(5, 100)
        assert abs(remainder_diagnostic(100, r) / nr - 1) < Fraction(1, 100)


def test_expansion_object():
    ex = so_expansion(4)
    assert ex.basis_step == 2 and ex.remainder_order == 4
    assert ex.coefficients() == [(1, 1), (2, 1), (3, 5)]
    with pytest.raises(ValueError):
        FactorialExpansion({3: Fraction(1)}, remainder_order=3)
    with pytest.raises(DegenerateBasis):
        ex.evaluate(5)


class TestShiftIdentity:
    def test_k_zero(self):
        assert all(verify_factorial_identity(n, 0, l) for n in range(8) for l in range(8))

    def test_l_one(self):
        assert all(verify_factorial_identity(n, k, 1) for n in range(8) for k in range(8))

    def test_grid(self):
        assert all(verify_factorial_identity(n, k, l) for n in range(26) for k in range(26) for l in range(26))

