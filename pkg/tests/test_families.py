import itertools
from fractions import Fraction
from math import factorial

import pytest

from selfoverlap import Permutation, direct_sum, parse_permutation
from selfoverlap.asymptotics import falling
from selfoverlap.families import (
    E_NEG2,
    SIMPLE_EXPANSION,
    count_indecomposable,
    count_indecomposable_two_part,
    count_simple,
    eval_indecomposable_expansion,
    eval_simple_expansion,
    exact_indecomposable_probability,
    exact_simple_probability,
    family_table,
    indecomposable_expansion,
    indecomposable_remainder,
    indecomposable_series,
    is_indecomposable,
    is_simple,
    simple_expansion_rescaled,
)
from selfoverlap.series import series_reciprocal

P = parse_permutation


def perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def split_indecomposable(sigma):
    """Factor into indecomposable summands by cutting at every prefix k
    with max(sigma[:k]) == k."""
    parts, start, top = [], 0, 0
    for k, v in enumerate(sigma.values, 1):
        top = max(top, v)
        if top == k:
            parts.append(Permutation(tuple(x - start for x in sigma.values[start:k])))
            start = k
    return parts


def test_predicates():
    assert is_indecomposable(P("21"))
    assert not is_indecomposable(P("12"))
    assert is_indecomposable(P("1"))
    assert is_simple(P("2413")) and is_simple(P("3142"))
    assert not is_simple(P("1234"))
    assert not is_simple(P("132"))


class TestIndecomposable:
    def test_values(self):
        assert count_indecomposable(6) == [1, 1, 3, 13, 71, 461]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_brute_force(self, n):
        assert sum(is_indecomposable(s) for s in perms(n)) == count_indecomposable(n)[-1]

    def test_two_part(self):
        two = count_indecomposable_two_part(6)
        assert two[0] == 0 and two[1] == 1 and two[3] == 3 + 1 + 3

    @pytest.mark.parametrize("n", range(1, 8))
    def test_two_part_brute(self, n):
        brute = sum(len(split_indecomposable(s)) == 2 for s in perms(n))
        assert brute == count_indecomposable_two_part(n)[-1]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_unique_factorization(self, n):
        for sigma in perms(n):
            parts = split_indecomposable(sigma)
            assert all(is_indecomposable(p) for p in parts)
            assert direct_sum(parts) == sigma

    def test_sequence_identity(self):
        i = indecomposable_series(15)
        assert series_reciprocal(1 - i).coeffs == tuple(factorial(n) for n in range(16))

    def test_expansion(self):
        assert eval_indecomposable_expansion(10, 2) == Fraction(4, 5)
        assert eval_indecomposable_expansion(7, 1) == 1
        assert indecomposable_expansion(4).terms == {0: 1, 1: -2, 2: -1, 3: -4}

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_remainder_bounded(self, r):
        coef = abs(indecomposable_expansion(r + 1).terms[r])
        vals = [indecomposable_remainder(n, r) for n in range(r, 61)]
        assert all(abs(v) <= 4 * coef + 4 for v in vals)
        assert abs(abs(vals[-1]) / coef - 1) < Fraction(1, 5)

    def test_exact_probability(self):
        assert exact_indecomposable_probability(3) == Fraction(3, 6)


class TestSimple:
    def test_small(self):
        assert count_simple(5) == [2, 6]

    @pytest.mark.parametrize("n", range(4, 9))
    def test_brute_force(self, n):
        assert sum(is_simple(s) for s in perms(n)) == count_simple(n)[-1]

    def test_expansion_numbers(self):
        assert SIMPLE_EXPANSION == (1, -4, 2, Fraction(-40, 3), Fraction(-182, 3))
        assert simple_expansion_rescaled() == [1, -4, 4, -80, -1456]

    def test_eval(self):
        n = 9
        direct = E_NEG2 * float(sum(c / falling(n, k) for k, c in enumerate(SIMPLE_EXPANSION)))
        assert eval_simple_expansion(n) == pytest.approx(direct)
        # order-of-magnitude agreement only
        assert 0.5 < eval_simple_expansion(n) / float(exact_simple_probability(n)) < 2
        assert eval_simple_expansion(10 ** 6) == pytest.approx(E_NEG2, rel=1e-5)


def test_family_tables():
    assert family_table("so", 5).counts == (0, 1, 1, 3, 7)
    assert family_table("nso", 5).expansion.evaluate(10) == 1 - Fraction(1, 90) - Fraction(1, 5040)
    assert family_table("simple", 6).counts == (2, 6, 46)
    assert family_table("indecomposable", 3).counts == (1, 1, 3)
    with pytest.raises(ValueError):
        family_table("odd", 3)
