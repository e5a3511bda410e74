from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from selfoverlap.errors import NonUnitConstantTerm
from selfoverlap.series import (
    TruncatedSeries,
    count_nso,
    count_nso_m,
    count_so,
    count_so_m,
    factorial_series,
    nso_series,
    series_multiply,
    series_reciprocal,
    series_substitute_square,
    so_series,
)

NSO_10 = [1, 1, 5, 21, 113, 689, 4909, 39545, 357669, 3587485]
SO_10 = [0, 1, 1, 3, 7, 31, 131, 775, 5211, 41315]

T = TruncatedSeries


def series(order=8):
    return st.lists(st.integers(-50, 50), min_size=order + 1, max_size=order + 1).map(lambda c: T(tuple(c)))


class TestArithmetic:
    def test_square(self):
        one_z = T((1, 1, 0, 0))
        assert series_multiply(one_z, one_z) == T((1, 2, 1, 0))

    @given(series())
    def test_unit(self, a):
        assert series_multiply(a, T.one(a.order)) == a

    def test_convolution_of_nso(self):
        n = T((0, 1, 1, 5, 0))
        assert series_multiply(n, n)[4] == 2 * 1 * 5 + 1 * 1

    def test_order_is_min(self):
        assert series_multiply(T((1, 2, 3)), T((1, 1))).order == 1
        assert (T((1, 2, 3)) + T((1,))).order == 0

    def test_substitute_square(self):
        assert series_substitute_square(T((0, 1, 1, 0, 0))) == T((0, 0, 1, 0, 1))
        assert series_substitute_square(T((1,))) == T((1,))
        assert series_substitute_square(nso_series(6)).coeffs == (0, 0, 1, 0, 1, 0, 5)

    def test_reciprocal_geometric(self):
        assert series_reciprocal(T((1, -1, 0, 0, 0, 0))).coeffs == (1,) * 6

    def test_reciprocal_involution(self):
        a = 1 - series_substitute_square(nso_series(10))
        assert series_reciprocal(series_reciprocal(a)) == a

    def test_reciprocal_needs_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_reciprocal(T((2, 1)))

    @given(series(), st.sampled_from([1, -1]))
    def test_reciprocal_inverts(self, a, c0):
        a = T((c0,) + a.coeffs[1:])
        assert series_multiply(a, series_reciprocal(a)) == T.one(a.order)

    @given(series(5), series(5))
    def test_commutative(self, a, b):
        assert series_multiply(a, b) == series_multiply(b, a)

    def test_factorials_from_nso(self):
        n = nso_series(8)
        p = series_multiply(1 + n, series_reciprocal(1 - series_substitute_square(n)))
        assert p.coeffs == tuple(factorial(k) for k in range(9))


class TestCounts:
    def test_nso(self):
        assert count_nso(10) == NSO_10

    def test_so(self):
        assert count_so(10) == SO_10

    def test_small(self):
        assert count_nso(1) == [1]
        assert count_nso(2)[1] == factorial(2) - 1 * factorial(0)
        assert count_so(6)[5] == 1 * 24 + 1 * 2 + 5 * 1

    def test_complement(self):
        assert all(s + n == factorial(k) for k, (s, n) in enumerate(zip(count_so(25), count_nso(25)), 1))

    def test_long_prefix_stable(self):
        assert count_nso(40)[:10] == NSO_10
        assert count_nso(100)[:40] == count_nso(40)

    @pytest.mark.parametrize("order", [5, 20, 33])
    def test_series_identities(self, order):
        P, N, S = factorial_series(order), nso_series(order), so_series(order)
        N2 = series_substitute_square(N)
        assert 1 + S + N == P
        assert series_multiply(series_multiply(1 + N, series_reciprocal(1 - N2)), N2) == S
        assert series_multiply(1 + N, series_reciprocal(1 - N2)) == P
        assert N == series_multiply(P, 1 - N2) - 1

    def test_nso_m(self):
        assert count_nso_m(5, 0) == [1, 0, 0, 0, 0, 0]
        assert count_nso_m(5, 1) == [0] + NSO_10[:5]
        assert count_nso_m(5, 1)[3] == 5
        assert count_nso_m(5, 2)[4] == 11

    @pytest.mark.parametrize("m", range(0, 4))
    def test_nso_m_convolution(self, m):
        nxt = series_multiply(nso_series(15), T(tuple(count_nso_m(15, m))))
        assert count_nso_m(15, m + 1) == list(nxt.coeffs)

    def test_so_m(self):
        assert count_so_m(4, 1)[3] == 2
        assert count_so_m(4, 2)[3] == 1
        assert count_so_m(10, 0) == NSO_10

    def test_so_m_sums_to_factorial(self):
        N = 12
        rows = [count_so_m(N, m) for m in range(N)]
        for n in range(1, N + 1):
            assert sum(r[n - 1] for r in rows) == factorial(n)

    def test_so_m_sums_to_so(self):
        rows = [count_so_m(12, m) for m in range(1, 8)]
        assert [sum(col) for col in zip(*rows)] == count_so(12)
