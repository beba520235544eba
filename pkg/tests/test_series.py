from fractions import Fraction
from math import factorial

import pytest

from ballotperm.clusters import double_factorial
from ballotperm.series import RationalSeries, b_numbers, counts_by_order, series_coefficients

B = [1, 1, 1, 3, 9, 45, 225, 1575, 11025, 99225]


def test_ballot_numbers():
    assert b_numbers(9) == B
    assert b_numbers(10)[10] == 893025


def test_ballot_series_squares_back():
    # (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
    f = series_coefficients("b_egf", 12)
    sq = f * f
    assert [sq.coefficient(n) for n in range(13)] == [1] + [2] * 12


def test_ocp_series_square():
    f = series_coefficients("ocp_egf", 8)
    num = RationalSeries.from_terms({(0, 0): 1, (1, 0): -1, (1, 1): 1}, 8)
    den = RationalSeries.from_terms({(0, 0): 1, (1, 0): -1, (1, 1): -1}, 8)
    assert (f * f * den).truncate(8).coeffs == num.coeffs


def test_ocp_series_specializations():
    table = counts_by_order(10)
    for n in range(11):
        assert sum(table[n]) == double_factorial(2 * n - 1)
        top = table[n][n] if len(table[n]) > n else 0
        assert top == B[n] if n < 10 else top == 893025


def test_t_one_gives_double_factorials():
    f = series_coefficients("ocp_egf", 6)
    assert [v * factorial(n) for n, v in enumerate(f.at_t(1))] == [1, 1, 3, 15, 105, 945, 10395]


def test_inverse_and_exactness():
    s = RationalSeries.from_terms({(0, 0): 2, (1, 1): 3, (2, 0): -1}, 6)
    one = (s * s.inverse()).truncate(6)
    assert one.coefficient(0) == 1
    assert all(one.coefficient(n, k) == 0 for n in range(1, 7) for k in range(7))
    assert all(isinstance(c, Fraction) for p in s.inverse().coeffs for c in p)


def test_unknown_kind():
    with pytest.raises(ValueError):
        series_coefficients("nope", 3)
    with pytest.raises(ValueError):
        series_coefficients("b_egf", -1)
