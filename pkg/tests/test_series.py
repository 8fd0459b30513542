from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permclass.series import (BivariateSeries, SeriesError, UnivariateSeries,
                              expand_ratio)

coeffs = st.lists(st.integers(min_value=-9, max_value=9), min_size=1,
                  max_size=7)


def useries(c):
    return UnivariateSeries(c, len(c) - 1)


@given(coeffs, coeffs, coeffs)
def test_univariate_ring_axioms(a, b, c):
    order = min(len(a), len(b), len(c)) - 1
    A, B, C = useries(a), useries(b), useries(c)
    assert (A + B).truncate(order) == (B + A).truncate(order)
    assert ((A + B) + C).truncate(order) == (A + (B + C)).truncate(order)
    assert (A * B).truncate(order) == (B * A).truncate(order)
    assert ((A * B) * C).truncate(order) == (A * (B * C)).truncate(order)
    assert (A * (B + C)).truncate(order) == \
        (A * B + A * C).truncate(order)


@given(coeffs)
def test_univariate_inverse_property(a):
    a = [1] + a  # force unit constant term
    A = useries(a)
    prod = A * A.inverse()
    assert prod.c[0] == 1 and all(x == 0 for x in prod.c[1:])


def test_geometric_series():
    g = UnivariateSeries.geometric(2, 5)
    assert g.c == [1, 2, 4, 8, 16, 32]
    one_minus = UnivariateSeries([1, -2], 5)
    assert (g * one_minus).c == [1, 0, 0, 0, 0, 0]


def test_truncation_to_minimum_order():
    a = UnivariateSeries([1, 2, 3], 2)
    b = UnivariateSeries([1, 1], 1)
    assert (a + b).order == 1
    assert (a * b).order == 1
    with pytest.raises(SeriesError):
        a.truncate(5)


def test_inverse_requires_unit():
    with pytest.raises(SeriesError):
        UnivariateSeries([0, 1], 3).inverse()
    with pytest.raises(SeriesError):
        BivariateSeries([[0, 1]], 3).inverse()


def test_integer_coefficients_preserved():
    """Inverting a series with constant term +-1 must stay in integers
    (the functional-equation iteration depends on this)."""
    inv = UnivariateSeries([1, -3, 2], 6).inverse()
    assert all(isinstance(x, int) for x in inv.c)


def test_univariate_serialize_round_trip():
    s = UnivariateSeries([1, Fraction(-2, 3), 5], 2)
    assert UnivariateSeries.parse(s.serialize()) == s


def test_bivariate_geometric_tz():
    g = BivariateSeries.geometric_tz(3)
    assert g.c == [[1], [0, 1], [0, 0, 1], [0, 0, 0, 1]]


def test_bivariate_mul_against_expansion():
    # (1 + tz)(1 - tz) = 1 - t^2 z^2
    a = BivariateSeries([[1], [0, 1]], 3)
    b = BivariateSeries([[1], [0, -1]], 3)
    assert (a * b) == BivariateSeries([[1], [0], [0, 0, -1]], 3)


def test_bivariate_univariate_and_scalar_branches():
    f = BivariateSeries.geometric_tz(4)
    u = UnivariateSeries.geometric(1, 4)
    left = u * f
    right = f * u
    assert left == right
    assert (f * 3).c[2] == [0, 0, 3]
    assert (3 * f) == f * 3


def test_bivariate_inverse():
    d = BivariateSeries([[1], [-1, -1]], 5)  # 1 - (1+t) z
    prod = d * d.inverse()
    assert prod == BivariateSeries.one(5)


def test_subst_t_one_and_series():
    f = BivariateSeries([[1], [0, 2], [1, 0, 3]], 2)
    at1 = f.subst_t(1)
    assert at1.c == [1, 2, 4]
    recip = UnivariateSeries.geometric(1, 2)  # 1/(1-z), constant term 1
    sub = f.subst_t(recip)
    # z^0: 1; z^1: 2*(1/(1-z)) -> 2 + 2z; z^2: 1 + 3*(1/(1-z))^2 -> 4 at z^2
    assert sub.c == [1, 2, 1 + 2 + 3]
    with pytest.raises(SeriesError):
        f.subst_t(UnivariateSeries.z(2))


def test_deriv_t_at_1():
    f = BivariateSeries([[1], [0, 2], [1, 0, 3]], 2)
    assert f.deriv_t_at_1().c == [0, 2, 6]


def test_bivariate_serialize_round_trip():
    f = BivariateSeries([[1], [0, Fraction(1, 2)], [1, 0, 3]], 2)
    assert BivariateSeries.parse(f.serialize()) == f


def test_expand_ratio():
    num = BivariateSeries.one(4)
    denom = BivariateSeries([[1], [0, -1]], 4)  # 1 - tz
    assert expand_ratio(num, [denom]) == BivariateSeries.geometric_tz(4)


def test_exact_rational_coefficients_rejected():
    with pytest.raises(SeriesError):
        UnivariateSeries([0.5], 0)
