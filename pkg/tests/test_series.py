from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oddcovers.combinat import catalan
from oddcovers.series import Series, binomial_series, lagrange_invert, series_sqrt


def test_geometric_inverse():
    # 1/(1 - w) = 1 + w + w^2 + ...
    one_minus_w = Series([1, -1, 0, 0, 0])
    assert one_minus_w.inverse() == Series([1, 1, 1, 1, 1])


def test_sqrt_coefficients():
    z = Series.identity(3)
    root = series_sqrt(1 + z)
    assert root.coeffs == (1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16))


def test_sqrt_requires_unit_constant_term():
    with pytest.raises(ValueError):
        series_sqrt(Series([4, 1, 1]))


small = st.fractions(max_denominator=5, min_value=Fraction(-5), max_value=Fraction(5))


@given(st.lists(small, min_size=5, max_size=9))
def test_sqrt_round_trip(tail):
    f = Series([1] + tail)
    root = series_sqrt(f)
    assert root * root == f


@given(st.lists(small, min_size=4, max_size=8), st.lists(small, min_size=4, max_size=8))
def test_mul_commutes_and_min_order(a, b):
    f, g = Series([1] + a), Series([2] + b)
    assert f * g == g * f
    assert (f * g).order == min(f.order, g.order)


def test_shifted_raises_order():
    f = Series([1, 2, 3])
    assert f.shifted(2) == Series([0, 0, 1, 2, 3])
    assert f.shifted(2).order == f.order + 2


def test_compose_requires_nilpotent_inner():
    with pytest.raises(ValueError):
        Series([1, 1]).compose(Series([1, 1]))


def test_lagrange_invert_catalan_oracle():
    # u = w/(1-u) has [w^n] u = Catalan(n-1)
    order = 10
    phi = Series([1, -1] + [0] * (order - 2)).inverse()  # 1/(1-z)
    u = lagrange_invert(phi, order)
    assert [u[n] for n in range(1, order + 1)] == [catalan(n - 1) for n in range(1, order + 1)]
    # and u really solves the fixed-point equation
    residual = u - phi.compose(u).shifted(1).truncated(order)
    assert residual.is_zero()


def test_lagrange_invert_needs_enough_terms():
    with pytest.raises(ValueError):
        lagrange_invert(Series([1, 1]), 5)


def test_odd_part():
    f = Series([1, 2, 3, 4, 5])
    assert f.odd_part() == Series([0, 2, 0, 4, 0])


def test_binomial_series_integer_exponent_matches_power():
    z = Series.identity(6)
    assert binomial_series(3, z) == (1 + z) * (1 + z) * (1 + z)
