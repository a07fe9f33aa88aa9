# tests/test_puiseux.py
from fractions import Fraction

import pytest
from hypothesis import given

from alpha_core.exceptions import DomainError, DomainMismatchError, EmptySeriesError
from alpha_core.numeric import ApproxComplex, ExactComplex
from alpha_core.puiseux import (
    INF,
    Domain,
    PuiseuxSeries,
    add,
    coefficient,
    constant_term,
    evaluate,
    grid_points,
    imag_part,
    monomial,
    mul,
    one,
    order,
    power,
    real_part,
    reciprocal,
    scale,
    shift,
    subtract,
    to_approx,
    truncate,
    valuation,
    zero,
)

from .strategies import nonzero_series, series, truncated_series, windows

half = Fraction(1, 2)


class TestConstruction:
    def test_combines_and_drops_zeros(self):
        f = PuiseuxSeries([(1, 2), (1, -2), (half, 1)])
        assert f.terms == ((half, ExactComplex(1)),)
        assert f.ramification == 2

    def test_drops_exponents_at_or_above_trunc(self):
        f = PuiseuxSeries([(0, 1), (2, 1), (3, 1)], trunc=2)
        assert f.terms == ((Fraction(0), ExactComplex(1)),)
        assert f.trunc == 2

    def test_ramification_does_not_take_part_in_equality(self):
        assert PuiseuxSeries([(1, 1)], ramification=6) == monomial(1)

    def test_exact_rejects_float_coefficients(self):
        with pytest.raises(DomainMismatchError):
            PuiseuxSeries([(1, 0.5)])

    def test_rejects_finite_float_trunc(self):
        with pytest.raises(DomainError):
            PuiseuxSeries([(1, 1)], trunc=2.5)

    def test_str_shows_truncation(self):
        assert str(PuiseuxSeries([(0, 1), (1, 1)], trunc=2)) == "1 + x + O(x^(2))"
        assert str(monomial(half, 3)) == "3*x^(1/2)"


class TestQueries:
    def test_order_and_valuation(self):
        f = PuiseuxSeries([(Fraction(-1, 3), 2), (1, 1)])
        assert order(f) == Fraction(-1, 3)
        assert valuation(zero(trunc=5)) == 5

    def test_order_of_zero(self):
        with pytest.raises(EmptySeriesError):
            order(zero())

    def test_coefficient_and_constant_term(self):
        f = PuiseuxSeries([(0, 7), (half, 1)])
        assert coefficient(f, half) == ExactComplex(1)
        assert coefficient(f, 3) == ExactComplex(0)
        assert constant_term(f) == PuiseuxSeries([(0, 7)])
        assert constant_term(monomial(1)).is_zero


class TestRing:
    def test_square(self):
        f = one() + monomial(half)
        assert f * f == PuiseuxSeries([(0, 1), (half, 2), (1, 1)])

    def test_add_takes_smaller_trunc(self):
        f = PuiseuxSeries([(0, 1)], trunc=3)
        g = PuiseuxSeries([(1, 1)], trunc=2)
        assert add(f, g).trunc == 2

    def test_mul_trunc_rule(self):
        f = PuiseuxSeries([(0, 1), (1, 1)], trunc=2)
        product = mul(f, monomial(half))
        assert product.trunc == Fraction(5, 2)
        assert product.as_dict() == {half: ExactComplex(1), Fraction(3, 2): ExactComplex(1)}

    def test_zero_with_trunc_bounds_the_product(self):
        assert mul(zero(trunc=3), monomial(1)).trunc == 4

    def test_power(self):
        assert power(one() + monomial(1), 3) == PuiseuxSeries([(0, 1), (1, 3), (2, 3), (3, 1)])
        assert power(monomial(1), 0) == one()

    def test_negative_power(self):
        with pytest.raises(DomainError):
            power(monomial(1), -1)

    def test_shift(self):
        f = shift(PuiseuxSeries([(0, 1)], trunc=1), Fraction(-1, 3))
        assert f.as_dict() == {Fraction(-1, 3): ExactComplex(1)}
        assert f.trunc == Fraction(2, 3)

    def test_truncate(self):
        f = truncate(PuiseuxSeries([(0, 1), (1, 1), (2, 1)]), 2)
        assert f == PuiseuxSeries([(0, 1), (1, 1)], trunc=2)

    def test_scale_by_zero_keeps_trunc(self):
        f = scale(0, PuiseuxSeries([(0, 1)], trunc=4))
        assert f.is_zero
        assert f.trunc == 4

    def test_domains_do_not_mix(self):
        f = monomial(1)
        with pytest.raises(DomainMismatchError):
            add(f, to_approx(f))

    def test_parts(self):
        f = PuiseuxSeries([(1, ExactComplex(2, -3))])
        assert real_part(f) == monomial(1, 2)
        assert imag_part(f) == monomial(1, -3)

    @given(series(), series())
    def test_addition_commutes(self, f, g):
        assert add(f, g) == add(g, f)

    @given(series(), series())
    def test_multiplication_commutes(self, f, g):
        assert mul(f, g) == mul(g, f)

    @given(series(4), series(4), series(4))
    def test_distributive(self, f, g, h):
        assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))

    @given(series())
    def test_additive_inverse(self, f):
        assert subtract(f, f).is_zero

    @given(series(), series(), series())
    def test_addition_associates(self, f, g, h):
        assert add(add(f, g), h) == add(f, add(g, h))

    @given(series(4), series(4), series(4))
    def test_multiplication_associates(self, f, g, h):
        assert mul(mul(f, g), h) == mul(f, mul(g, h))

    @given(series())
    def test_one_is_multiplicative_identity(self, f):
        assert mul(one(), f) == f
        assert mul(f, one()) == f

    @given(truncated_series())
    def test_one_keeps_the_window(self, f):
        assert mul(one(), f) == f

    @given(nonzero_series, nonzero_series)
    def test_orders_add(self, f, g):
        assert order(mul(f, g)) == order(f) + order(g)

    @given(nonzero_series, nonzero_series, windows)
    def test_truncated_product_needs_only_truncated_factors(self, f, g, T):
        T = T + order(f) + order(g)
        lhs = truncate(mul(f, g), T)
        rhs = mul(truncate(f, T - order(g)), truncate(g, T - order(f)))
        assert lhs == rhs
        assert rhs.trunc == T


class TestReciprocal:
    def test_geometric(self):
        inverse = reciprocal(one() + monomial(1), 5)
        assert inverse == PuiseuxSeries([(0, 1), (1, -1), (2, 1), (3, -1), (4, 1)], trunc=5)

    def test_leading_fractional_power(self):
        f = monomial(half) + monomial(Fraction(3, 2))
        inverse = reciprocal(f, 3)
        assert inverse == PuiseuxSeries(
            [(Fraction(-1, 2), 1), (half, -1), (Fraction(3, 2), 1)], trunc=Fraction(5, 2)
        )
        residual = subtract(mul(f, inverse), one())
        assert residual.is_zero
        assert residual.trunc == 3

    def test_zero_has_no_reciprocal(self):
        with pytest.raises(EmptySeriesError):
            reciprocal(zero(), 4)

    @given(nonzero_series)
    def test_inverse_below_window(self, f):
        residual = subtract(mul(f, reciprocal(f, 3)), one())
        assert residual.is_zero
        assert residual.trunc == 3


class TestEvaluate:
    def test_polynomial(self):
        f = one() + monomial(2)
        assert evaluate(f, half) == ApproxComplex(1.25)

    def test_fractional_exponent(self):
        assert evaluate(monomial(half, 3), 4).re == pytest.approx(6.0)

    def test_approx_domain(self):
        f = PuiseuxSeries([(1, 0.5)], domain=Domain.APPROX)
        assert evaluate(f, 2).re == 1.0

    @pytest.mark.parametrize("x", [0, -1, Fraction(-1, 2)])
    def test_only_positive_points(self, x):
        with pytest.raises(DomainError):
            evaluate(one(), x)


class TestGrid:
    def test_endpoints_inclusive(self):
        points = grid_points(Fraction(1, 10), Fraction(9, 10), Fraction(1, 10))
        assert len(points) == 9
        assert points[0] == Fraction(1, 10)
        assert points[-1] == Fraction(9, 10)

    def test_single_point(self):
        assert grid_points(1, 1, 1) == [1]

    def test_stops_short_of_half_a_step_past_stop(self):
        assert grid_points(1, Fraction(3, 2), 1) == [1]
        assert grid_points(Fraction(1, 2), Fraction(5, 4), Fraction(1, 2)) == [
            Fraction(1, 2),
            Fraction(1),
        ]

    @pytest.mark.parametrize("grid", [(0, 1, Fraction(1, 2)), (1, 2, 0), (2, 1, 1)])
    def test_bad_grids(self, grid):
        with pytest.raises(DomainError):
            grid_points(*grid)


def test_infinite_trunc_is_finite_series():
    assert one().is_finite
    assert one().trunc == INF
    assert not PuiseuxSeries([(0, 1)], trunc=2).is_finite
