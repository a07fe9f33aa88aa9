# tests/test_numeric.py
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alpha_core.exceptions import DomainError, PoleError
from alpha_core.numeric import (
    ApproxComplex,
    ExactComplex,
    as_rational,
    binomial,
    exact_to_approx,
    gamma_eval,
    reciprocal_gamma,
)

mpmath.mp.dps = 40


class TestGamma:
    def test_half_is_sqrt_pi(self):
        assert gamma_eval(Fraction(1, 2)) == pytest.approx(math.sqrt(math.pi), rel=1e-13)

    @pytest.mark.parametrize("n", range(1, 16))
    def test_positive_integers_are_exact_factorials(self, n):
        assert gamma_eval(n) == float(math.factorial(n - 1))
        assert gamma_eval(Fraction(n)) == float(math.factorial(n - 1))

    @settings(max_examples=1000)
    @given(st.floats(min_value=0.1, max_value=20.0, exclude_min=True, exclude_max=True))
    def test_recurrence(self, x):
        following = gamma_eval(x + 1)
        assert abs(following - x * gamma_eval(x)) / following <= 1e-12

    def test_negative_half(self):
        assert gamma_eval(Fraction(-1, 2)) == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-13)

    @pytest.mark.parametrize("x", [0, -1, -3, Fraction(-7), -2.0])
    def test_nonpositive_integers_are_poles(self, x):
        with pytest.raises(PoleError) as exc:
            gamma_eval(x)
        assert exc.value.point == int(x)

    def test_near_pole_float_within_tolerance(self):
        with pytest.raises(PoleError):
            gamma_eval(-4.0 + 1e-16)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            gamma_eval(200.5)

    @given(
        st.fractions(min_value=-20, max_value=30, max_denominator=500).filter(
            lambda x: not (x.denominator == 1 and x <= 0)
        )
    )
    def test_matches_high_precision_oracle(self, x):
        expected = float(mpmath.gamma(mpmath.mpf(x.numerator) / x.denominator))
        assert gamma_eval(x) == pytest.approx(expected, rel=1e-12)

    def test_reciprocal_vanishes_at_poles(self):
        assert reciprocal_gamma(0) == 0.0
        assert reciprocal_gamma(-2) == 0.0
        assert reciprocal_gamma(3) == 0.5


class TestBinomial:
    def test_half_choose_two(self):
        assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)

    def test_choose_zero_is_one(self):
        assert binomial(Fraction(1, 3), 0) == 1

    def test_integer_alpha_terminates(self):
        assert binomial(3, 5) == 0
        assert binomial(4, 2) == 6


class TestComplex:
    def test_exact_product(self):
        assert ExactComplex(1, 2) * ExactComplex(3, -1) == ExactComplex(5, 5)

    def test_exact_division(self):
        assert ExactComplex(1) / ExactComplex(0, 1) == ExactComplex(0, -1)
        assert ExactComplex(3, 3) / 3 == ExactComplex(1, 1)

    def test_exact_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ExactComplex(0).inverse()
        with pytest.raises(ZeroDivisionError):
            ExactComplex(2, 1) / ExactComplex()

    def test_exact_views(self):
        c = ExactComplex(Fraction(1, 2), -3)
        assert c.real == ExactComplex(Fraction(1, 2))
        assert c.imag == ExactComplex(-3)
        assert c.conjugate() == ExactComplex(Fraction(1, 2), 3)
        assert not c.is_real
        assert str(c) == "(1/2-3*i)"

    def test_to_approx(self):
        assert ExactComplex(Fraction(1, 4), 2).to_approx() == ApproxComplex(0.25, 2.0)

    def test_to_approx_overflow(self):
        with pytest.raises(OverflowError):
            exact_to_approx(ExactComplex(Fraction(10**400)))

    def test_approx_rejects_non_finite(self):
        with pytest.raises(DomainError):
            ApproxComplex(math.inf)
        with pytest.raises(DomainError):
            ApproxComplex(0.0, math.nan)

    def test_approx_arithmetic_mixes_with_exact(self):
        result = ApproxComplex(1.0, 1.0) * ExactComplex(0, 1)
        assert complex(result) == complex(-1.0, 1.0)
        assert abs(ApproxComplex(3.0, 4.0)) == 5.0


class TestAsRational:
    def test_accepts_text_and_int(self):
        assert as_rational("3/4") == Fraction(3, 4)
        assert as_rational(2) == Fraction(2)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            as_rational(1.5)
