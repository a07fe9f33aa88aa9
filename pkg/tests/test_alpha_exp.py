# tests/test_alpha_exp.py
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alpha_core.alpha_exp import (
    alpha_exp_eval,
    alpha_exp_series,
    ode_residual,
    semigroup_gap,
    series_vs_closed_form,
)
from alpha_core.checks import ALPHAS
from alpha_core.exceptions import DomainError
from alpha_core.puiseux import PuiseuxSeries


def test_coefficients(half):
    expansion = alpha_exp_series(half, 3)
    assert expansion.series == PuiseuxSeries(
        {0: 1, Fraction(1, 2): 2, 1: 2, Fraction(3, 2): Fraction(4, 3)}, trunc=2
    )
    assert expansion.window == 2


def test_needs_one_term():
    with pytest.raises(DomainError):
        alpha_exp_series(Fraction(1, 2), 0)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("N", [2, 5, 12])
def test_satisfies_its_equation(alpha, N):
    residual = ode_residual(alpha, N)
    assert residual.is_zero
    assert residual.trunc == N * alpha


def test_ode_needs_two_terms():
    with pytest.raises(DomainError):
        ode_residual(Fraction(1, 2), 1)


def test_closed_form():
    assert alpha_exp_eval(0, Fraction(1, 2)) == 1.0
    assert alpha_exp_eval(4, Fraction(1, 2)) == pytest.approx(math.exp(4))
    assert alpha_exp_eval(Fraction(1, 2), 1) == pytest.approx(math.exp(0.5))


def test_closed_form_rejects_negative_arguments():
    with pytest.raises(DomainError):
        alpha_exp_eval(-1, Fraction(1, 2))


def test_semigroup_fails_below_one():
    gap = semigroup_gap(1, 1, Fraction(1, 2))
    assert gap == pytest.approx(math.exp(2 * math.sqrt(2)) - math.exp(4), rel=1e-12)
    assert gap == pytest.approx(-37.679, abs=1e-3)


def test_semigroup_holds_at_one():
    assert semigroup_gap(Fraction(1, 3), 2, 1) == pytest.approx(0.0, abs=1e-12)


def test_semigroup_needs_positive_points():
    with pytest.raises(DomainError):
        semigroup_gap(0, 1, Fraction(1, 2))


def test_series_converges_to_closed_form():
    assert series_vs_closed_form(Fraction(1, 2), 40, 1) < 1e-12
    assert series_vs_closed_form(Fraction(1, 3), 3, 1) > 1e-3


@pytest.mark.parametrize("alpha", [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1)])
def test_series_tracks_closed_form_on_unit_interval(alpha):
    for k in range(1, 21):
        assert series_vs_closed_form(alpha, 40, Fraction(k, 10)) <= 1e-10


@given(
    st.floats(min_value=1e-3, max_value=10.0),
    st.floats(min_value=1e-3, max_value=10.0),
)
@settings(max_examples=100)
def test_semigroup_at_one(z1, z2):
    assert abs(semigroup_gap(z1, z2, 1)) <= 1e-12 * alpha_exp_eval(z1 + z2, 1)
