# tests/strategies.py
"""Estrategias de hypothesis para series exactas finitas."""
from fractions import Fraction

from hypothesis import strategies as st

from alpha_core.checks import ALPHAS
from alpha_core.numeric import ExactComplex
from alpha_core.puiseux import PuiseuxSeries, truncate

exponents = st.builds(Fraction, st.integers(-6, 12), st.integers(1, 6))
rationals = st.builds(Fraction, st.integers(-20, 20).filter(bool), st.integers(1, 20))
real_coefficients = rationals.map(ExactComplex)
coefficients = real_coefficients | st.builds(ExactComplex, rationals, rationals)
truncs = st.builds(Fraction, st.integers(-3, 14), st.integers(1, 6))
windows = st.builds(Fraction, st.integers(1, 12), st.integers(1, 6))
alphas = st.sampled_from(ALPHAS)


def series(max_terms=6, min_terms=0, real=False):
    values = real_coefficients if real else coefficients
    return st.dictionaries(exponents, values, min_size=min_terms, max_size=max_terms).map(
        PuiseuxSeries
    )


def truncated_series(max_terms=6):
    """Series con trunc finito: sólo se conocen los términos por debajo de trunc."""
    return st.builds(truncate, series(max_terms), truncs)


nonzero_series = series(max_terms=4, min_terms=1)
