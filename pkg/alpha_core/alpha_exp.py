# alpha_core/alpha_exp.py
"""
α-exponente E_α(z) = Σ_k (z^α/α)^k / k! = exp(z^α/α).

El coeficiente de x^(kα) es 1/(α^k·k!), con Γ(k+1) en el denominador;
así d_α E_α = E_α.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .alpha_calc import AlphaOrder, alpha_deriv, as_alpha
from .exceptions import DomainError
from .puiseux import PuiseuxSeries, evaluate, subtract, truncate


@dataclass(frozen=True)
class AlphaExpSeries:
    alpha: AlphaOrder
    N: int
    series: PuiseuxSeries

    @property
    def window(self):
        """Exponentes por debajo de (N+1)α son exactos."""
        return self.series.trunc


def alpha_exp_series(alpha, N: int) -> AlphaExpSeries:
    """Σ_{k=0}^{N} x^(kα)/(α^k·k!) con trunc = (N+1)α, en el dominio exacto."""
    alpha = as_alpha(alpha)
    if N < 1:
        raise DomainError(f"The alpha-exponent needs N >= 1 terms, got {N}.")
    a = alpha.value
    terms = []
    c = Fraction(1)
    for k in range(N + 1):
        if k:
            c /= a * k
        terms.append((k * a, c))
    series = PuiseuxSeries(terms, trunc=(N + 1) * a, ramification=a.denominator)
    return AlphaExpSeries(alpha, N, series)


def _positive_real(z, name="z"):
    if isinstance(z, Fraction):
        z = float(z)
    z = float(z)
    if z < 0 or math.isnan(z):
        raise DomainError(f"{name} must be non-negative, got {z!r}.")
    return z


def alpha_exp_eval(z, alpha) -> float:
    """exp(z^α/α) en doble precisión; E_α(0) = 1 exacto."""
    a = float(as_alpha(alpha).value)
    z = _positive_real(z)
    if z == 0.0:
        return 1.0
    return math.exp(z**a / a)


def ode_residual(alpha, N: int) -> PuiseuxSeries:
    """d_αE − E sobre la ventana [0, Nα); cero exacto."""
    if N < 2:
        raise DomainError(f"The ODE check needs N >= 2, got {N}.")
    expansion = alpha_exp_series(alpha, N)
    residual = subtract(alpha_deriv(expansion.series, expansion.alpha), expansion.series)
    return truncate(residual, N * expansion.alpha.value)


def semigroup_gap(z1, z2, alpha) -> float:
    """E_α(z₁+z₂) − E_α(z₁)·E_α(z₂); se anula sólo en α = 1."""
    for name, value in (("z1", z1), ("z2", z2)):
        if not _positive_real(value, name) > 0:
            raise DomainError(f"{name} must be positive.")
    z1, z2 = float(z1), float(z2)
    return alpha_exp_eval(z1 + z2, alpha) - alpha_exp_eval(z1, alpha) * alpha_exp_eval(z2, alpha)


def series_vs_closed_form(alpha, N: int, x) -> float:
    """Desviación relativa entre la serie truncada y exp(x^α/α)."""
    expansion = alpha_exp_series(alpha, N)
    exact = alpha_exp_eval(x, alpha)
    return abs(evaluate(expansion.series, x).re - exact) / exact
