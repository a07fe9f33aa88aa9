# alpha_core/madelung.py
"""
Separación de Madelung para la ecuación candidata

    iħ ∂_tψ = D_α ħ² d²_α ψ + Vψ,      ψ = R·E_α(iS/ħ)

E_α se trata como unidad formal que se cancela: toda cuenta se hace sobre
el coeficiente de E_α, con series exactas de coeficientes en ℚ(i).

Dos versiones del par (continuidad, Hamilton–Jacobi) conviven aquí:

    continuity_residual / hj_residual → las ecuaciones tal como se imprimen
    derived_split                     → lo que sale de separar parte real e
                                        imaginaria del coeficiente de E_α

Difieren en el signo de los términos D_α de la continuidad y en el factor
D_α de (d_αS)²; split_discrepancy() devuelve esa diferencia.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .alpha_calc import AlphaOrder, alpha_deriv, alpha_deriv_iter, as_alpha, classical_deriv
from .conf import get_default_trunc
from .exceptions import DomainError, DomainMismatchError, EmptySeriesError
from .numeric import ExactComplex, as_rational
from .puiseux import (
    INF,
    PuiseuxSeries,
    add,
    evaluate,
    grid_points,
    imag_part,
    mul,
    negate,
    order,
    real_part,
    reciprocal,
    scale,
    subtract,
    truncate,
    valuation,
    zero,
)

logger = logging.getLogger(__name__)


def _require_real(f: PuiseuxSeries, name: str):
    """ψ = R·E_α(iS/ħ) separa en partes real e imaginaria sólo con campos reales."""
    if not imag_part(f).is_zero:
        raise DomainError(f"{name} must have real coefficients, got {f}.")


def require_field(f: PuiseuxSeries, name: str):
    """Campo del estado: serie exacta de coeficientes reales."""
    if not f.is_exact:
        raise DomainMismatchError(f"{name} must be an exact series.")
    _require_real(f, name)


# ─── Estado ──────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class MadelungState:
    """(R, S, R_t, S_t, V, ħ, D_α, α); series exactas, ħ > 0."""

    R: PuiseuxSeries
    S: PuiseuxSeries
    R_t: PuiseuxSeries
    S_t: PuiseuxSeries
    V: PuiseuxSeries
    hbar: Fraction
    Dalpha: Fraction
    alpha: AlphaOrder

    def __post_init__(self):
        for name in ("R", "S", "R_t", "S_t", "V"):
            require_field(getattr(self, name), name)
        hbar = as_rational(self.hbar)
        if hbar <= 0:
            raise DomainError(f"hbar must be positive, got {hbar}.")
        object.__setattr__(self, "hbar", hbar)
        object.__setattr__(self, "Dalpha", as_rational(self.Dalpha))
        object.__setattr__(self, "alpha", as_alpha(self.alpha))


@dataclass(frozen=True)
class SplitResiduals:
    continuity: PuiseuxSeries
    hamilton_jacobi: PuiseuxSeries

    @property
    def windows(self):
        """Ventanas de validez (trunc) de cada residuo."""
        return self.continuity.trunc, self.hamilton_jacobi.trunc

    @property
    def is_zero(self):
        return self.continuity.is_zero and self.hamilton_jacobi.is_zero


def _divide(numerator: PuiseuxSeries, R: PuiseuxSeries, T) -> PuiseuxSeries:
    """numerator/R exacto por debajo de T."""
    if R.is_zero:
        raise EmptySeriesError("R must have a nonzero leading coefficient.")
    T = as_rational(T)
    lower = valuation(numerator)
    if lower == INF:
        return zero(R.domain, trunc=T)
    inverse = reciprocal(R, T - lower + order(R))
    return truncate(mul(numerator, inverse), T)


# ─── Potencial cuántico ───────────────────────────────────────────────────────


def _curvature_ratio(R: PuiseuxSeries, alpha, T) -> PuiseuxSeries:
    """d²_αR / R truncado en T; R real y no nula."""
    if R.is_zero:
        raise EmptySeriesError("Q_alpha needs a nonzero amplitude R.")
    _require_real(R, "R")
    return _divide(alpha_deriv_iter(R, as_alpha(alpha), 2), R, T)


def quantum_potential(R: PuiseuxSeries, alpha, Dalpha, hbar, T) -> PuiseuxSeries:
    """
    Q_α = −D_α ħ² d²_αR / R, truncado en T.

    R sin término constante es válido: el resultado trae exponentes
    negativos, visibles en su orden.
    """
    factor = -(as_rational(Dalpha) * as_rational(hbar) ** 2)
    return scale(factor, _curvature_ratio(R, alpha, T))


def sample_qpotential(R, alpha, Dalpha, hbar, T, grid):
    """
    [(x, Q_α(x))] sobre la rejilla (start, stop, step), extremos incluidos.

    El factor −D_α ħ² se aplica en punto flotante sobre d²_αR/R evaluado,
    así una curvatura nula muestrea −0.0. La serie sólo es confiable para
    x menor que la distancia al cero más cercano de R.
    """
    points = grid_points(*grid)
    factor = -float(as_rational(Dalpha) * as_rational(hbar) ** 2)
    ratio = _curvature_ratio(R, alpha, T)
    logger.debug("sample_qpotential: d2R/R = %s", ratio)
    return [(float(x), factor * evaluate(ratio, x).re) for x in points]


# ─── Ecuaciones impresas ──────────────────────────────────────────────────────


def continuity_residual(state: MadelungState) -> PuiseuxSeries:
    """R_t + 2D_α(d_αR)(d_αS) + D_α R d²_αS."""
    a, D = state.alpha, state.Dalpha
    transport = mul(alpha_deriv(state.R, a), alpha_deriv(state.S, a))
    spreading = mul(state.R, alpha_deriv_iter(state.S, a, 2))
    return add(state.R_t, add(scale(2 * D, transport), scale(D, spreading)))


def hj_residual(state: MadelungState) -> PuiseuxSeries:
    """(1/α)S_t R + VR + D_α ħ² d²_αR − R(d_αS)²."""
    a, D = state.alpha, state.Dalpha
    dS = alpha_deriv(state.S, a)
    terms = [
        scale(1 / a.value, mul(state.S_t, state.R)),
        mul(state.V, state.R),
        scale(D * state.hbar**2, alpha_deriv_iter(state.R, a, 2)),
        negate(mul(state.R, mul(dS, dS))),
    ]
    result = terms[0]
    for term in terms[1:]:
        result = add(result, term)
    return result


# ─── Derivación ──────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class PhaseCarrier:
    """
    amplitude·E_α(iS/ħ), guardando sólo la amplitud compleja.

    d_alpha() aplica Leibnitz y la regla de la cadena:
        d_α(A·E) = (d_αA + A·(i/ħ)·d_αS)·E
    d_t() aplica ∂_tE_α(z) = (z_t/α)·E_α con z = iS/ħ.
    """

    amplitude: PuiseuxSeries
    S: PuiseuxSeries
    hbar: Fraction
    alpha: AlphaOrder

    @property
    def i_over_hbar(self):
        return ExactComplex(0, 1 / self.hbar)

    def d_alpha(self) -> PhaseCarrier:
        phase = scale(self.i_over_hbar, alpha_deriv(self.S, self.alpha))
        amplitude = add(alpha_deriv(self.amplitude, self.alpha), mul(self.amplitude, phase))
        return PhaseCarrier(amplitude, self.S, self.hbar, self.alpha)

    def d_t(self, amplitude_t: PuiseuxSeries, S_t: PuiseuxSeries) -> PhaseCarrier:
        z_t = scale(self.i_over_hbar, S_t)
        amplitude = add(amplitude_t, scale(1 / self.alpha.value, mul(self.amplitude, z_t)))
        return PhaseCarrier(amplitude, self.S, self.hbar, self.alpha)


def derived_split(state: MadelungState) -> SplitResiduals:
    """
    Continuidad = Im(coef)/ħ:  R_t − 2D_α(d_αR)(d_αS) − D_α R d²_αS
    H–J        = −Re(coef):   (1/α)S_t R + VR + D_α ħ² d²_αR − D_α R(d_αS)²
    """
    a, D = state.alpha, state.Dalpha
    dR, dS = alpha_deriv(state.R, a), alpha_deriv(state.S, a)
    continuity = subtract(
        state.R_t,
        add(scale(2 * D, mul(dR, dS)), scale(D, mul(state.R, alpha_deriv(dS, a)))),
    )
    hamilton_jacobi = add(
        add(scale(1 / a.value, mul(state.S_t, state.R)), mul(state.V, state.R)),
        subtract(
            scale(D * state.hbar**2, alpha_deriv(dR, a)),
            scale(D, mul(state.R, mul(dS, dS))),
        ),
    )
    return SplitResiduals(continuity, hamilton_jacobi)


def split_discrepancy(state: MadelungState) -> SplitResiduals:
    """derived_split menos las ecuaciones impresas."""
    derived = derived_split(state)
    return SplitResiduals(
        subtract(derived.continuity, continuity_residual(state)),
        subtract(derived.hamilton_jacobi, hj_residual(state)),
    )


def derivation_audit(R, S, S_t, R_t, alpha, hbar, V=None, Dalpha=1):
    """
    Rehace la cuenta sobre el coeficiente de E_α: iħ∂_tψ − D_αħ²d²_αψ − Vψ
    con las reglas de producto, cadena y tiempo, separa parte imaginaria y
    real, y las compara con derived_split. Devuelve (residuo imaginario,
    residuo real); ambos son cero exacto.
    """
    V = zero() if V is None else V
    state = MadelungState(R, S, R_t, S_t, V, hbar, Dalpha, alpha)
    psi = PhaseCarrier(state.R, state.S, state.hbar, state.alpha)

    lhs = scale(ExactComplex(0, state.hbar), psi.d_t(state.R_t, state.S_t).amplitude)
    kinetic = scale(state.Dalpha * state.hbar**2, psi.d_alpha().d_alpha().amplitude)
    coefficient = subtract(lhs, add(kinetic, mul(state.V, state.R)))

    derived = derived_split(state)
    imaginary = subtract(scale(1 / state.hbar, imag_part(coefficient)), derived.continuity)
    real = subtract(negate(real_part(coefficient)), derived.hamilton_jacobi)
    return imaginary, real


# ─── Caso clásico ────────────────────────────────────────────────────────────


def classical_consistency(R, S, R_t, S_t, V, m, hbar, T=None):
    """
    Residuos clásicos (α = 1):
        S_t + S'²/2m + V − ħ²R''/(2mR)
        ∂_t(R²) + (1/m)(R²S')'        con ∂_t(R²) = 2RR_t
    El cociente R''/R se expande hasta T (ALPHA_CALC_DEFAULT_TRUNC si falta).
    """
    if R.is_zero:
        raise EmptySeriesError("R must have a nonzero leading coefficient.")
    T = get_default_trunc() if T is None else as_rational(T)
    m, hbar = as_rational(m), as_rational(hbar)
    dS = classical_deriv(S)

    quantum = scale(hbar**2 / (2 * m), _divide(classical_deriv(R, 2), R, T))
    hamilton_jacobi = subtract(
        add(add(S_t, scale(1 / (2 * m), mul(dS, dS))), V),
        quantum,
    )
    continuity = add(
        scale(2, mul(R, R_t)),
        scale(1 / m, classical_deriv(mul(mul(R, R), dS))),
    )
    return hamilton_jacobi, continuity
