# alpha_core/alpha_calc.py
"""
α-derivada con regla de Leibnitz de dos términos, α-integral, el operador
Riemann–Liouville (RL) sobre monomios y los oráculos de leyes.

    d_α x^β = β x^(β−α)            (A(α) = 1; d_α x⁰ = 0)
    ∫ x^β d_αx = x^(β+α)/(β+α)
    D^α x^β = Γ(β+1)/Γ(β−α+1) · x^(β−α)     (β > −1)

Las operaciones de residuo (Leibnitz, regla de la cadena, teorema
fundamental) devuelven series: cero exacto significa que la ley se cumple
sobre la ventana de truncamiento que resulta de los contratos de puiseux.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DomainError, IntegralPoleError
from .numeric import ExactComplex, as_rational, binomial, gamma_eval, reciprocal_gamma
from .puiseux import (
    Domain,
    PuiseuxSeries,
    add,
    mul,
    one,
    power,
    scale,
    subtract,
    to_approx,
    zero,
)

# ─── Tipos ────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class AlphaOrder:
    """Orden α racional con 0 < α ≤ 1 (α = 1 es el caso clásico)."""

    value: Fraction

    def __post_init__(self):
        value = as_rational(self.value)
        if not 0 < value <= 1:
            raise DomainError(f"Alpha must satisfy 0 < alpha <= 1, got {value}.")
        object.__setattr__(self, "value", value)

    @property
    def is_classical(self):
        return self.value == 1

    def __str__(self):
        return str(self.value)


def as_alpha(alpha) -> AlphaOrder:
    return alpha if isinstance(alpha, AlphaOrder) else AlphaOrder(alpha)


@dataclass(frozen=True)
class RLCoefficient:
    beta: Fraction
    alpha: AlphaOrder
    value: float


# ─── α-derivada ──────────────────────────────────────────────────────────────


def alpha_deriv(f: PuiseuxSeries, alpha) -> PuiseuxSeries:
    """Término a término c x^β ↦ c·β·x^(β−α); el término constante se anula."""
    a = as_alpha(alpha).value
    return PuiseuxSeries(
        tuple((q - a, c * q) for q, c in f.terms if q != 0),
        trunc=f.trunc - a,
        domain=f.domain,
        ramification=math.lcm(f.ramification, a.denominator),
    )


def alpha_deriv_iter(f: PuiseuxSeries, alpha, m: int) -> PuiseuxSeries:
    """d_α aplicada m veces; m = 0 devuelve f."""
    if m < 0:
        raise DomainError(f"Iteration count must be non-negative, got {m}.")
    alpha = as_alpha(alpha)
    for _ in range(m):
        f = alpha_deriv(f, alpha)
    return f


def classical_deriv(f: PuiseuxSeries, n: int = 1) -> PuiseuxSeries:
    """Derivada ordinaria n-ésima (d₁ iterada)."""
    return alpha_deriv_iter(f, 1, n)


def alpha_integral(f: PuiseuxSeries, alpha) -> PuiseuxSeries:
    a = as_alpha(alpha).value
    terms = []
    for q, c in f.terms:
        if q + a == 0:
            raise IntegralPoleError(
                f"The alpha-integral of x^({q}) does not exist for alpha = {a}.",
                exponent=q,
            )
        terms.append((q + a, c / (q + a)))
    return PuiseuxSeries(
        terms,
        trunc=f.trunc + a,
        domain=f.domain,
        ramification=math.lcm(f.ramification, a.denominator),
    )


def fundamental_check(f: PuiseuxSeries, alpha):
    """
    (d_α∫f − f, ∫d_αf − f). La primera componente es cero; la segunda es
    menos el término constante de f, que d_α aniquila y ∫ no repone.
    """
    alpha = as_alpha(alpha)
    left = subtract(alpha_deriv(alpha_integral(f, alpha), alpha), f)
    right = subtract(alpha_integral(alpha_deriv(f, alpha), alpha), f)
    return left, right


def coefficient_rule_check(beta, epsilon, alpha):
    """(C(β−ε,α) + C(ε,α), C(β,α)) con C(β,α) = A(α)·β y A(α) = 1."""
    beta, epsilon = as_rational(beta), as_rational(epsilon)
    as_rational(alpha)

    def C(b):
        return b

    return C(beta - epsilon) + C(epsilon), C(beta)


# ─── Leyes ───────────────────────────────────────────────────────────────────


def leibnitz_residual(f: PuiseuxSeries, g: PuiseuxSeries, alpha) -> PuiseuxSeries:
    """d_α(fg) − g·d_αf − f·d_αg."""
    alpha = as_alpha(alpha)
    lhs = alpha_deriv(mul(f, g), alpha)
    rhs = add(mul(g, alpha_deriv(f, alpha)), mul(f, alpha_deriv(g, alpha)))
    return subtract(lhs, rhs)


@dataclass(frozen=True)
class Polynomial:
    """
    Polinomio en k variables: {(e₁, …, e_k): coeficiente}.

    Uso:
        F = Polynomial({(1, 1): 1}, nvars=2)      # F(u, v) = u·v
        F.partial(0)                              # v
    """

    terms: tuple = ()
    nvars: int = 1

    def __post_init__(self):
        pairs = self.terms.items() if isinstance(self.terms, dict) else self.terms
        combined = {}
        for exponents, value in pairs:
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != self.nvars or any(e < 0 for e in exponents):
                raise DomainError(f"Bad exponent tuple {exponents} for {self.nvars} variables.")
            if not isinstance(value, ExactComplex):
                value = ExactComplex(as_rational(value))
            combined[exponents] = combined.get(exponents, ExactComplex()) + value
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in combined.items() if c))
        )

    def partial(self, k: int) -> Polynomial:
        terms = []
        for exponents, c in self.terms:
            if exponents[k]:
                lowered = exponents[:k] + (exponents[k] - 1,) + exponents[k + 1 :]
                terms.append((lowered, c * exponents[k]))
        return Polynomial(tuple(terms), self.nvars)

    def compose(self, gs, domain=Domain.EXACT) -> PuiseuxSeries:
        """F(g₁, …, g_k)."""
        if len(gs) != self.nvars:
            raise DomainError(f"Expected {self.nvars} series, got {len(gs)}.")
        if gs:
            domain = gs[0].domain
        powers = {}
        result = zero(domain)
        for exponents, c in self.terms:
            product = one(domain)
            for i, e in enumerate(exponents):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = power(gs[i], e)
                    product = mul(product, powers[(i, e)])
            result = add(result, scale(c, product))
        return result


def chain_rule_apply(F: Polynomial, gs, alpha) -> PuiseuxSeries:
    """Σ_k (∂F/∂g_k)(g)·d_α g_k."""
    alpha = as_alpha(alpha)
    if len(gs) != F.nvars:
        raise DomainError(f"Expected {F.nvars} series, got {len(gs)}.")
    domain = gs[0].domain if gs else Domain.EXACT
    result = zero(domain)
    for k, g in enumerate(gs):
        result = add(result, mul(F.partial(k).compose(gs, domain), alpha_deriv(g, alpha)))
    return result


# ─── Riemann–Liouville ───────────────────────────────────────────────────────


def _rl_value(beta: Fraction, order: Fraction) -> float:
    # 1/Γ se anula en los polos del denominador
    return gamma_eval(beta + 1) * reciprocal_gamma(beta - order + 1)


def rl_deriv_monomial(beta, alpha) -> RLCoefficient:
    """C*(β, α) = Γ(β+1)/Γ(β−α+1), definido para β > −1."""
    beta = as_rational(beta)
    alpha = as_alpha(alpha)
    if beta <= -1:
        raise DomainError(f"The RL monomial rule needs beta > -1, got {beta}.")
    return RLCoefficient(beta, alpha, _rl_value(beta, alpha.value))


def _rl_series(f: PuiseuxSeries, order: Fraction) -> PuiseuxSeries:
    for q, _ in f.terms:
        if q <= -1:
            raise DomainError(f"The RL operator needs exponents > -1; found x^({q}).")
    f = to_approx(f)
    return PuiseuxSeries(
        tuple((q - order, c * _rl_value(q, order)) for q, c in f.terms),
        trunc=f.trunc - order,
        domain=Domain.APPROX,
        ramification=math.lcm(f.ramification, order.denominator),
    )


def rl_deriv_series(f: PuiseuxSeries, alpha) -> PuiseuxSeries:
    """D^α término a término; el resultado vive en el dominio aproximado."""
    return _rl_series(f, as_alpha(alpha).value)


def rl_leibnitz_partial_sum(f: PuiseuxSeries, g: PuiseuxSeries, alpha, N: int) -> PuiseuxSeries:
    """
    Σ_{n=0}^{N} binom(α, n)·D^(α−n)f·g⁽ⁿ⁾.

    g debe ser polinomio en potencias enteras no negativas; entonces la suma
    termina y coincide con D^α(fg).
    """
    a = as_alpha(alpha).value
    if N < 0:
        raise DomainError(f"N must be non-negative, got {N}.")
    for q, _ in g.terms:
        if q.denominator != 1 or q < 0:
            raise DomainError(f"The binomial sum needs integer powers in g; found x^({q}).")
    g = to_approx(g)
    result = zero(Domain.APPROX)
    for n in range(N + 1):
        weight = binomial(a, n)
        g_n = classical_deriv(g, n)
        if not weight or g_n.is_zero:
            continue
        result = add(result, scale(weight, mul(_rl_series(f, a - n), g_n)))
    return result


def rl_two_term_gap(f: PuiseuxSeries, g: PuiseuxSeries, alpha) -> PuiseuxSeries:
    """D^α(fg) − g·D^αf − f·D^αg; no nulo en general para α < 1."""
    alpha = as_alpha(alpha)
    f_approx, g_approx = to_approx(f), to_approx(g)
    product = rl_deriv_series(mul(f_approx, g_approx), alpha)
    return subtract(
        product,
        add(
            mul(g_approx, rl_deriv_series(f_approx, alpha)),
            mul(f_approx, rl_deriv_series(g_approx, alpha)),
        ),
    )
