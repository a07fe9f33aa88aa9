# alpha_core/checks.py
"""
Suites de verificación de leyes con casos aleatorios reproducibles.

Distribución de las series aleatorias (exactas, finitas):
    - entre 1 y 8 términos
    - exponentes p/q con p ∈ [−6, 12], q ∈ [1, 6]
    - coeficientes p/q con 0 < |p| ≤ 20, 1 ≤ q ≤ 20
    - α = m/n con 0 < m < n ≤ 6, o α = 1

Uso:
    report = check_suite("leibnitz", cases=500, seed=42)
    report.render()      # "leibnitz: 500/500 residuals exactly zero"
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from .alpha_calc import (
    Polynomial,
    alpha_deriv,
    alpha_deriv_iter,
    chain_rule_apply,
    fundamental_check,
    leibnitz_residual,
    rl_two_term_gap,
)
from .alpha_exp import ode_residual
from .exceptions import DomainError, UnknownSuiteError
from .madelung import derivation_audit
from .puiseux import PuiseuxSeries, constant_term, monomial, negate, subtract

logger = logging.getLogger(__name__)

ALPHAS = tuple(
    sorted({Fraction(m, n) for n in range(2, 7) for m in range(1, n)} | {Fraction(1)})
)
GAP_TOLERANCE = 1e-12


class SeriesSampler(random.Random):
    """Generador determinista de series, α y polinomios aleatorios."""

    def coefficient(self):
        numerator = self.choice([p for p in range(-20, 21) if p])
        return Fraction(numerator, self.randint(1, 20))

    def exponent(self):
        return Fraction(self.randint(-6, 12), self.randint(1, 6))

    def series(self, max_terms=8, exclude=()):
        terms = {}
        for _ in range(self.randint(1, max_terms)):
            q = self.exponent()
            if q not in exclude:
                terms[q] = self.coefficient()
        return PuiseuxSeries(terms)

    def alpha(self, classical=True):
        choices = ALPHAS if classical else ALPHAS[:-1]
        return self.choice(choices)

    def positive_rational(self):
        return Fraction(self.randint(1, 20), self.randint(1, 20))

    def polynomial(self, nvars, max_degree=3, max_terms=4):
        terms = {}
        for _ in range(self.randint(1, max_terms)):
            degree = self.randint(0, max_degree)
            exponents = [0] * nvars
            for _ in range(degree):
                exponents[self.randrange(nvars)] += 1
            terms[tuple(exponents)] = self.coefficient()
        return Polynomial(terms, nvars)


# ─── Casos ───────────────────────────────────────────────────────────────────


def _leibnitz_case(rng):
    f, g, alpha = rng.series(), rng.series(), rng.alpha()
    residual = leibnitz_residual(f, g, alpha)
    return residual.is_zero, f"f = {f}, g = {g}, alpha = {alpha}"


def _chain_case(rng):
    nvars = rng.randint(1, 2)
    F = rng.polynomial(nvars)
    gs = [rng.series(max_terms=4) for _ in range(nvars)]
    alpha = rng.alpha()
    residual = subtract(chain_rule_apply(F, gs, alpha), alpha_deriv(F.compose(gs), alpha))
    return residual.is_zero, f"F = {dict(F.terms)}, g = {[str(g) for g in gs]}, alpha = {alpha}"


def _commute_case(rng):
    f, alpha = rng.series(), rng.alpha()
    m, ell = rng.randint(0, 4), rng.randint(0, 4)
    lhs = alpha_deriv_iter(alpha_deriv_iter(f, alpha, m), alpha, ell)
    rhs = alpha_deriv_iter(alpha_deriv_iter(f, alpha, ell), alpha, m)
    return lhs == rhs, f"f = {f}, alpha = {alpha}, m = {m}, l = {ell}"


def _fundamental_case(rng):
    alpha = rng.alpha()
    f = rng.series(exclude=(-alpha,))
    left, right = fundamental_check(f, alpha)
    ok = left.is_zero and right == negate(constant_term(f))
    return ok, f"f = {f}, alpha = {alpha}"


def _rl_gap_case(rng, index):
    if index == 0:
        f = g = monomial(1)
        alpha = Fraction(1, 2)
    else:
        f = monomial(Fraction(rng.randint(1, 12), rng.randint(1, 6)), rng.coefficient())
        g = monomial(Fraction(rng.randint(1, 12), rng.randint(1, 6)), rng.coefficient())
        alpha = rng.alpha(classical=False)
    gap = rl_two_term_gap(f, g, alpha)
    ok = any(abs(c) > GAP_TOLERANCE for _, c in gap.terms)
    return ok, f"f = {f}, g = {g}, alpha = {alpha}"


def _exp_ode_case(rng):
    alpha, N = rng.alpha(), rng.randint(2, 25)
    return ode_residual(alpha, N).is_zero, f"alpha = {alpha}, N = {N}"


def _madelung_audit_case(rng):
    R, S, R_t, S_t, V = (rng.series(max_terms=6) for _ in range(5))
    alpha, hbar, Dalpha = rng.alpha(), rng.positive_rational(), rng.coefficient()
    imaginary, real = derivation_audit(R, S, S_t, R_t, alpha, hbar, V=V, Dalpha=Dalpha)
    ok = imaginary.is_zero and real.is_zero
    return ok, f"R = {R}, S = {S}, alpha = {alpha}, hbar = {hbar}, Dalpha = {Dalpha}"


SUITES = {
    "leibnitz": (lambda rng, i: _leibnitz_case(rng), "residuals exactly zero"),
    "chain": (lambda rng, i: _chain_case(rng), "residuals exactly zero"),
    "commute": (lambda rng, i: _commute_case(rng), "orderings exactly equal"),
    "fundamental": (lambda rng, i: _fundamental_case(rng), "residuals exactly as predicted"),
    "rl-gap": (_rl_gap_case, "gaps nonzero"),
    "exp-ode": (lambda rng, i: _exp_ode_case(rng), "residuals exactly zero"),
    "madelung-audit": (lambda rng, i: _madelung_audit_case(rng), "residuals exactly zero"),
}


@dataclass(frozen=True)
class SuiteReport:
    name: str
    cases: int
    passed: int
    verdict: str
    counterexample: str | None = None

    @property
    def ok(self):
        return self.passed == self.cases

    def render(self):
        lines = [f"{self.name}: {self.passed}/{self.cases} {self.verdict}"]
        if self.counterexample:
            lines.append(f"first counterexample: {self.counterexample}")
        return "\n".join(lines)


def check_suite(name: str, cases: int, seed: int) -> SuiteReport:
    """Corre `cases` casos de la suite; determinista para una semilla dada."""
    if name not in SUITES:
        raise UnknownSuiteError(
            f"Unknown suite '{name}'. Available suites: {', '.join(SUITES)}",
            suite=name,
        )
    if cases < 1:
        raise DomainError(f"At least one case is required, got {cases}.")

    run_case, verdict = SUITES[name]
    rng = SeriesSampler(seed)
    passed = 0
    counterexample = None
    for index in range(cases):
        ok, description = run_case(rng, index)
        if ok:
            passed += 1
        elif counterexample is None:
            counterexample = description
            logger.warning("%s: case %d failed (%s)", name, index, description)
    logger.debug("%s: %d/%d passed (seed %d)", name, passed, cases, seed)
    return SuiteReport(name, cases, passed, verdict, counterexample)
