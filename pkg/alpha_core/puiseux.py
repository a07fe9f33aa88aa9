# alpha_core/puiseux.py
"""
Series de Puiseux truncadas en una variable, alrededor de 0.

Una serie es una suma finita Σ c_q x^q con exponentes racionales sobre la
retícula (1/n)ℤ más una cota `trunc`: los coeficientes con exponente
≥ trunc son desconocidos. trunc = ∞ significa suma exacta.

Reglas de propagación:
    add/sub   → trunc = min(trunc_f, trunc_g)
    mul       → trunc = min(v(f) + trunc_g, v(g) + trunc_f)
                (v = orden, o trunc si la serie no tiene términos)
    reciprocal → ver reciprocal()

Uso:
    f = monomial(Fraction(1, 2)) + one()
    g = f * f                                  # 1 + 2x^(1/2) + x
    order(g)                                   # Fraction(0)
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()
from fractions import Fraction

from .exceptions import DomainError, DomainMismatchError, EmptySeriesError
from .numeric import ApproxComplex, Coefficient, ExactComplex, as_rational

logger = logging.getLogger(__name__)

INF = math.inf


class Domain(StrEnum):
    EXACT = "exact"
    APPROX = "approx"


def _as_trunc(value):
    if isinstance(value, float):
        if value == INF:
            return INF
        raise DomainError(f"Truncation must be a rational or +inf, got {value!r}.")
    return as_rational(value)


def _coerce_coefficient(value, domain):
    if domain is Domain.EXACT:
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, (int, Fraction)):
            return ExactComplex(value)
        raise DomainMismatchError(f"Coefficient {value!r} is not exact.")
    if isinstance(value, ApproxComplex):
        return value
    if isinstance(value, ExactComplex):
        return value.to_approx()
    if isinstance(value, (int, float, Fraction)):
        return ApproxComplex(float(value))
    if isinstance(value, complex):
        return ApproxComplex(value.real, value.imag)
    raise DomainMismatchError(f"Coefficient {value!r} is not numeric.")


@dataclass(frozen=True)
class PuiseuxSeries:
    """
    Serie de Puiseux con coeficientes exactos o aproximados.

    `terms` acepta un dict {exponente: coeficiente} o pares; al construir se
    combinan repetidos, se eliminan ceros y exponentes ≥ trunc, y se ordena.
    La ramificación declarada se amplía al mcm de los denominadores presentes
    y no participa en la igualdad.
    """

    terms: tuple = ()
    trunc: Fraction | float = INF
    domain: Domain = Domain.EXACT
    ramification: int = field(default=1, compare=False)

    def __post_init__(self):
        domain = Domain(self.domain)
        trunc = _as_trunc(self.trunc)
        pairs = self.terms.items() if isinstance(self.terms, dict) else self.terms

        combined = {}
        for exponent, value in pairs:
            exponent = as_rational(exponent)
            value = _coerce_coefficient(value, domain)
            if exponent in combined:
                combined[exponent] = combined[exponent] + value
            else:
                combined[exponent] = value

        ramification = int(self.ramification)
        if ramification < 1:
            raise DomainError(f"Ramification must be positive, got {ramification}.")
        kept = []
        for exponent in sorted(combined):
            value = combined[exponent]
            if not value or exponent >= trunc:
                continue
            ramification = math.lcm(ramification, exponent.denominator)
            kept.append((exponent, value))

        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "terms", tuple(kept))
        object.__setattr__(self, "ramification", ramification)

    # ─── Consultas ────────────────────────────────────────────────────────────

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_exact(self):
        return self.domain is Domain.EXACT

    @property
    def is_finite(self):
        """True si trunc = ∞ (polinomio en x^(±1/n))."""
        return self.trunc == INF

    def as_dict(self):
        return dict(self.terms)

    def exponents(self):
        return [exponent for exponent, _ in self.terms]

    # ─── Operadores ───────────────────────────────────────────────────────────

    def __add__(self, other):
        return add(self, _lift(other, self))

    __radd__ = __add__

    def __sub__(self, other):
        return subtract(self, _lift(other, self))

    def __rsub__(self, other):
        return subtract(_lift(other, self), self)

    def __mul__(self, other):
        if isinstance(other, PuiseuxSeries):
            return mul(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def __neg__(self):
        return negate(self)

    def __pow__(self, k):
        return power(self, k)

    def __str__(self):
        from .parser import format_series

        text = format_series(self)
        return text if self.is_finite else f"{text} + O(x^({self.trunc}))"


def _lift(value, like):
    if isinstance(value, PuiseuxSeries):
        return value
    return constant(value, like.domain)


def _check_domains(f, g):
    if f.domain is not g.domain:
        raise DomainMismatchError(
            f"Cannot combine {f.domain.value} and {g.domain.value} series."
        )


# ─── Constructores ───────────────────────────────────────────────────────────


def zero(domain=Domain.EXACT, trunc=INF):
    return PuiseuxSeries((), trunc=trunc, domain=domain)


def constant(c, domain=Domain.EXACT):
    return PuiseuxSeries({Fraction(0): c}, domain=domain)


def one(domain=Domain.EXACT):
    return constant(1, domain)


def monomial(exponent, c=1, domain=Domain.EXACT):
    return PuiseuxSeries({as_rational(exponent): c}, domain=domain)


# ─── Orden y coeficientes ─────────────────────────────────────────────────────


def order(f: PuiseuxSeries) -> Fraction:
    """Exponente mínimo de f (orden O(f))."""
    if not f.terms:
        raise EmptySeriesError("The zero series has no order.")
    return f.terms[0][0]


def valuation(f: PuiseuxSeries):
    """Cota inferior del soporte: el orden, o trunc si no hay términos."""
    return f.terms[0][0] if f.terms else f.trunc


def coefficient(f: PuiseuxSeries, exponent) -> Coefficient:
    exponent = as_rational(exponent)
    for q, c in f.terms:
        if q == exponent:
            return c
    return _coerce_coefficient(0, f.domain)


def constant_term(f: PuiseuxSeries) -> PuiseuxSeries:
    c = coefficient(f, 0)
    if not c:
        return zero(f.domain)
    return constant(c, f.domain)


# ─── Anillo ──────────────────────────────────────────────────────────────────


def add(f: PuiseuxSeries, g: PuiseuxSeries) -> PuiseuxSeries:
    _check_domains(f, g)
    return PuiseuxSeries(
        f.terms + g.terms,
        trunc=min(f.trunc, g.trunc),
        domain=f.domain,
        ramification=math.lcm(f.ramification, g.ramification),
    )


def negate(f: PuiseuxSeries) -> PuiseuxSeries:
    return PuiseuxSeries(
        tuple((q, -c) for q, c in f.terms),
        trunc=f.trunc,
        domain=f.domain,
        ramification=f.ramification,
    )


def subtract(f: PuiseuxSeries, g: PuiseuxSeries) -> PuiseuxSeries:
    return add(f, negate(g))


def scale(c, f: PuiseuxSeries) -> PuiseuxSeries:
    """c·f; escalar cero da la serie cero con el mismo trunc."""
    c = _coerce_coefficient(c, f.domain)
    return PuiseuxSeries(
        tuple((q, c * value) for q, value in f.terms),
        trunc=f.trunc,
        domain=f.domain,
        ramification=f.ramification,
    )


def mul(f: PuiseuxSeries, g: PuiseuxSeries) -> PuiseuxSeries:
    """Producto de Cauchy con la regla de truncamiento del módulo."""
    _check_domains(f, g)
    if f.trunc == INF and g.trunc == INF:
        trunc = INF
    else:
        trunc = min(valuation(f) + g.trunc, valuation(g) + f.trunc)

    products = {}
    for p, a in f.terms:
        for q, b in g.terms:
            exponent = p + q
            if exponent >= trunc:
                continue
            value = a * b
            products[exponent] = products[exponent] + value if exponent in products else value
    return PuiseuxSeries(
        products,
        trunc=trunc,
        domain=f.domain,
        ramification=math.lcm(f.ramification, g.ramification),
    )


def power(f: PuiseuxSeries, k: int) -> PuiseuxSeries:
    if k < 0:
        raise DomainError("Use reciprocal() for negative powers.")
    result = one(f.domain)
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def shift(f: PuiseuxSeries, exponent) -> PuiseuxSeries:
    """x^q · f."""
    exponent = as_rational(exponent)
    return PuiseuxSeries(
        tuple((q + exponent, c) for q, c in f.terms),
        trunc=f.trunc + exponent,
        domain=f.domain,
        ramification=math.lcm(f.ramification, exponent.denominator),
    )


def truncate(f: PuiseuxSeries, T) -> PuiseuxSeries:
    """Descarta exponentes ≥ T; trunc = min(trunc, T)."""
    return PuiseuxSeries(
        f.terms,
        trunc=min(f.trunc, _as_trunc(T)),
        domain=f.domain,
        ramification=f.ramification,
    )


def reciprocal(f: PuiseuxSeries, T) -> PuiseuxSeries:
    """
    g tal que f·g = 1 + O(x^T).

    Se factoriza el término líder c₀x^(q₀) y se expande la serie geométrica
    1/(1+h) hasta el exponente T; el resultado tiene trunc = T − q₀ (o menos
    si f trae su propio trunc).
    """
    if not f.terms:
        raise EmptySeriesError("Cannot invert the zero series.")
    T = as_rational(T)
    q0, c0 = f.terms[0]
    inverse_c0 = c0.inverse()
    window = min(T, f.trunc - q0)

    neg_h = PuiseuxSeries(
        tuple((q - q0, -(c * inverse_c0)) for q, c in f.terms[1:]),
        trunc=window,
        domain=f.domain,
        ramification=f.ramification,
    )
    unit = PuiseuxSeries({Fraction(0): 1}, trunc=window, domain=f.domain)
    result = unit
    term = unit
    depth = 0
    while term.terms:
        term = truncate(mul(term, neg_h), window)
        result = add(result, term)
        depth += 1
    logger.debug("reciprocal: %d geometric terms up to x^%s", depth, window)

    return scale(inverse_c0, shift(result, -q0))


# ─── Partes y dominios ────────────────────────────────────────────────────────


def real_part(f: PuiseuxSeries) -> PuiseuxSeries:
    return PuiseuxSeries(
        tuple((q, c.real) for q, c in f.terms),
        trunc=f.trunc,
        domain=f.domain,
        ramification=f.ramification,
    )


def imag_part(f: PuiseuxSeries) -> PuiseuxSeries:
    return PuiseuxSeries(
        tuple((q, c.imag) for q, c in f.terms),
        trunc=f.trunc,
        domain=f.domain,
        ramification=f.ramification,
    )


def to_approx(f: PuiseuxSeries) -> PuiseuxSeries:
    if f.domain is Domain.APPROX:
        return f
    return PuiseuxSeries(
        tuple((q, c.to_approx()) for q, c in f.terms),
        trunc=f.trunc,
        domain=Domain.APPROX,
        ramification=f.ramification,
    )


# ─── Evaluación numérica ──────────────────────────────────────────────────────


def evaluate(f: PuiseuxSeries, x0) -> ApproxComplex:
    """
    Σ c_q x₀^q sobre la rama real principal (x₀ > 0).
    No estima el resto de truncamiento.
    """
    x0 = float(x0)
    if not x0 > 0.0:
        raise DomainError(f"Series are evaluated only at x > 0, got {x0!r}.")
    total = ApproxComplex()
    for q, c in f.terms:
        total = total + c.to_approx() * math.pow(x0, float(q))
    return total


def grid_points(start, stop, step):
    """Puntos start + k·step hasta stop inclusive (tolerancia estricta de medio paso); x > 0."""
    start, stop, step = (v if isinstance(v, float) else as_rational(v) for v in (start, stop, step))
    if not step > 0:
        raise DomainError(f"Grid step must be positive, got {step}.")
    if not start > 0:
        raise DomainError(f"Grid points must satisfy x > 0, got {start}.")
    if start > stop:
        raise DomainError(f"Grid start {start} exceeds stop {stop}.")
    points = []
    k = 0
    while start + k * step < stop + step / 2:
        points.append(start + k * step)
        k += 1
    return points
