# alpha_core/codec.py
"""
Codificación JSON canónica de series:

    {"ramification": n, "trunc": "p/q" | "inf", "domain": "exact" | "approx",
     "terms": [{"exp": "p/q", "re": "p/q" | float, "im": "p/q" | float}, ...]}

Los términos van ordenados por exponente. Los racionales se escriben como
texto "p/q" para no perder exactitud.
"""

import json
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from .exceptions import DomainError
from .numeric import ApproxComplex, ExactComplex
from .parser import parse_rational, parse_series
from .puiseux import INF, Domain, PuiseuxSeries


class SeriesJSONEncoder(DjangoJSONEncoder):
    """Extiende el encoder de Django con Fraction, coeficientes y series."""

    def default(self, o):
        if isinstance(o, PuiseuxSeries):
            return series_to_dict(o)
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, ExactComplex):
            return {"re": str(o.re), "im": str(o.im)}
        if isinstance(o, ApproxComplex):
            return {"re": o.re, "im": o.im}
        return super().default(o)


def series_to_dict(f: PuiseuxSeries) -> dict:
    terms = []
    for q, c in f.terms:
        if f.is_exact:
            terms.append({"exp": str(q), "re": str(c.re), "im": str(c.im)})
        else:
            terms.append({"exp": str(q), "re": c.re, "im": c.im})
    return {
        "ramification": f.ramification,
        "trunc": "inf" if f.trunc == INF else str(f.trunc),
        "domain": f.domain.value,
        "terms": terms,
    }


def dumps(payload) -> str:
    return json.dumps(payload, cls=SeriesJSONEncoder)


def series_to_json(f: PuiseuxSeries) -> str:
    return dumps(f)


def _exact_part(value):
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, int):
        return Fraction(value)
    raise DomainError(f"Exact coefficient parts must be 'p/q' strings, got {value!r}.")


def series_from_dict(data: dict) -> PuiseuxSeries:
    try:
        domain = Domain(data.get("domain", "exact"))
        trunc_text = data.get("trunc", "inf")
        trunc = INF if trunc_text == "inf" else parse_rational(str(trunc_text))
        terms = []
        for entry in data.get("terms", []):
            exponent = parse_rational(str(entry["exp"]))
            if domain is Domain.EXACT:
                value = ExactComplex(
                    _exact_part(entry.get("re", "0")), _exact_part(entry.get("im", "0"))
                )
            else:
                value = ApproxComplex(float(entry.get("re", 0.0)), float(entry.get("im", 0.0)))
            terms.append((exponent, value))
        ramification = int(data.get("ramification", 1))
    except (KeyError, TypeError, ValueError, OverflowError) as e:
        raise DomainError(f"Malformed series JSON: {e}") from None
    return PuiseuxSeries(terms, trunc=trunc, domain=domain, ramification=ramification)


def series_from_json(text: str) -> PuiseuxSeries:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DomainError(f"Malformed series JSON: {e}") from None
    if not isinstance(data, dict):
        raise DomainError("Series JSON must be an object.")
    return series_from_dict(data)


def load_series(text: str, domain=Domain.EXACT) -> PuiseuxSeries:
    """Entrada de CLI: objeto JSON o expresión de la gramática."""
    if text.lstrip().startswith("{"):
        return series_from_json(text)
    return parse_series(text, domain)
