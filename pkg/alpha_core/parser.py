# alpha_core/parser.py
"""
Front-end de texto para polinomios de Puiseux y parámetros racionales.

Gramática (descenso recursivo LL(1), espacios insignificantes entre tokens):

    series   = ws term { ws ("+"|"-") ws term } ws ;
    term     = coeff [ "*" mono ] | mono ;
    mono     = "x" [ "^" exponent ] ;
    exponent = integer | "(" ws signed-int [ ws "/" ws integer ] ws ")" ;
    coeff    = rationalOrDecimal | "(" complex ")" ;
    complex  = rationalOrDecimal [ ("+"|"-") rationalOrDecimal "*" "i" ] ;

El primer término admite un "-" unario y la parte real de un complejo puede
llevar signo. Exponente por defecto 1, coeficiente por defecto 1.

Uso:
    parse_series("3*x^(3/2) - 2*x^(-1/3)")
    format_series(f)          # "(1/2)*x^(-1) + x"
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exceptions import DomainError, SeriesSyntaxError, ZeroDenominatorError
from .numeric import ApproxComplex, ExactComplex
from .puiseux import Domain, PuiseuxSeries

END = "end of input"
DIGIT = "digit"


def _domain(tag):
    try:
        return Domain(tag)
    except ValueError:
        raise DomainError(f"Unknown coefficient domain {tag!r}.") from None


class _Parser:
    def __init__(self, text, domain=Domain.EXACT):
        self.text = text
        self.pos = 0
        self.domain = domain

    # ─── Utilidades de lectura ────────────────────────────────────────────────

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def offset(self, pos=None):
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, expected, error_class=SeriesSyntaxError, message=None):
        found = self.peek() or END
        offset = self.offset()
        if message is None:
            message = (
                f"Unexpected {found!r} at offset {offset}; "
                f"expected one of: {', '.join(expected)}"
            )
        raise error_class(message, offset=offset, expected=expected)

    def expect(self, char):
        if self.peek() != char:
            self.fail([repr(char)])
        self.pos += 1

    def digits(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.fail([DIGIT])
        return self.text[start : self.pos]

    def integer(self):
        start = self.pos
        text = self.digits()
        try:
            return int(text)
        except ValueError:
            self.pos = start
            self.fail([DIGIT], message=f"Integer literal too long at offset {self.offset()}")

    # ─── Literales ────────────────────────────────────────────────────────────

    def number(self):
        """rationalOrDecimal sin signo: p, p/q o p.d."""
        start = self.pos
        whole = self.integer()
        if self.peek() == ".":
            self.pos += 1
            fraction_digits = self.digits()
            literal = f"{whole}.{fraction_digits}"
            if self.domain is Domain.APPROX:
                value = float(literal)
                if not math.isfinite(value):
                    self.pos = start
                    self.fail([DIGIT], message=f"Literal out of range at offset {self.offset()}")
                return value
            try:
                return Fraction(literal)
            except ValueError:
                self.pos = start
                self.fail([DIGIT], message=f"Decimal literal too long at offset {self.offset()}")
        if self.peek() == "/":
            self.pos += 1
            denominator_pos = self.pos
            denominator = self.integer()
            if denominator == 0:
                self.pos = denominator_pos
                self.fail(
                    [DIGIT],
                    error_class=ZeroDenominatorError,
                    message=f"Zero denominator at offset {self.offset()}",
                )
            return Fraction(whole, denominator)
        return Fraction(whole)

    def signed_number(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            self.skip_ws()
        return sign * self.number()

    # ─── Producciones ─────────────────────────────────────────────────────────

    def to_float(self, value, start):
        """float del literal que empieza en start; fuera de rango es error de sintaxis."""
        try:
            return float(value)
        except OverflowError:
            self.pos = start
            self.fail([DIGIT], message=f"Literal out of range at offset {self.offset()}")

    def coefficient(self, value, start):
        if self.domain is Domain.EXACT:
            return value if isinstance(value, ExactComplex) else ExactComplex(value)
        if isinstance(value, ExactComplex):
            return ApproxComplex(self.to_float(value.re, start), self.to_float(value.im, start))
        if isinstance(value, ApproxComplex):
            return value
        return ApproxComplex(self.to_float(value, start))

    def complex_literal(self):
        start = self.pos
        real = self.signed_number()
        self.skip_ws()
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            self.skip_ws()
            imag = sign * self.number()
            self.skip_ws()
            self.expect("*")
            self.skip_ws()
            self.expect("i")
            if self.domain is Domain.APPROX:
                return ApproxComplex(self.to_float(real, start), self.to_float(imag, start))
            return ExactComplex(real, imag)
        if self.domain is Domain.APPROX:
            return self.to_float(real, start)
        return real

    def coeff(self):
        if self.peek() == "(":
            self.pos += 1
            self.skip_ws()
            value = self.complex_literal()
            self.skip_ws()
            self.expect(")")
            return value
        if self.peek().isdigit() and self.peek() in "0123456789":
            return self.number()
        self.fail([DIGIT, "'('", "'x'"])

    def exponent(self):
        if self.peek() in "0123456789" and self.peek():
            return Fraction(self.integer())
        if self.peek() != "(":
            self.fail([DIGIT, "'('"])
        self.pos += 1
        self.skip_ws()
        sign = 1
        if self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        numerator = sign * self.integer()
        self.skip_ws()
        denominator = 1
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            denominator_pos = self.pos
            denominator = self.integer()
            if denominator == 0:
                self.pos = denominator_pos
                self.fail(
                    [DIGIT],
                    error_class=ZeroDenominatorError,
                    message=f"Zero denominator at offset {self.offset()}",
                )
            self.skip_ws()
        if self.peek() != ")":
            expected = ["')'"] if denominator != 1 else ["'/'", "')'"]
            self.fail(expected)
        self.pos += 1
        return Fraction(numerator, denominator)

    def mono(self):
        self.expect("x")
        self.skip_ws()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            return self.exponent()
        return Fraction(1)

    def term(self):
        start = self.pos
        if self.peek() == "x":
            return self.mono(), self.coefficient(Fraction(1), start)
        value = self.coeff()
        self.skip_ws()
        if self.peek() == "*":
            self.pos += 1
            self.skip_ws()
            return self.mono(), self.coefficient(value, start)
        return Fraction(0), self.coefficient(value, start)

    def series(self):
        self.skip_ws()
        negative = False
        if self.peek() == "-":
            negative = True
            self.pos += 1
            self.skip_ws()
        terms = []
        exponent, value = self.term()
        terms.append((exponent, -value if negative else value))
        while True:
            self.skip_ws()
            operator = self.peek()
            if operator not in ("+", "-") or not operator:
                break
            self.pos += 1
            self.skip_ws()
            exponent, value = self.term()
            terms.append((exponent, -value if operator == "-" else value))
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail(["'+'", "'-'", END])
        return PuiseuxSeries(terms, domain=self.domain)


def parse_series(text: str, domain=Domain.EXACT) -> PuiseuxSeries:
    """Serie denotada por el texto; términos semejantes combinados, trunc = ∞."""
    return _Parser(text, _domain(domain)).series()


def parse_rational(text: str) -> Fraction:
    """Acepta "p/q", "p" y decimales (expansión decimal exacta), con signo."""
    parser = _Parser(text)
    parser.skip_ws()
    value = parser.signed_number()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.fail([DIGIT, "'/'", "'.'", END] if parser.peek() else [END])
    return value


# ─── Impresión canónica ───────────────────────────────────────────────────────


def _format_rational(value: Fraction, wrap=True):
    if value.denominator == 1:
        return str(value.numerator)
    text = f"{value.numerator}/{value.denominator}"
    return f"({text})" if wrap else text


def _format_real(value, wrap=True):
    if isinstance(value, Fraction):
        return _format_rational(value, wrap)
    return repr(value)


def _format_exponent(q: Fraction):
    if q == 1:
        return "x"
    if q.denominator == 1 and q > 0:
        return f"x^{q.numerator}"
    return f"x^({q.numerator}/{q.denominator})" if q.denominator != 1 else f"x^({q.numerator})"


def _format_term(q, c):
    """Retorna (negativo, cuerpo) para un término."""
    mono = "" if q == 0 else _format_exponent(q)
    if c.is_real:
        negative = c.re < 0
        magnitude = abs(c.re)
        if magnitude == 1 and mono:
            return negative, mono
        body = _format_real(magnitude)
    else:
        sign = "+" if c.im >= 0 else "-"
        body = f"({_format_real(c.re, False)}{sign}{_format_real(abs(c.im), False)}*i)"
        negative = False
    return negative, f"{body}*{mono}" if mono else body


def format_series(f: PuiseuxSeries) -> str:
    """Forma canónica: exponentes ascendentes y coeficientes racionales explícitos."""
    if not f.terms:
        return "0"
    pieces = []
    for index, (q, c) in enumerate(f.terms):
        negative, body = _format_term(q, c)
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
