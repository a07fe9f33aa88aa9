# tests/test_codec.py
import json
from fractions import Fraction

import pytest

from alpha_core.codec import dumps, load_series, series_from_json, series_to_dict, series_to_json
from alpha_core.exceptions import DomainError
from alpha_core.numeric import ExactComplex
from alpha_core.parser import parse_series
from alpha_core.puiseux import PuiseuxSeries, monomial, to_approx


def test_canonical_encoding():
    f = parse_series("x^(3/2)+2*x")
    assert series_to_dict(f) == {
        "ramification": 2,
        "trunc": "inf",
        "domain": "exact",
        "terms": [
            {"exp": "1", "re": "2", "im": "0"},
            {"exp": "3/2", "re": "1", "im": "0"},
        ],
    }


def test_truncated_complex_series_survives_json():
    f = PuiseuxSeries([(Fraction(-1, 3), ExactComplex(1, -2)), (0, 5)], trunc=Fraction(7, 2))
    assert series_from_json(series_to_json(f)) == f


def test_approx_series_survives_json():
    f = to_approx(parse_series("(1/4)*x + 3"))
    decoded = series_from_json(series_to_json(f))
    assert decoded == f
    assert json.loads(series_to_json(f))["terms"][1]["re"] == 0.25


def test_load_series_accepts_json_and_text():
    assert load_series('{"terms": [{"exp": "1/2", "re": "3"}]}') == monomial(Fraction(1, 2), 3)
    assert load_series("3*x^(1/2)") == monomial(Fraction(1, 2), 3)


def test_dumps_fractions_as_text():
    assert dumps({"value": Fraction(1, 3)}) == '{"value": "1/3"}'


@pytest.mark.parametrize(
    "text",
    [
        "{",
        "[1, 2]",
        '{"terms": [{"re": "1"}]}',
        '{"terms": [{"exp": "1", "re": 0.5}]}',
        '{"domain": "interval", "terms": []}',
        '{"ramification": "a", "terms": []}',
        '{"ramification": null, "terms": []}',
        '{"domain": "approx", "terms": [{"exp": "0", "re": 1' + "0" * 400 + "}]}",
    ],
)
def test_malformed_json(text):
    with pytest.raises(DomainError):
        series_from_json(text)
