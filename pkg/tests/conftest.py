# tests/conftest.py
import io
from fractions import Fraction

import pytest
from hypothesis import settings

from alpha_core.alpha_calc import AlphaOrder
from alpha_core.cli import run
from alpha_core.parser import parse_series

settings.register_profile("alpha_core", deadline=None, max_examples=60)
settings.load_profile("alpha_core")


@pytest.fixture
def half():
    return AlphaOrder(Fraction(1, 2))


@pytest.fixture
def parse():
    """parse_series como fixture: parse("1 + x^2")."""
    return parse_series


@pytest.fixture
def cli():
    """Corre alpha-calc y devuelve (código, stdout, stderr)."""

    def invoke(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    return invoke
