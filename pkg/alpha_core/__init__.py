"""Cálculo α de dos términos sobre series de Puiseux truncadas, con aritmética exacta."""

__version__ = "0.1.0"
