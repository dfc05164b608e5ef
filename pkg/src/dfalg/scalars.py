"""Scalar field handling: exact rationals (default) and binary64 floats.

Rational mode stores plain Python ints and fractions.Fraction values and
performs no rounding; it is the mode every identity check runs in.  Float
mode exists for larger scale runs and compares residuals against
FLOAT_RELATIVE_TOLERANCE instead of literal zero.
"""

from __future__ import annotations

from fractions import Fraction

RATIONAL = "rational"
FLOAT64 = "float64"

FIELDS = (RATIONAL, FLOAT64)

FLOAT_RELATIVE_TOLERANCE = 1e-9


def check_field(field: str) -> str:
    if field not in FIELDS:
        raise ValueError(f"unknown scalar field {field!r}")
    return field


def coerce(value, field: str):
    if field == FLOAT64:
        return float(value)
    if isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"cannot coerce non-integral float {value} to rational")
        return int(value)
    return Fraction(value)


def parse_scalar(text, field: str):
    if field == FLOAT64:
        return float(text)
    if isinstance(text, str):
        return Fraction(text) if "/" in text else int(text)
    return coerce(text, RATIONAL)


def format_scalar(value, field: str):
    if field == FLOAT64:
        return float(value)
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))
