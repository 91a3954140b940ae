"""
Exact rational scalars

Rationals are `fractions.Fraction` values. Inside polynomials, integral
coefficients are stored as plain `int` (they compare and hash equal to the
corresponding Fraction), which keeps integer-coefficient arithmetic fast.
"""

import re
from fractions import Fraction

from .errors import RationalParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def normalize(value):
    """Collapse integral Fractions to int; leave everything else untouched"""
    if type(value) is Fraction and value.denominator == 1:
        return value.numerator
    return value


def parse_rational(text: str) -> Fraction:
    """
    Parse an exact rational literal

    Accepts "p", "p/q" with optional sign. Decimal and exponent notation
    are rejected so no value is ever rounded on the way in.

    Raises:
        RationalParseError: on malformed input or a zero denominator
    """
    token = text.strip()
    match = _RATIONAL_RE.match(token)
    if not match:
        raise RationalParseError(f"not an exact rational: {text!r}", token=text)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalParseError(f"zero denominator in {text!r}", token=text)
    return Fraction(numerator, denominator)


def format_rational(value) -> str:
    """Canonical text: "n" for integers, "num/den" in lowest terms otherwise"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def witness_order_key(value) -> tuple[int, int]:
    """Deterministic witness ordering: by denominator, then numerator"""
    value = Fraction(value)
    return (value.denominator, value.numerator)
