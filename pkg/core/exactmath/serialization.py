"""
Canonical Text and JSON Forms for Polynomials

Features:
- Text: terms in canonical order, e.g. "X^4 + 2*X^2*C + C^2 + C", "C + 3/4"
- JSON: {"vars": ["X", "C"], "terms": [[i, j, "num/den"], ...]} for BiPoly,
  {"vars": ["C"], "terms": [[j, "num/den"], ...]} for UniPoly
- Parsers accept exactly what the writers produce (plus "n/1" integers),
  so both forms round-trip bit-exactly
"""

import json
import re
from fractions import Fraction
from typing import Any

from .bivariate import C_VAR, X_VAR, BiPoly
from .errors import RationalParseError
from .polynomial import UniPoly, coefficient_ring
from .quotient import QuotientRing
from .rational import format_rational, parse_rational

_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_POWER_RE = re.compile(r"^([A-Za-z])(?:\^(\d+))?$")


# ============================================================================
# Text
# ============================================================================

def _monomial(powers: list[tuple[str, int]]) -> str:
    parts = []
    for var, exp in powers:
        if exp == 1:
            parts.append(var)
        elif exp > 1:
            parts.append(f"{var}^{exp}")
    return "*".join(parts)


def _term_text(coeff: Any, monomial: str) -> tuple[bool, str]:
    """(is_negative, unsigned text) for one term"""
    if coefficient_ring(coeff) is not None and not coeff.is_rational():
        body = f"({coeff.rep})"
        return False, f"{body}*{monomial}" if monomial else body
    value = Fraction(coeff.to_rational() if coefficient_ring(coeff) is not None else coeff)
    negative = value < 0
    magnitude = abs(value)
    if not monomial:
        return negative, format_rational(magnitude)
    if magnitude == 1:
        return negative, monomial
    return negative, f"{format_rational(magnitude)}*{monomial}"


def _join(parts: list[tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    negative, text = parts[0]
    pieces = [f"-{text}" if negative else text]
    for negative, text in parts[1:]:
        pieces.append(f" - {text}" if negative else f" + {text}")
    return "".join(pieces)


def to_text(poly: UniPoly | BiPoly) -> str:
    """Canonical text form; the zero polynomial prints as "0" """
    if isinstance(poly, BiPoly):
        parts = [_term_text(c, _monomial([(X_VAR, i), (C_VAR, j)])) for i, j, c in poly.terms]
    else:
        parts = [_term_text(c, _monomial([(poly.var, e)])) for e, c in poly.terms]
    return _join(parts)


def _parse_terms(text: str, allowed: tuple[str, ...]) -> list[tuple[dict[str, int], Fraction]]:
    compact = "".join(text.split())
    if not compact:
        raise RationalParseError("empty polynomial text", token=text)
    matches = list(_TERM_RE.finditer(compact))
    if "".join(m.group(0) for m in matches) != compact:
        raise RationalParseError(f"malformed polynomial text: {text!r}", token=text)
    parsed = []
    for index, match in enumerate(matches):
        sign, body = match.groups()
        if index and not sign:
            raise RationalParseError(f"missing operator before {body!r}", token=body)
        coeff = Fraction(1)
        powers: dict[str, int] = {}
        for factor in body.split("*"):
            power = _POWER_RE.match(factor)
            if power:
                var = power.group(1)
                if var not in allowed:
                    raise RationalParseError(f"unexpected variable {var!r} in {text!r}", token=factor)
                powers[var] = powers.get(var, 0) + int(power.group(2) or 1)
            else:
                coeff *= parse_rational(factor)
        parsed.append((powers, -coeff if sign == "-" else coeff))
    return parsed


def parse_bipoly(text: str) -> BiPoly:
    """Parse a polynomial in X and C"""
    terms = _parse_terms(text, (X_VAR, C_VAR))
    return BiPoly((p.get(X_VAR, 0), p.get(C_VAR, 0), c) for p, c in terms)


def parse_unipoly(text: str, var: str = C_VAR) -> UniPoly:
    """Parse a polynomial in the single variable `var`"""
    acc: dict[int, Fraction] = {}
    for powers, coeff in _parse_terms(text, (var,)):
        exp = powers.get(var, 0)
        acc[exp] = acc.get(exp, 0) + coeff
    return UniPoly(acc, var=var)


def parse_text(text: str, var: str | None = None) -> UniPoly | BiPoly:
    """BiPoly when `var` is None, otherwise a UniPoly in `var`"""
    if var is None:
        return parse_bipoly(text)
    return parse_unipoly(text, var)


# ============================================================================
# JSON
# ============================================================================

def format_value(value: Any) -> str:
    """Text of a scalar: "num/den" for rationals, the representative in t otherwise"""
    if coefficient_ring(value) is not None:
        return to_text(value.rep)
    return format_rational(value)


def parse_value(text: str, ring: QuotientRing | None = None) -> Any:
    """Inverse of format_value; a ring is needed for non-rational values"""
    if ring is None:
        return parse_rational(text)
    return ring.element(parse_unipoly(text, ring.var))


def to_json_data(poly: UniPoly | BiPoly) -> dict[str, Any]:
    """JSON-ready dict; quotient-ring polynomials also carry their modulus in t"""
    if isinstance(poly, BiPoly):
        data = {
            "vars": [X_VAR, C_VAR],
            "terms": [[i, j, format_value(c)] for i, j, c in poly.terms],
        }
    else:
        data = {
            "vars": [poly.var],
            "terms": [[e, format_value(c)] for e, c in poly.terms],
        }
    if poly.ring is not None:
        data["modulus"] = to_text(poly.ring.modulus)
    return data


def to_json(poly: UniPoly | BiPoly) -> str:
    return json.dumps(to_json_data(poly), separators=(",", ":"))


def parse_json(payload: str | dict[str, Any]) -> UniPoly | BiPoly:
    """
    Inverse of to_json / to_json_data

    Raises:
        RationalParseError: malformed payload or coefficient
    """
    data = json.loads(payload) if isinstance(payload, str) else payload
    try:
        variables = list(data["vars"])
        terms = data["terms"]
    except (KeyError, TypeError) as exc:
        raise RationalParseError(f"not a polynomial payload: {payload!r}", token=str(payload)) from exc
    ring = None
    if "modulus" in data:
        ring = QuotientRing(parse_unipoly(data["modulus"], "t"), irreducible=True)
    if variables == [X_VAR, C_VAR]:
        if any(len(term) != 3 for term in terms):
            raise RationalParseError("bivariate terms must be [i, j, coeff]", token=str(terms))
        return BiPoly(((int(i), int(j), parse_value(c, ring)) for i, j, c in terms), ring=ring)
    if len(variables) == 1:
        if any(len(term) != 2 for term in terms):
            raise RationalParseError("univariate terms must be [e, coeff]", token=str(terms))
        return UniPoly(((int(e), parse_value(c, ring)) for e, c in terms), var=variables[0], ring=ring)
    raise RationalParseError(f"unsupported variable list {variables!r}", token=str(variables))
