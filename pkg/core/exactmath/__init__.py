"""
Exact Arithmetic Module

Components:
- Rationals: fractions.Fraction with canonical text form
- UniPoly / BiPoly: sparse polynomials in C (or t, X) and in X, C
- QuotientRing / QuotientElement: arithmetic in Q[t]/(m)
- Algorithms: gcd, squarefree part, resultants, rational roots
- Serialization: canonical text and JSON forms
"""

from .algorithms import (
    bareiss_determinant,
    coprime,
    derivative,
    exact_div,
    extended_gcd,
    gcd_uni,
    is_squarefree,
    rational_roots,
    rational_roots_with_denominator,
    remove_common_factors,
    resultant,
    squarefree_part,
    sylvester_matrix,
    sylvester_resultant,
)
from .bivariate import C_VAR, X_VAR, BiPoly
from .errors import (
    ExactMathError,
    IncompatibleRings,
    NotAField,
    NotDivisible,
    RationalParseError,
    ZeroDivisor,
    ZeroOperand,
)
from .polynomial import NEG_INFINITY, UniPoly
from .quotient import QuotientElement, QuotientRing
from .rational import Rational, format_rational, normalize, parse_rational, witness_order_key
from .serialization import (
    format_value,
    parse_bipoly,
    parse_json,
    parse_text,
    parse_unipoly,
    parse_value,
    to_json,
    to_json_data,
    to_text,
)

__all__ = [
    "C_VAR",
    "NEG_INFINITY",
    "X_VAR",
    "BiPoly",
    "ExactMathError",
    "IncompatibleRings",
    "NotAField",
    "NotDivisible",
    "QuotientElement",
    "QuotientRing",
    "Rational",
    "RationalParseError",
    "UniPoly",
    "ZeroDivisor",
    "ZeroOperand",
    "bareiss_determinant",
    "coprime",
    "derivative",
    "exact_div",
    "extended_gcd",
    "format_rational",
    "format_value",
    "gcd_uni",
    "is_squarefree",
    "normalize",
    "parse_bipoly",
    "parse_json",
    "parse_rational",
    "parse_text",
    "parse_unipoly",
    "parse_value",
    "rational_roots",
    "rational_roots_with_denominator",
    "remove_common_factors",
    "resultant",
    "squarefree_part",
    "sylvester_matrix",
    "sylvester_resultant",
    "to_json",
    "to_json_data",
    "to_text",
    "witness_order_key",
]
