"""
Univariate Polynomials with Exact Coefficients

Features:
- Sparse storage, canonical (strictly decreasing exponent) term order
- Coefficients in Q (int / Fraction) or in a quotient ring Q[t]/(m)
- Ring arithmetic, exact division, long division over a field
- Products and exact quotients over Q run on integer numerators
- Formal derivative, evaluation, composition
"""

import math
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Any

from .errors import IncompatibleRings, NotDivisible, ZeroOperand
from .rational import normalize

NEG_INFINITY = float("-inf")

Coefficient = Any  # int | Fraction | QuotientElement


def coefficient_ring(value: Coefficient):
    """Return the quotient ring of a coefficient, or None for rationals"""
    return getattr(value, "ring", None)


def invert(value: Coefficient) -> Coefficient:
    """Multiplicative inverse of a nonzero field element"""
    if hasattr(value, "inverse"):
        return value.inverse()
    return normalize(Fraction(1) / value)


def _merge_ring(left, right):
    if left is None:
        return right
    if right is None or right == left:
        return left
    raise IncompatibleRings(f"coefficient rings differ: {left} vs {right}")


def _integer_form(coeffs: dict[int, Coefficient]) -> tuple[dict[int, int], int]:
    """Integer numerators over one common denominator"""
    denominator = 1
    for coeff in coeffs.values():
        if type(coeff) is Fraction:
            denominator = math.lcm(denominator, coeff.denominator)
    scaled = {}
    for exp, coeff in coeffs.items():
        if type(coeff) is Fraction:
            scaled[exp] = coeff.numerator * (denominator // coeff.denominator)
        else:
            scaled[exp] = coeff * denominator
    return scaled, denominator


def _rational_product(
    left: dict[int, Coefficient], right: dict[int, Coefficient]
) -> dict[int, Coefficient]:
    """Product over Q done on integer numerators; one division per output term"""
    a, den_a = _integer_form(left)
    b, den_b = _integer_form(right)
    acc: dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            exp = e1 + e2
            acc[exp] = acc.get(exp, 0) + c1 * c2
    denominator = den_a * den_b
    if denominator == 1:
        return {exp: value for exp, value in acc.items() if value}
    return {exp: normalize(Fraction(value, denominator)) for exp, value in acc.items() if value}


def _exact_rational_quotient(
    numerator: dict[int, Coefficient], divisor: dict[int, Coefficient]
) -> dict[int, Coefficient] | None:
    """
    numerator / divisor over Q, or None when the division is not exact

    A primitive integer divisor that divides over Q divides over Z (Gauss),
    so the long division runs on integers and fails at the first inexact step.
    """
    a, den_a = _integer_form(numerator)
    b, den_b = _integer_form(divisor)
    content = 0
    for value in b.values():
        content = math.gcd(content, value)
    top_a, top_b = max(a), max(b)
    if top_a < top_b:
        return None
    rem = [a.get(i, 0) for i in range(top_a + 1)]
    dense_b = [b.get(i, 0) // content for i in range(top_b + 1)]
    lead = dense_b[-1]
    lower = [(i, v) for i, v in enumerate(dense_b[:-1]) if v]
    quotient: dict[int, int] = {}
    for shift in range(top_a - top_b, -1, -1):
        top = rem[shift + top_b]
        if not top:
            continue
        q, r = divmod(top, lead)
        if r:
            return None
        quotient[shift] = q
        for i, v in lower:
            rem[shift + i] -= q * v
    if any(rem[:top_b]):
        return None
    scale = Fraction(den_b, den_a * content)
    return {exp: normalize(q * scale) for exp, q in quotient.items()}


class UniPoly:
    """
    Polynomial in a single variable

    The variable tag is semantic ("C", "t" or "X"); operands with different
    tags, or with coefficients in different rings, raise IncompatibleRings.
    The zero polynomial is compatible with every coefficient ring.
    """

    __slots__ = ("_coeffs", "_ring", "var")

    def __init__(
        self,
        terms: Mapping[int, Coefficient] | Iterable[tuple[int, Coefficient]] = (),
        var: str = "C",
        ring: Any = None,
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        coeffs: dict[int, Coefficient] = {}
        for exp, coeff in items:
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            coeff = normalize(coeff)
            if coeff:
                ring = _merge_ring(ring, coefficient_ring(coeff))
                coeffs[exp] = coeff
        self._coeffs = coeffs
        self._ring = ring if coeffs else None
        self.var = var

    @classmethod
    def _raw(cls, coeffs: dict[int, Coefficient], var: str, ring: Any) -> "UniPoly":
        """Build from an already-clean dict (no zero coefficients)"""
        poly = cls.__new__(cls)
        poly._coeffs = coeffs
        poly._ring = ring if coeffs else None
        poly.var = var
        return poly

    @classmethod
    def constant(cls, value: Coefficient, var: str = "C") -> "UniPoly":
        return cls({0: value}, var=var)

    @classmethod
    def monomial(cls, coeff: Coefficient, exp: int, var: str = "C") -> "UniPoly":
        return cls({exp: coeff}, var=var)

    @classmethod
    def gen(cls, var: str = "C") -> "UniPoly":
        """The variable itself"""
        return cls({1: 1}, var=var)

    @classmethod
    def from_dense(cls, coeffs: Iterable[Coefficient], var: str = "C") -> "UniPoly":
        """Build from coefficients listed from degree 0 upwards"""
        return cls(enumerate(coeffs), var=var)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def ring(self):
        return self._ring

    @property
    def terms(self) -> tuple[tuple[int, Coefficient], ...]:
        """(exponent, coefficient) pairs in canonical decreasing order"""
        return tuple(sorted(self._coeffs.items(), reverse=True))

    @property
    def degree(self) -> int | float:
        if not self._coeffs:
            return NEG_INFINITY
        return max(self._coeffs)

    @property
    def leading_coefficient(self) -> Coefficient:
        if not self._coeffs:
            return 0
        return self._coeffs[max(self._coeffs)]

    def coefficient(self, exp: int) -> Coefficient:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return not self._coeffs or max(self._coeffs) == 0

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self.leading_coefficient == 1

    def is_rational(self) -> bool:
        return self._ring is None

    def dense(self) -> list[Coefficient]:
        """Coefficients from degree 0 to the degree (empty for zero)"""
        if not self._coeffs:
            return []
        return [self._coeffs.get(i, 0) for i in range(max(self._coeffs) + 1)]

    # ------------------------------------------------------------------
    # Equality
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            if not self._coeffs and not other._coeffs:
                return True
            return self.var == other.var and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)) or coefficient_ring(other) is not None:
            return self == UniPoly.constant(other, self.var)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self}, var={self.var!r})"

    def __str__(self) -> str:
        from .serialization import to_text

        return to_text(self)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check(self, other: "UniPoly") -> Any:
        if self._coeffs and other._coeffs and self.var != other.var:
            raise IncompatibleRings(f"variables differ: {self.var} vs {other.var}")
        return _merge_ring(self._ring, other._ring)

    def _var_with(self, other: "UniPoly") -> str:
        return self.var if self._coeffs or not other._coeffs else other.var

    def _coerce(self, other: Any) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other, self.var)

    def __add__(self, other: Any) -> "UniPoly":
        other = self._coerce(other)
        ring = self._check(other)
        coeffs = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            value = normalize(coeffs.get(exp, 0) + coeff)
            if value:
                coeffs[exp] = value
            else:
                coeffs.pop(exp, None)
        return UniPoly._raw(coeffs, self._var_with(other), ring)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw({e: -c for e, c in self._coeffs.items()}, self.var, self._ring)

    def __sub__(self, other: Any) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "UniPoly":
        return self._coerce(other) - self

    def scale(self, scalar: Coefficient) -> "UniPoly":
        """Multiply every coefficient by a scalar"""
        scalar = normalize(scalar)
        if not scalar:
            return UniPoly._raw({}, self.var, None)
        ring = _merge_ring(self._ring, coefficient_ring(scalar))
        coeffs = {}
        for exp, coeff in self._coeffs.items():
            value = normalize(coeff * scalar)
            if value:
                coeffs[exp] = value
        return UniPoly._raw(coeffs, self.var, ring)

    def __mul__(self, other: Any) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return self.scale(other)
        ring = self._check(other)
        if ring is None:
            product = _rational_product(self._coeffs, other._coeffs)
            return UniPoly._raw(product, self._var_with(other), None)
        coeffs: dict[int, Coefficient] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exp = e1 + e2
                coeffs[exp] = coeffs.get(exp, 0) + c1 * c2
        clean = {}
        for exp, coeff in coeffs.items():
            coeff = normalize(coeff)
            if coeff:
                clean[exp] = coeff
        return UniPoly._raw(clean, self._var_with(other), ring)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.constant(self._one(), self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def _one(self) -> Coefficient:
        if self._ring is not None:
            return self._ring.one
        return 1

    # ------------------------------------------------------------------
    # Division
    # ------------------------------------------------------------------

    def divmod(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Long division over a field: self = q * divisor + r, deg r < deg divisor"""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ring = self._check(divisor)
        var = self._var_with(divisor)
        lead_exp = divisor.degree
        lead_inv = invert(divisor.leading_coefficient)
        rem = dict(self._coeffs)
        quot: dict[int, Coefficient] = {}
        div_terms = [(e, c) for e, c in divisor._coeffs.items() if e != lead_exp]
        while rem:
            top = max(rem)
            if top < lead_exp:
                break
            factor = normalize(rem.pop(top) * lead_inv)
            shift = top - lead_exp
            quot[shift] = factor
            for exp, coeff in div_terms:
                key = exp + shift
                value = normalize(rem.get(key, 0) - factor * coeff)
                if value:
                    rem[key] = value
                else:
                    rem.pop(key, None)
        return UniPoly._raw(quot, var, ring), UniPoly._raw(rem, var, ring)

    def __mod__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[1]

    def __floordiv__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[0]

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        """
        Divide, asserting the division is exact

        Raises:
            NotDivisible: if the remainder is nonzero
        """
        if not isinstance(divisor, UniPoly):
            divisor = UniPoly.constant(divisor, self.var)
        if self._coeffs and divisor._coeffs and self._check(divisor) is None:
            exact = _exact_rational_quotient(self._coeffs, divisor._coeffs)
            if exact is not None:
                return UniPoly._raw(exact, self._var_with(divisor), None)
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise NotDivisible(
                f"({self}) is not divisible by ({divisor})",
                numerator=self,
                denominator=divisor,
            )
        return quotient

    def pseudo_remainder(self, divisor: "UniPoly") -> "UniPoly":
        """lc(divisor)^(deg self - deg divisor + 1) * self mod divisor, without inversions"""
        if divisor.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero")
        self._check(divisor)
        if self.degree < divisor.degree:
            return self
        lead = divisor.leading_coefficient
        steps = int(self.degree - divisor.degree) + 1
        lead_exp = divisor.degree
        rem = self
        while not rem.is_zero() and rem.degree >= lead_exp:
            shift = int(rem.degree - lead_exp)
            top = UniPoly.monomial(rem.leading_coefficient, shift, self.var)
            rem = rem.scale(lead) - top * divisor
            steps -= 1
        if steps > 0:
            rem = rem.scale(lead**steps)
        return rem

    def monic(self) -> "UniPoly":
        """Scale to leading coefficient 1 (zero stays zero)"""
        if not self._coeffs:
            return self
        return self.scale(invert(self.leading_coefficient))

    # ------------------------------------------------------------------
    # Calculus and evaluation
    # ------------------------------------------------------------------

    def derivative(self) -> "UniPoly":
        coeffs = {}
        for exp, coeff in self._coeffs.items():
            if exp:
                coeffs[exp - 1] = normalize(coeff * exp)
        return UniPoly._raw(coeffs, self.var, self._ring)

    def evaluate(self, value: Any) -> Any:
        """Horner evaluation at a scalar or at another polynomial"""
        if not self._coeffs:
            return 0
        result: Any = 0
        previous = None
        for exp, coeff in self.terms:
            if previous is not None:
                result = result * value ** (previous - exp)
            result = result + coeff
            previous = exp
        if previous:
            result = result * value**previous
        return normalize(result) if not isinstance(result, UniPoly) else result

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Substitute `inner` for the variable"""
        result = self.evaluate(inner)
        if isinstance(result, UniPoly):
            return result
        return UniPoly.constant(result, inner.var)

    # ------------------------------------------------------------------
    # Ring changes
    # ------------------------------------------------------------------

    def lift(self, ring: Any) -> "UniPoly":
        """Coerce rational coefficients into a quotient ring"""
        if self._ring == ring:
            return self
        if self._ring is not None:
            raise IncompatibleRings(f"cannot lift from {self._ring} to {ring}")
        return UniPoly({e: ring.element(c) for e, c in self._coeffs.items()}, self.var, ring)

    def to_rational(self) -> "UniPoly":
        """Collapse quotient coefficients that are rational constants"""
        if self._ring is None:
            return self
        coeffs = {}
        for exp, coeff in self._coeffs.items():
            if coefficient_ring(coeff) is None:
                coeffs[exp] = coeff
            elif coeff.is_rational():
                coeffs[exp] = coeff.to_rational()
            else:
                raise IncompatibleRings(f"coefficient {coeff} is not rational")
        return UniPoly(coeffs, self.var)

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly._raw(dict(self._coeffs), var, self._ring)

    def map_coefficients(self, func) -> "UniPoly":
        return UniPoly({e: func(c) for e, c in self._coeffs.items()}, self.var)


def ensure_nonzero(poly: UniPoly, what: str = "operand") -> None:
    if poly.is_zero():
        raise ZeroOperand(f"{what} must be a nonzero polynomial")
