"""
Bivariate Polynomials in X and C

Sparse map (x-exponent, c-exponent) -> coefficient. Canonical order is
lexicographic with the X exponent major, both descending, so two
polynomials are equal exactly when their term tuples are equal.
"""

from collections.abc import Iterable, Mapping
from typing import Any

from .errors import IncompatibleRings, NotDivisible
from .polynomial import NEG_INFINITY, Coefficient, UniPoly, _merge_ring, coefficient_ring
from .rational import normalize

X_VAR = "X"
C_VAR = "C"


class BiPoly:
    """Polynomial in X and C with rational or quotient-ring coefficients"""

    __slots__ = ("_ring", "_terms")

    def __init__(
        self,
        terms: Mapping[tuple[int, int], Coefficient] | Iterable[tuple[int, int, Coefficient]] = (),
        ring: Any = None,
    ):
        items = (
            ((i, j, c) for (i, j), c in terms.items())
            if isinstance(terms, Mapping)
            else terms
        )
        clean: dict[tuple[int, int], Coefficient] = {}
        for i, j, coeff in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term ({i}, {j})")
            value = normalize(clean.get((i, j), 0) + coeff)
            if value:
                ring = _merge_ring(ring, coefficient_ring(value))
                clean[(i, j)] = value
            else:
                clean.pop((i, j), None)
        self._terms = clean
        self._ring = ring if clean else None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], Coefficient], ring: Any) -> "BiPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._ring = ring if terms else None
        return poly

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def c(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, value: Coefficient) -> "BiPoly":
        return cls({(0, 0): value})

    @classmethod
    def from_rows(cls, rows: Mapping[int, UniPoly]) -> "BiPoly":
        """Assemble from X-exponent -> coefficient polynomial in C"""
        terms: dict[tuple[int, int], Coefficient] = {}
        ring = None
        for i, row in rows.items():
            ring = _merge_ring(ring, row.ring)
            for j, coeff in row.terms:
                terms[(i, j)] = coeff
        return cls._raw(terms, ring)

    @classmethod
    def from_c_poly(cls, poly: UniPoly) -> "BiPoly":
        return cls.from_rows({0: poly})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def ring(self):
        return self._ring

    @property
    def terms(self) -> tuple[tuple[int, int, Coefficient], ...]:
        """(x-exp, c-exp, coefficient) in canonical order"""
        return tuple((i, j, self._terms[(i, j)]) for i, j in sorted(self._terms, reverse=True))

    @property
    def degree_x(self) -> int | float:
        if not self._terms:
            return NEG_INFINITY
        return max(i for i, _ in self._terms)

    @property
    def degree_c(self) -> int | float:
        if not self._terms:
            return NEG_INFINITY
        return max(j for _, j in self._terms)

    def coefficient(self, i: int, j: int) -> Coefficient:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return self._ring is None

    def is_integral(self) -> bool:
        """All coefficients are integers"""
        return self._ring is None and all(isinstance(c, int) for c in self._terms.values())

    def rows(self) -> dict[int, UniPoly]:
        """X-exponent -> coefficient polynomial in C"""
        grouped: dict[int, dict[int, Coefficient]] = {}
        for (i, j), coeff in self._terms.items():
            grouped.setdefault(i, {})[j] = coeff
        return {i: UniPoly._raw(row, C_VAR, self._ring) for i, row in grouped.items()}

    def columns(self) -> dict[int, UniPoly]:
        """C-exponent -> coefficient polynomial in X"""
        grouped: dict[int, dict[int, Coefficient]] = {}
        for (i, j), coeff in self._terms.items():
            grouped.setdefault(j, {})[i] = coeff
        return {j: UniPoly._raw(col, X_VAR, self._ring) for j, col in grouped.items()}

    def is_monic_x(self) -> bool:
        """The coefficient of the top X power is the constant 1"""
        if not self._terms:
            return False
        return self.rows()[self.degree_x] == 1

    def is_monic_c(self) -> bool:
        """The coefficient of the top C power is the constant 1"""
        if not self._terms:
            return False
        return self.columns()[self.degree_c] == 1

    # ------------------------------------------------------------------
    # Equality
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, UniPoly):
            return self == _promote(other)
        try:
            return self == BiPoly.constant(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        from .serialization import to_text

        return to_text(self)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: Any) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return _promote(other)
        return BiPoly.constant(other)

    def __add__(self, other: Any) -> "BiPoly":
        other = self._coerce(other)
        ring = _merge_ring(self._ring, other._ring)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            value = normalize(terms.get(key, 0) + coeff)
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        return BiPoly._raw(terms, ring)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self._terms.items()}, self._ring)

    def __sub__(self, other: Any) -> "BiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "BiPoly":
        return self._coerce(other) - self

    def scale(self, scalar: Coefficient) -> "BiPoly":
        scalar = normalize(scalar)
        if not scalar:
            return BiPoly._raw({}, None)
        ring = _merge_ring(self._ring, coefficient_ring(scalar))
        terms = {}
        for key, coeff in self._terms.items():
            value = normalize(coeff * scalar)
            if value:
                terms[key] = value
        return BiPoly._raw(terms, ring)

    def __mul__(self, other: Any) -> "BiPoly":
        if not isinstance(other, (BiPoly, UniPoly)):
            return self.scale(other)
        other = self._coerce(other)
        ring = _merge_ring(self._ring, other._ring)
        acc: dict[tuple[int, int], Coefficient] = {}
        right = list(other._terms.items())
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in right:
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + c1 * c2
        terms = {}
        for key, coeff in acc.items():
            coeff = normalize(coeff)
            if coeff:
                terms[key] = coeff
        return BiPoly._raw(terms, ring)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        one = self._ring.one if self._ring is not None else 1
        result = BiPoly.constant(one)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def exact_div(self, divisor: "BiPoly") -> "BiPoly":
        """
        Exact division, X-major: each step divides the top X row by the
        divisor's leading X row in Q[C] (or R[C])

        Raises:
            ZeroDivisionError: divisor is zero
            NotDivisible: the division leaves a remainder
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("bivariate division by zero")
        _merge_ring(self._ring, divisor._ring)
        den_rows = divisor.rows()
        lead_exp = int(divisor.degree_x)
        lead = den_rows[lead_exp]
        lead_is_one = lead == 1
        rem = self.rows()
        quot: dict[int, UniPoly] = {}
        while rem:
            top = max(rem)
            if top < lead_exp:
                raise NotDivisible(
                    f"({self}) is not divisible by ({divisor})",
                    numerator=self,
                    denominator=divisor,
                )
            try:
                q_row = rem[top] if lead_is_one else rem[top].exact_div(lead)
            except NotDivisible as exc:
                raise NotDivisible(
                    f"({self}) is not divisible by ({divisor})",
                    numerator=self,
                    denominator=divisor,
                ) from exc
            shift = top - lead_exp
            quot[shift] = q_row
            for k, row in den_rows.items():
                key = k + shift
                value = rem[key] - q_row * row if key in rem else -(q_row * row)
                if value.is_zero():
                    rem.pop(key, None)
                else:
                    rem[key] = value
            rem.pop(top, None)
        return BiPoly.from_rows(quot)

    # ------------------------------------------------------------------
    # Calculus, evaluation, substitution
    # ------------------------------------------------------------------

    def derivative(self, var: str) -> "BiPoly":
        """Formal partial derivative in "X" or "C" """
        if var not in (X_VAR, C_VAR):
            raise ValueError(f"unknown variable {var!r}")
        terms = {}
        for (i, j), coeff in self._terms.items():
            power = i if var == X_VAR else j
            if power:
                key = (i - 1, j) if var == X_VAR else (i, j - 1)
                terms[key] = normalize(coeff * power)
        return BiPoly._raw(terms, self._ring)

    def evaluate(self, x: Any, c: Any) -> Any:
        """Value at the point (x, c)"""
        return self.substitute_x(UniPoly.constant(x, C_VAR)).evaluate(c)

    def substitute_x(self, value: UniPoly) -> UniPoly:
        """Replace X by a polynomial in C, returning a polynomial in C"""
        rows = self.rows()
        result = UniPoly((), C_VAR)
        previous = None
        for i in sorted(rows, reverse=True):
            if previous is not None:
                result = result * value ** (previous - i)
            result = result + rows[i]
            previous = i
        if previous:
            result = result * value**previous
        return result

    def specialize_c(self, value: Any) -> UniPoly:
        """Replace C by a scalar, returning a polynomial in X"""
        return UniPoly(self._collect_x(value), X_VAR)

    def _collect_x(self, value: Any) -> dict[int, Coefficient]:
        coeffs: dict[int, Coefficient] = {}
        for i, row in self.rows().items():
            coeffs[i] = row.evaluate(value)
        return coeffs

    def compose_x(self, inner: "BiPoly") -> "BiPoly":
        """Replace X by a bivariate polynomial (Horner over the X rows)"""
        inner = self._coerce(inner)
        rows = self.rows()
        result = BiPoly()
        previous = None
        for i in sorted(rows, reverse=True):
            if previous is not None:
                result = result * inner ** (previous - i)
            result = result + BiPoly.from_c_poly(rows[i])
            previous = i
        if previous:
            result = result * inner**previous
        return result

    # ------------------------------------------------------------------
    # Ring changes
    # ------------------------------------------------------------------

    def lift(self, ring: Any) -> "BiPoly":
        if self._ring == ring:
            return self
        if self._ring is not None:
            raise IncompatibleRings(f"cannot lift from {self._ring} to {ring}")
        return BiPoly._raw({k: ring.element(c) for k, c in self._terms.items()}, ring)

    def to_rational(self) -> "BiPoly":
        """
        Collapse quotient-ring coefficients to rationals

        Raises:
            IncompatibleRings: if some coefficient is irrational
        """
        if self._ring is None:
            return self
        terms = {}
        for key, coeff in self._terms.items():
            if coefficient_ring(coeff) is None:
                terms[key] = coeff
            elif coeff.is_rational():
                terms[key] = coeff.to_rational()
            else:
                raise IncompatibleRings(f"coefficient {coeff} of X^{key[0]}*C^{key[1]} is not rational")
        return BiPoly(terms)


def _promote(poly: UniPoly) -> BiPoly:
    """View a univariate polynomial in X or C as a bivariate one"""
    if poly.is_zero():
        return BiPoly()
    if poly.var == X_VAR:
        return BiPoly._raw({(e, 0): c for e, c in poly.terms}, poly.ring)
    if poly.var == C_VAR:
        return BiPoly._raw({(0, e): c for e, c in poly.terms}, poly.ring)
    raise IncompatibleRings(f"variable {poly.var!r} is not one of X, C")
