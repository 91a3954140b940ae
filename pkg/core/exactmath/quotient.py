"""
Quotient Rings Q[t]/(m(t))

Represents algebraic numbers (roots of unity, algebraic points x and
parameters c) through a monic modulus. Irreducibility of the modulus is a
caller assertion; when an inversion uncovers a zero divisor the operation
aborts with the discovered factor instead of returning a wrong answer.
"""

from fractions import Fraction
from typing import Any

from .errors import IncompatibleRings, ZeroDivisor
from .polynomial import UniPoly
from .rational import format_rational, normalize


class QuotientRing:
    """Q[t]/(modulus) with a monic modulus of degree >= 1"""

    __slots__ = ("irreducible", "modulus")

    def __init__(self, modulus: UniPoly, irreducible: bool = False):
        if not modulus.is_rational():
            raise IncompatibleRings("modulus must have rational coefficients")
        if modulus.is_constant():
            raise ValueError("modulus must have degree >= 1")
        if not modulus.is_monic():
            raise ValueError(f"modulus must be monic, got leading coefficient {modulus.leading_coefficient}")
        self.modulus = modulus
        self.irreducible = irreducible

    @property
    def degree(self) -> int:
        return int(self.modulus.degree)

    @property
    def var(self) -> str:
        return self.modulus.var

    @property
    def zero(self) -> "QuotientElement":
        return QuotientElement(self, UniPoly((), var=self.var))

    @property
    def one(self) -> "QuotientElement":
        return QuotientElement(self, UniPoly.constant(1, var=self.var))

    @property
    def gen(self) -> "QuotientElement":
        """The class of t"""
        return self.element(UniPoly.gen(self.var))

    def element(self, value: Any) -> "QuotientElement":
        """Coerce a rational, a rational polynomial in t, or an element of this ring"""
        if isinstance(value, QuotientElement):
            if value.ring != self:
                raise IncompatibleRings(f"element of {value.ring} used in {self}")
            return value
        if isinstance(value, UniPoly):
            if not value.is_rational():
                raise IncompatibleRings("representative must have rational coefficients")
            return QuotientElement(self, value.with_var(self.var) % self.modulus)
        if isinstance(value, (int, Fraction)):
            return QuotientElement(self, UniPoly.constant(value, var=self.var))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self is other or self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("QuotientRing", self.modulus))

    def __repr__(self) -> str:
        return f"QuotientRing({self.modulus}, irreducible={self.irreducible})"

    __str__ = __repr__


class QuotientElement:
    """Reduced representative of a class in a QuotientRing"""

    __slots__ = ("rep", "ring")

    def __init__(self, ring: QuotientRing, rep: UniPoly):
        if rep.degree >= ring.degree:
            rep = rep % ring.modulus
        self.ring = ring
        self.rep = rep

    # ------------------------------------------------------------------
    # Rational view
    # ------------------------------------------------------------------

    def is_rational(self) -> bool:
        return self.rep.is_constant()

    def to_rational(self) -> int | Fraction:
        if not self.is_rational():
            raise IncompatibleRings(f"{self} is not a rational number")
        return normalize(self.rep.coefficient(0))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: Any) -> "QuotientElement | None":
        if isinstance(other, QuotientElement):
            if other.ring != self.ring:
                raise IncompatibleRings(f"elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuotientElement(self.ring, UniPoly.constant(other, var=self.ring.var))
        return None

    def __add__(self, other: Any) -> "QuotientElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientElement(self.ring, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self) -> "QuotientElement":
        return QuotientElement(self.ring, -self.rep)

    def __sub__(self, other: Any) -> "QuotientElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientElement(self.ring, self.rep - other.rep)

    def __rsub__(self, other: Any) -> "QuotientElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientElement(self.ring, other.rep - self.rep)

    def __mul__(self, other: Any) -> "QuotientElement":
        if isinstance(other, (int, Fraction)):
            return QuotientElement(self.ring, self.rep.scale(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientElement(self.ring, (self.rep * other.rep) % self.ring.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "QuotientElement":
        """
        Multiplicative inverse via the extended Euclidean algorithm

        Raises:
            ZeroDivisionError: for the zero element
            ZeroDivisor: when gcd(rep, modulus) is a nontrivial factor
        """
        from .algorithms import extended_gcd

        if not self.rep:
            raise ZeroDivisionError(f"zero has no inverse in {self.ring}")
        g, s, _ = extended_gcd(self.rep, self.ring.modulus)
        if not g.is_constant():
            raise ZeroDivisor(
                f"{self} is a zero divisor modulo {self.ring.modulus}",
                factor=g,
            )
        return QuotientElement(self.ring, s)

    def __truediv__(self, other: Any) -> "QuotientElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "QuotientElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "QuotientElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # Comparison
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuotientElement):
            return self.ring == other.ring and self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rep.coefficient(0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.rep.coefficient(0))
        return hash((self.ring, self.rep))

    def __bool__(self) -> bool:
        return bool(self.rep)

    def __repr__(self) -> str:
        return f"QuotientElement({self}, modulus={self.ring.modulus})"

    def __str__(self) -> str:
        if self.is_rational():
            return format_rational(self.rep.coefficient(0))
        return f"({self.rep})"
