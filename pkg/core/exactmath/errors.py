"""
Exceptions raised by the exact arithmetic layer

Every error carries the objects that triggered it so callers can report
the exact offending polynomial or factor.
"""

from typing import Any


class ExactMathError(Exception):
    """Base class for all exact arithmetic failures"""


class IncompatibleRings(ExactMathError):
    """Operands live in different polynomial or coefficient rings"""


class NotDivisible(ExactMathError):
    """An exact division left a nonzero remainder"""

    def __init__(self, message: str, numerator: Any = None, denominator: Any = None):
        super().__init__(message)
        self.numerator = numerator
        self.denominator = denominator


class ZeroDivisor(ExactMathError):
    """A non-invertible element was found in an asserted field

    `factor` is the nontrivial factor of the modulus that was discovered.
    """

    def __init__(self, message: str, factor: Any = None):
        super().__init__(message)
        self.factor = factor


class ZeroOperand(ExactMathError):
    """An operation that needs a nonzero polynomial received zero"""


class RationalParseError(ExactMathError, ValueError):
    """Text that is not an exact rational literal"""

    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


class NotAField(ExactMathError):
    """Field-only work requested over a quotient ring not asserted irreducible"""

    def __init__(self, message: str, ring: Any = None):
        super().__init__(message)
        self.ring = ring
