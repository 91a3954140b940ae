"""
Exact Orbits of z^d + c

Features:
- orbit_portrait: iterate exactly, detect the first repetition, report the
  minimal (preperiod, period)
- Escape tests for rational points (archimedean and p-adic) end orbits that
  provably never repeat, and bound the rational parameters worth trying
- multiplier: (f^N)'(x) by the chain rule
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

import structlog

from core.dynatomic import MapSpec, PortraitLabel
from core.exactmath import format_value, normalize
from core.exactmath.polynomial import coefficient_ring

logger = structlog.get_logger()

PointValue = Any  # int | Fraction | QuotientElement


class OrbitMarker(Enum):
    """Outcome of an orbit search that found no repetition"""

    NOT_PREPERIODIC_WITHIN_BOUND = "NotPreperiodicWithinBound"


NOT_PREPERIODIC = OrbitMarker.NOT_PREPERIODIC_WITHIN_BOUND


@dataclass
class OrbitReport:
    """Orbit [x, f(x), ...] and its portrait"""

    orbit: list[PointValue]
    portrait: PortraitLabel | OrbitMarker
    bound_used: int
    escaped: bool = field(default=False)

    @property
    def is_preperiodic(self) -> bool:
        return isinstance(self.portrait, PortraitLabel)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary"""
        return {
            "orbit": [format_value(v) for v in self.orbit],
            "portrait": self.portrait.as_pair() if self.is_preperiodic else self.portrait.value,
            "bound": self.bound_used,
        }


def _is_rational(value: PointValue) -> bool:
    return coefficient_ring(value) is None


def _escapes(z: PointValue, c: PointValue, d: int) -> bool:
    """True when the orbit of z is provably infinite (rational values only)"""
    if not (_is_rational(z) and _is_rational(c)):
        return False
    z, c = Fraction(z), Fraction(c)
    # some prime p has |z|_p > max(1, |c|_p^(1/d)): |f^k(z)|_p grows without bound
    if c.denominator % z.denominator**d:
        return True
    size = abs(z)
    return size > 1 and size * (size - 1) > abs(c)


def parameter_box(x: Fraction, d: int) -> tuple[int, int]:
    """
    (D, K) such that every rational c with x preperiodic is k / D, |k| <= K

    The p-adic escape test forces den(c) = den(x)^d. The archimedean test
    applied to f(x) forces |c| - |x|^d <= 1/2 + sqrt(1/4 + |c|), that is
    |c| <= A + 1 + sqrt(A + 1) with A = |x|^d.
    """
    x = Fraction(x)
    denominator = x.denominator**d
    size = abs(x) ** d
    root_bound = math.isqrt(math.ceil(size + 1)) + 1
    return denominator, math.floor((size + 1 + root_bound) * denominator)


def orbit_portrait(x: PointValue, c: PointValue, spec: MapSpec, bound: int) -> OrbitReport:
    """
    Iterate f_{d,c} from x until a value repeats

    Returns the minimal portrait (m, n) with orbit entries 0 .. m+n-1, or the
    NotPreperiodicWithinBound marker when `bound` iterations produce no
    repetition (or a rational orbit escapes).

    Raises:
        ValueError: bound < 1
        IncompatibleRings / ZeroDivisor: x and c live in different fields
    """
    if bound < 1:
        raise ValueError(f"orbit bound must be >= 1, got {bound}")
    d = spec.d
    x, c = normalize(x), normalize(c)
    orbit = [x]
    seen = {x: 0}
    current = x
    for step in range(1, bound + 1):
        if _escapes(current, c, d):
            logger.debug("orbit_escaped", step=step - 1, d=d)
            return OrbitReport(orbit=orbit, portrait=NOT_PREPERIODIC, bound_used=bound, escaped=True)
        current = normalize(current**d + c)
        if current in seen:
            m = seen[current]
            return OrbitReport(orbit=orbit, portrait=PortraitLabel(m, step - m), bound_used=bound)
        seen[current] = step
        orbit.append(current)
    logger.warning("orbit_bound_reached", bound=bound, d=d)
    return OrbitReport(orbit=orbit, portrait=NOT_PREPERIODIC, bound_used=bound)


def multiplier(x: PointValue, c: PointValue, spec: MapSpec, N: int) -> PointValue:
    """
    (f_{d,c}^N)'(x) = prod_{k=0}^{N-1} d * f^k(x)^(d-1)

    The chain-rule form; for d = 2 it coincides with d^N * prod f^k(x).
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    d = spec.d
    value = normalize(x)
    result: PointValue = 1
    for _ in range(N):
        result = result * d * value ** (d - 1)
        value = value**d + c
    return normalize(result)
