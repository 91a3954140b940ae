"""
Closed-Form Classification

x realizes (M, N) in degree d iff (x, M) != (0, 1) and (x, M, N, d) is not
one of (-1/2, 0, 2, 2), (1/2, 1, 2, 2), (1, 2, 2, 2), (-1, 2, 2, 2).

Used to annotate sweeps; `realizes` never consults it.
"""

from fractions import Fraction

from core.dynatomic import MapSpec, PortraitLabel
from core.exactmath.polynomial import coefficient_ring

from .orbits import PointValue

EXCEPTIONAL_CASES: frozenset[tuple[Fraction, int, int, int]] = frozenset(
    {
        (Fraction(-1, 2), 0, 2, 2),
        (Fraction(1, 2), 1, 2, 2),
        (Fraction(1), 2, 2, 2),
        (Fraction(-1), 2, 2, 2),
    }
)


def expected_realizable(x: PointValue, label: PortraitLabel, spec: MapSpec) -> bool:
    """The classification's prediction for (x, M, N, d)"""
    if coefficient_ring(x) is not None:
        if not x.is_rational():
            return True
        x = x.to_rational()
    x = Fraction(x)
    if x == 0 and label.M == 1:
        return False
    return (x, label.M, label.N, spec.d) not in EXCEPTIONAL_CASES
