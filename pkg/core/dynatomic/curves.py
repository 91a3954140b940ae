"""
Curve Metadata for Phi_{M,N}(X, C) = 0

Degrees come from the closed formulas; tests compare them with the degrees
of the constructed polynomials.
"""

from .combinatorics import degree_D
from .models import CurveInfo, MapSpec, PortraitLabel

NONSINGULAR_NOTE = "nonsingular"
PREPERIOD_DROP_NOTE = "points with f_{d,c}^{M-1}(x) = 0"


def _exact_quotient(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"{what} = {numerator}/{denominator} is not an integer")
    return quotient


def expected_degrees(spec: MapSpec, label: PortraitLabel) -> tuple[int, int]:
    """(deg_X, deg_C) of Phi_{M,N}"""
    d = spec.d
    D = degree_D(spec, label.N)
    if label.M == 0:
        return D, _exact_quotient(D, d, "deg_C Phi_N")
    deg_x = (d - 1) * d ** (label.M - 1) * D
    return deg_x, _exact_quotient(deg_x, d, "deg_C Phi_{M,N}")


def curve_info(spec: MapSpec, label: PortraitLabel) -> CurveInfo:
    """Degrees, number of irreducible components and singular locus of the curve"""
    deg_x, deg_c = expected_degrees(spec, label)
    if label.M == 0:
        components, note = 1, NONSINGULAR_NOTE
    else:
        components, note = spec.d - 1, PREPERIOD_DROP_NOTE
    return CurveInfo(
        label=label,
        d=spec.d,
        degX=deg_x,
        degC=deg_c,
        component_count=components,
        singular_locus_note=note,
    )
