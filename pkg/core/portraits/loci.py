"""
Specializations at a Point x

Everything here is a polynomial in C obtained by fixing X = x. Specializing
before dividing keeps the work univariate: the bivariate Phi_{M,N} is never
built.
"""

from typing import Any

from core.dynatomic import (
    MapSpec,
    PortraitLabel,
    check_root_of_unity,
    dynatomic_poly,
    iterate_at,
    proper_divisors,
)
from core.exactmath import IncompatibleRings, UniPoly, gcd_uni
from core.exactmath.polynomial import ensure_nonzero

PointValue = Any


def _phi_at(spec: MapSpec, n: int, value: UniPoly) -> UniPoly:
    """Phi_n(u(C), C) for a polynomial u in C"""
    return dynatomic_poly(spec, n).substitute_x(value)


def specialize(label: PortraitLabel, spec: MapSpec, x: PointValue) -> UniPoly:
    """
    P(C) = Phi_{M,N}(x, C)

    For M >= 1 this is Phi_N(f^M(x), C) / Phi_N(f^{M-1}(x), C). The divisor
    is never zero: for M = 1 it is Phi_N(x, C), monic in C; for M >= 2 its
    C-degree is positive.
    """
    if label.M == 0:
        return _phi_at(spec, label.N, iterate_at(spec, x, 0))
    numerator = _phi_at(spec, label.N, iterate_at(spec, x, label.M))
    denominator = _phi_at(spec, label.N, iterate_at(spec, x, label.M - 1))
    return numerator.exact_div(denominator)


def degenerate_factors(label: PortraitLabel, spec: MapSpec, x: PointValue) -> list[UniPoly]:
    """
    Factors of the degenerate locus S(C)

    [f^{M-1}(x)] when M >= 1 (preperiod drop), then Phi_n(f^M(x), C) for
    every proper divisor n of N (period drop).
    """
    factors = []
    if label.M >= 1:
        factors.append(iterate_at(spec, x, label.M - 1))
    orbit_point = iterate_at(spec, x, label.M)
    factors.extend(_phi_at(spec, n, orbit_point) for n in proper_divisors(label.N))
    return factors


def degenerate_locus(label: PortraitLabel, spec: MapSpec, x: PointValue) -> UniPoly:
    """
    S(C), the product of the degenerate factors

    S is the zero polynomial exactly when (x, M) = (0, 1).
    """
    result = UniPoly.constant(1, "C")
    for factor in degenerate_factors(label, spec, x):
        result = result * factor
    return result


def _collapse(poly: UniPoly) -> UniPoly:
    try:
        return poly.to_rational()
    except IncompatibleRings:
        return poly


def psi_specialization(label: PortraitLabel, spec: MapSpec, x: PointValue, zeta: Any) -> UniPoly:
    """
    Psi^zeta_{M,N}(x, C) = Phi_N(zeta * f^{M-1}(x), C)

    Rational results are returned with rational coefficients.
    """
    if label.M < 1:
        raise ValueError("psi factors need preperiod M >= 1")
    zeta = check_root_of_unity(spec, zeta)
    inner = iterate_at(spec, x, label.M - 1).lift(zeta.ring).scale(zeta)
    return _collapse(_phi_at(spec, label.N, inner))


def has_multiple_root(poly: UniPoly) -> bool:
    """True when gcd(p, p') is nonconstant"""
    ensure_nonzero(poly, "has_multiple_root input")
    return not gcd_uni(poly, poly.derivative()).is_constant()
