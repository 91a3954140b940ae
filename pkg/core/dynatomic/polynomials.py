"""
Dynatomic and Generalized Dynatomic Polynomials

Features:
- Phi_N(X, C): Moebius product of (f^n(X) - X) over n | N
- Phi_{M,N}(X, C) = Phi_N(f^M(X), C) / Phi_N(f^{M-1}(X), C), with Phi_{0,N} = Phi_N
- Recursion Phi_{M,N}(X, C) = Phi_{M-1,N}(f(X), C) for M >= 2
- Psi factors Phi_N(zeta * f^{M-1}(X), C) over the d-th cyclotomic field
- Bifurcation resultants Res_X(Phi_N, Phi_n)
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any

import structlog

from core.exactmath import BiPoly, UniPoly, rational_roots, resultant

from .combinatorics import divisors, mobius
from .cyclotomic import cyclotomic_ring, roots_of_unity
from .iterates import iterate_poly
from .models import MapSpec, NotRootOfUnity, PortraitLabel

logger = structlog.get_logger()


# ============================================================================
# Phi_N
# ============================================================================

@lru_cache(maxsize=128)
def _dynatomic(d: int, N: int) -> BiPoly:
    spec = MapSpec(d)
    numerator = BiPoly.constant(1)
    denominator = BiPoly.constant(1)
    for n in divisors(N):
        sign = mobius(N // n)
        if sign == 0:
            continue
        factor = iterate_poly(spec, n) - BiPoly.x()
        if sign > 0:
            numerator = numerator * factor
        else:
            denominator = denominator * factor
    result = numerator.exact_div(denominator)
    logger.debug("dynatomic_built", d=d, N=N, degree_x=result.degree_x, terms=len(result.terms))
    return result


def dynatomic_poly(spec: MapSpec, N: int) -> BiPoly:
    """
    The N-th dynatomic polynomial Phi_N(X, C)

    The mu = +1 factors and the mu = -1 factors are multiplied separately and
    one exact division combines them.

    Raises:
        NotDivisible: never for valid input; signals an arithmetic bug
    """
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise ValueError(f"period N must be an integer >= 1, got {N!r}")
    return _dynatomic(spec.d, N)


# ============================================================================
# Phi_{M,N}
# ============================================================================

def gen_dynatomic_direct(spec: MapSpec, label: PortraitLabel) -> BiPoly:
    """Phi_{M,N} as the exact quotient Phi_N(f^M(X), C) / Phi_N(f^{M-1}(X), C)"""
    phi = dynatomic_poly(spec, label.N)
    if label.M == 0:
        return phi
    numerator = phi.compose_x(iterate_poly(spec, label.M))
    denominator = phi.compose_x(iterate_poly(spec, label.M - 1))
    return numerator.exact_div(denominator)


@lru_cache(maxsize=128)
def _gen_dynatomic(d: int, M: int, N: int) -> BiPoly:
    spec = MapSpec(d)
    if M <= 1:
        return gen_dynatomic_direct(spec, PortraitLabel(M, N))
    return _gen_dynatomic(d, M - 1, N).compose_x(iterate_poly(spec, 1))


def gen_dynatomic_poly(spec: MapSpec, label: PortraitLabel) -> BiPoly:
    """
    The generalized dynatomic polynomial Phi_{M,N}(X, C)

    M = 0 and M = 1 use the defining quotient; M >= 2 composes Phi_{M-1,N}
    with f. Tests cross-check the recursion against gen_dynatomic_direct.
    """
    return _gen_dynatomic(spec.d, label.M, label.N)


# ============================================================================
# Psi factors
# ============================================================================

def check_root_of_unity(spec: MapSpec, zeta: Any) -> Any:
    """Coerce zeta into the d-th cyclotomic field and check zeta^d = 1"""
    if isinstance(zeta, (int, Fraction)):
        zeta = cyclotomic_ring(spec.d).element(zeta)
    if getattr(zeta, "ring", None) != cyclotomic_ring(spec.d):
        raise NotRootOfUnity(f"zeta must live in the {spec.d}-th cyclotomic field", zeta=zeta, d=spec.d)
    if zeta**spec.d != 1:
        raise NotRootOfUnity(f"{zeta} is not a {spec.d}-th root of unity", zeta=zeta, d=spec.d)
    return zeta


def psi_factor(spec: MapSpec, label: PortraitLabel, zeta: Any) -> BiPoly:
    """
    Psi^zeta_{M,N}(X, C) = Phi_N(zeta * f^{M-1}(X), C)

    Coefficients live in Q[t]/(Phi_d^cyc). zeta = 1 gives the denominator of
    the defining quotient of Phi_{M,N}.

    Raises:
        ValueError: M = 0
        NotRootOfUnity: zeta^d != 1
    """
    if label.M < 1:
        raise ValueError("psi factors need preperiod M >= 1")
    zeta = check_root_of_unity(spec, zeta)
    inner = iterate_poly(spec, label.M - 1).lift(zeta.ring).scale(zeta)
    return dynatomic_poly(spec, label.N).compose_x(inner)


def psi_product(spec: MapSpec, label: PortraitLabel) -> BiPoly:
    """
    Product of Psi^zeta over the d-1 roots of unity zeta != 1

    The product has rational coefficients and equals Phi_{M,N}.

    Raises:
        IncompatibleRings: some coefficient of the product is irrational
    """
    product = BiPoly.constant(cyclotomic_ring(spec.d).one)
    for zeta in roots_of_unity(spec.d)[1:]:
        product = product * psi_factor(spec, label, zeta)
    return product.to_rational()


# ============================================================================
# Bifurcations
# ============================================================================

def bifurcation_resultant(spec: MapSpec, N: int, n: int) -> UniPoly:
    """Res_X(Phi_N, Phi_n) in Q[C]; its roots are the parameters where the cycles collide"""
    return resultant(dynatomic_poly(spec, N), dynatomic_poly(spec, n))


def bifurcation_parameters(spec: MapSpec, N: int, n: int) -> list[Fraction]:
    """Distinct rational roots of the bifurcation resultant, ascending"""
    res = bifurcation_resultant(spec, N, n)
    if res.is_zero():
        raise ValueError(f"Phi_{N} and Phi_{n} share a factor; every parameter is degenerate")
    return sorted(set(rational_roots(res)))
