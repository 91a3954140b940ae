"""
Dynatomic Module

Components:
- Models: MapSpec, PortraitLabel, CurveInfo
- Combinatorics: Moebius function, divisors, D(N)
- Iterates: f_{d,C}^n(X) with a per-process cache
- Polynomials: Phi_N, Phi_{M,N}, Psi factors, bifurcation resultants
- Cyclotomic fields for the roots of unity
"""

from .combinatorics import degree_D, divisors, mobius, period_inequality_holds, proper_divisors
from .curves import NONSINGULAR_NOTE, PREPERIOD_DROP_NOTE, curve_info, expected_degrees
from .cyclotomic import CYCLOTOMIC_VAR, cyclotomic_poly, cyclotomic_ring, is_root_of_unity, roots_of_unity
from .iterates import clear_iterate_cache, iterate_at, iterate_c_derivative_formula, iterate_poly
from .models import CurveInfo, MapSpec, NotRootOfUnity, PortraitLabel
from .polynomials import (
    bifurcation_parameters,
    bifurcation_resultant,
    check_root_of_unity,
    dynatomic_poly,
    gen_dynatomic_direct,
    gen_dynatomic_poly,
    psi_factor,
    psi_product,
)

__all__ = [
    "CYCLOTOMIC_VAR",
    "NONSINGULAR_NOTE",
    "PREPERIOD_DROP_NOTE",
    "CurveInfo",
    "MapSpec",
    "NotRootOfUnity",
    "PortraitLabel",
    "bifurcation_parameters",
    "bifurcation_resultant",
    "check_root_of_unity",
    "clear_iterate_cache",
    "curve_info",
    "cyclotomic_poly",
    "cyclotomic_ring",
    "degree_D",
    "divisors",
    "dynatomic_poly",
    "expected_degrees",
    "gen_dynatomic_direct",
    "gen_dynatomic_poly",
    "is_root_of_unity",
    "iterate_at",
    "iterate_c_derivative_formula",
    "iterate_poly",
    "mobius",
    "period_inequality_holds",
    "proper_divisors",
    "psi_factor",
    "psi_product",
    "roots_of_unity",
]
