"""
Cyclotomic Polynomials and Fields

Features:
- cyclotomic_poly(n): t^n - 1 divided by the lower cyclotomic polynomials
- cyclotomic_ring(d): Q[t]/(cyclotomic_poly(d)), which holds every d-th root of unity
- roots_of_unity(d): zeta = t^k for k = 0 .. d-1
"""

from functools import lru_cache

from core.exactmath import QuotientElement, QuotientRing, UniPoly

from .combinatorics import proper_divisors

CYCLOTOMIC_VAR = "t"


@lru_cache(maxsize=64)
def cyclotomic_poly(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial in t"""
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    result = UniPoly({n: 1, 0: -1}, var=CYCLOTOMIC_VAR)
    for k in proper_divisors(n):
        result = result.exact_div(cyclotomic_poly(k))
    return result


@lru_cache(maxsize=64)
def cyclotomic_ring(d: int) -> QuotientRing:
    """Q[t]/(Phi_d^cyc(t)); irreducibility of cyclotomic polynomials is classical"""
    return QuotientRing(cyclotomic_poly(d), irreducible=True)


def roots_of_unity(d: int) -> list[QuotientElement]:
    """All d-th roots of unity t^0, t^1, ..., t^(d-1) in the d-th cyclotomic field"""
    ring = cyclotomic_ring(d)
    zeta = ring.gen
    return [zeta**k for k in range(d)]


def is_root_of_unity(zeta: QuotientElement, d: int) -> bool:
    return zeta**d == 1
