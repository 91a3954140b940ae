"""
Iterates of f_{d,C}(X) = X^d + C

Iterates are cached per (d, n) for the lifetime of the process; every
construction of Phi_{M,N} reuses f^1 .. f^{M+N}.
"""

from functools import lru_cache
from typing import Any

import structlog

from core.exactmath import C_VAR, BiPoly, UniPoly, normalize

from .models import MapSpec

logger = structlog.get_logger()


def _check_steps(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"iteration count must be an integer >= 0, got {n!r}")


@lru_cache(maxsize=256)
def _iterate(d: int, n: int) -> BiPoly:
    if n == 0:
        return BiPoly.x()
    logger.debug("iterate_cache_miss", d=d, n=n)
    return _iterate(d, n - 1) ** d + BiPoly.c()


def iterate_poly(spec: MapSpec, n: int) -> BiPoly:
    """f_{d,C}^n(X) as a polynomial in X and C; n = 0 gives X"""
    _check_steps(n)
    return _iterate(spec.d, n)


@lru_cache(maxsize=4096)
def _iterate_at(d: int, x: Any, ring: Any, n: int) -> UniPoly:
    # ring is part of the key: a rational quotient element hashes like its value
    if n == 0:
        return UniPoly.constant(x, C_VAR)
    return _iterate_at(d, x, ring, n - 1) ** d + UniPoly.gen(C_VAR)


def iterate_at(spec: MapSpec, x: Any, n: int) -> UniPoly:
    """f_{d,C}^n(x) as a polynomial in C for a concrete point x"""
    _check_steps(n)
    x = normalize(x)
    return _iterate_at(spec.d, x, getattr(x, "ring", None), n)


def iterate_c_derivative_formula(spec: MapSpec, k: int) -> BiPoly:
    """
    Closed form of d/dC f^k(X)

    1 + sum_{j=1}^{k-1} d^j * prod_{i=1}^{j} f^{k-i}(X)^(d-1), built term by
    term from the cached iterates. k = 0 gives 0.
    """
    _check_steps(k)
    if k == 0:
        return BiPoly()
    d = spec.d
    total = BiPoly.constant(1)
    product = BiPoly.constant(1)
    for j in range(1, k):
        product = product * iterate_poly(spec, k - j) ** (d - 1)
        total = total + product.scale(d**j)
    return total


def clear_iterate_cache() -> None:
    _iterate.cache_clear()
    _iterate_at.cache_clear()
