"""
Divisor Combinatorics

Features:
- Moebius function and sorted divisor lists
- D(N) = sum over n | N of mu(N/n) * d^n, the X-degree of Phi_N
- The period inequality D(N) > sum of D(n) over proper divisors n of N
"""

from functools import lru_cache

from .models import MapSpec


def _check_positive(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"expected an integer >= 1, got {n!r}")


@lru_cache(maxsize=1024)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            exp = 0
            while n % p == 0:
                n //= p
                exp += 1
            factors.append((p, exp))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def mobius(n: int) -> int:
    """mu(n): 0 if n has a square factor, else (-1)^(number of prime factors)"""
    _check_positive(n)
    factors = _factorize(n)
    if any(exp > 1 for _, exp in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending"""
    _check_positive(n)
    result = [1]
    for p, exp in _factorize(n):
        result = [q * p**k for q in result for k in range(exp + 1)]
    return sorted(result)


def proper_divisors(n: int) -> list[int]:
    return divisors(n)[:-1]


def degree_D(spec: MapSpec, N: int) -> int:
    """X-degree of the N-th dynatomic polynomial of z^d + c"""
    _check_positive(N)
    return sum(mobius(N // n) * spec.d**n for n in divisors(N))


def period_inequality_holds(spec: MapSpec, N: int) -> tuple[bool, int, int]:
    """
    Compare D(N) with the sum of D(n) over proper divisors

    Returns (strict, D(N), proper_sum). Strict inequality holds for every
    (N, d) except N = d = 2, where both sides equal 2.
    """
    total = degree_D(spec, N)
    proper_sum = sum(degree_D(spec, n) for n in proper_divisors(N))
    return total > proper_sum, total, proper_sum
