"""
Built-in Identity Suites

- factorization: prod_{n | N} Phi_n = f^N - X
- degrees: X- and C-degrees, monicity and integrality of Phi_N and Phi_{M,N}
- period-inequality: D(N) > sum of D(n) over proper n | N, equality only at N = d = 2
- psi-product: prod over zeta != 1 of Psi^zeta = Phi_{M,N}
- derivative-formula: d/dC f^k equals its closed form
- resultant: subresultant chain agrees with the Sylvester determinant
- recursion: Phi_{M,N}(X, C) = Phi_{M-1,N}(f(X), C) agrees with the defining quotient
"""

from typing import Any

from core.dynatomic import (
    MapSpec,
    PortraitLabel,
    degree_D,
    divisors,
    dynatomic_poly,
    expected_degrees,
    gen_dynatomic_direct,
    gen_dynatomic_poly,
    iterate_c_derivative_formula,
    iterate_poly,
    period_inequality_holds,
    psi_product,
)
from core.exactmath import BiPoly, UniPoly, resultant, sylvester_resultant

from .base import IdentitySuite, register_suite

# Cases whose bivariate polynomials exceed these sizes are skipped.
DYNATOMIC_MAX_DEG_X = 300
GEN_DYNATOMIC_MAX_DEG_PRODUCT = 10_000


def _gen_affordable(d: int, M: int, N: int) -> bool:
    deg_x, deg_c = expected_degrees(MapSpec(d), PortraitLabel(M, N))
    return deg_x * deg_c <= GEN_DYNATOMIC_MAX_DEG_PRODUCT


def _is_monic_integral(poly: BiPoly) -> bool:
    return poly.is_integral() and poly.is_monic_x() and poly.is_monic_c()


@register_suite("factorization")
class FactorizationSuite(IdentitySuite):
    description = "product of Phi_n over n | N equals f^N(X) - X (d in {2,3}, N <= 6)"

    def cases(self) -> list[Any]:
        return [(d, N) for d in (2, 3) for N in range(1, 7)]

    def check(self, case: Any) -> str | None:
        d, N = case
        spec = MapSpec(d)
        product = BiPoly.constant(1)
        for n in divisors(N):
            product = product * dynatomic_poly(spec, n)
        if product != iterate_poly(spec, N) - BiPoly.x():
            return f"d={d} N={N}: product of Phi_n differs from f^N - X"
        return None


@register_suite("degrees")
class DegreeSuite(IdentitySuite):
    description = "degrees, monicity and integrality of Phi_N (d <= 4, N <= 5) and Phi_{M,N} (M <= 3)"

    def cases(self) -> list[Any]:
        cases = [(d, 0, N) for d in (2, 3, 4) for N in range(1, 6)]
        cases += [(d, M, N) for d in (2, 3, 4) for M in (1, 2, 3) for N in range(1, 6)]
        return cases

    def affordable(self, case: Any) -> bool:
        d, M, N = case
        if M == 0:
            return degree_D(MapSpec(d), N) <= DYNATOMIC_MAX_DEG_X
        return _gen_affordable(d, M, N)

    def describe_case(self, case: Any) -> str:
        d, M, N = case
        return f"d={d} M={M} N={N}"

    def check(self, case: Any) -> str | None:
        d, M, N = case
        spec = MapSpec(d)
        label = PortraitLabel(M, N)
        poly = dynatomic_poly(spec, N) if M == 0 else gen_dynatomic_poly(spec, label)
        expected = expected_degrees(spec, label)
        found = (poly.degree_x, poly.degree_c)
        if found != expected:
            return f"d={d} M={M} N={N}: degrees {found}, expected {expected}"
        if not _is_monic_integral(poly):
            return f"d={d} M={M} N={N}: not monic in X and C with integer coefficients"
        return None


@register_suite("period-inequality")
class PeriodInequalitySuite(IdentitySuite):
    description = "D(N) > sum of D(n) over proper divisors, equality only at N = d = 2"

    def cases(self) -> list[Any]:
        return [(d, N) for d in range(2, 6) for N in range(1, 13)]

    def check(self, case: Any) -> str | None:
        d, N = case
        strict, total, proper_sum = period_inequality_holds(MapSpec(d), N)
        if (d, N) == (2, 2):
            if total != proper_sum:
                return f"d=2 N=2: expected equality, got D(N)={total}, sum={proper_sum}"
        elif not strict:
            return f"d={d} N={N}: D(N)={total} is not larger than {proper_sum}"
        return None


@register_suite("psi-product")
class PsiProductSuite(IdentitySuite):
    description = "product of Psi^zeta over zeta != 1 is rational and equals Phi_{M,N}"

    def cases(self) -> list[Any]:
        return [(d, M, N) for d in (2, 3) for M in (1, 2) for N in (1, 2, 3)]

    def check(self, case: Any) -> str | None:
        d, M, N = case
        spec = MapSpec(d)
        label = PortraitLabel(M, N)
        if psi_product(spec, label) != gen_dynatomic_poly(spec, label):
            return f"d={d} M={M} N={N}: psi product differs from Phi_{{M,N}}"
        return None


@register_suite("derivative-formula")
class DerivativeFormulaSuite(IdentitySuite):
    description = "d/dC f^k(X) equals 1 + sum_j d^j prod_i f^{k-i}(X)^(d-1) (d in {2,3}, k <= 6)"

    def cases(self) -> list[Any]:
        return [(d, k) for d in (2, 3) for k in range(1, 7)]

    def check(self, case: Any) -> str | None:
        d, k = case
        spec = MapSpec(d)
        if iterate_poly(spec, k).derivative("C") != iterate_c_derivative_formula(spec, k):
            return f"d={d} k={k}: derivative differs from the closed form"
        return None


@register_suite("resultant")
class ResultantSuite(IdentitySuite):
    description = "Res_X(Phi_N, Phi_n) by subresultants equals the Sylvester determinant"

    def cases(self) -> list[Any]:
        cases = [(2, N, n) for N in range(1, 5) for n in range(1, N)]
        cases += [(3, N, n) for N in (2, 3) for n in range(1, N)]
        return cases

    def check(self, case: Any) -> str | None:
        d, N, n = case
        spec = MapSpec(d)
        left, right = dynatomic_poly(spec, N), dynatomic_poly(spec, n)
        chain = resultant(left, right)
        if chain != sylvester_resultant(left, right):
            return f"d={d}: Res(Phi_{N}, Phi_{n}) disagrees with the Sylvester determinant"
        if (d, N, n) == (2, 2, 1) and chain != UniPoly({1: 4, 0: 3}):
            return f"d=2: Res(Phi_2, Phi_1) = {chain}, expected 4*C + 3"
        return None


@register_suite("recursion")
class RecursionSuite(IdentitySuite):
    description = "Phi_{M,N} from the recursion equals the defining quotient (d <= 3, M <= 3, N <= 3)"

    def cases(self) -> list[Any]:
        return [(d, M, N) for d in (2, 3) for M in (2, 3) for N in (1, 2, 3)]

    def affordable(self, case: Any) -> bool:
        return _gen_affordable(*case)

    def check(self, case: Any) -> str | None:
        d, M, N = case
        spec = MapSpec(d)
        label = PortraitLabel(M, N)
        if gen_dynatomic_poly(spec, label) != gen_dynatomic_direct(spec, label):
            return f"d={d} M={M} N={N}: recursion differs from the defining quotient"
        return None
