"""
Polynomial Algorithms over Q and Q[t]/(m)

Features:
- gcd over Q via primitive pseudo-remainder sequences (integer coefficients)
- gcd over asserted fields Q[t]/(m) via monic Euclid
- Extended gcd, squarefree part, modular coprimality tests
- Resultants in X over Q[C]: subresultant chain and Bareiss Sylvester determinant
- Rational roots with multiplicity, and bounded searches for roots k / D
"""

import math
from collections.abc import Iterator
from fractions import Fraction
from functools import reduce

import structlog

from .bivariate import C_VAR, X_VAR, BiPoly, _promote
from .errors import IncompatibleRings, NotAField, ZeroOperand
from .polynomial import UniPoly, ensure_nonzero, invert

logger = structlog.get_logger()


# ============================================================================
# Generic entry points
# ============================================================================

def exact_div(numerator: UniPoly | BiPoly, denominator: UniPoly | BiPoly) -> UniPoly | BiPoly:
    """Exact quotient; raises NotDivisible rather than truncating"""
    if type(numerator) is not type(denominator):
        raise IncompatibleRings("exact_div operands must both be UniPoly or both BiPoly")
    return numerator.exact_div(denominator)


def derivative(poly: UniPoly | BiPoly, var: str | None = None) -> UniPoly | BiPoly:
    """Formal derivative; `var` selects X or C for bivariate input"""
    if isinstance(poly, BiPoly):
        if var is None:
            raise ValueError("bivariate derivative needs a variable")
        return poly.derivative(var)
    if var is not None and var != poly.var and not poly.is_zero():
        return UniPoly((), poly.var)
    return poly.derivative()


# ============================================================================
# Integer helpers
# ============================================================================

def _content(values: list[int]) -> int:
    return reduce(math.gcd, values, 0)


def _to_primitive_integer(poly: UniPoly) -> list[int]:
    """Dense integer coefficients (low to high), content 1, positive lead"""
    dense = [Fraction(c) for c in poly.dense()]
    denominator = reduce(math.lcm, (c.denominator for c in dense), 1)
    ints = [int(c * denominator) for c in dense]
    content = _content(ints)
    if ints[-1] < 0:
        content = -content
    return [v // content for v in ints]


def _strip(values: list) -> list:
    while values and not values[-1]:
        values.pop()
    return values


def _integer_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder up to a power of lc(b); enough for primitive PRS"""
    rem = list(a)
    lead = b[-1]
    deg_b = len(b) - 1
    while rem and len(rem) - 1 >= deg_b:
        top = rem[-1]
        shift = len(rem) - 1 - deg_b
        rem = [v * lead for v in rem]
        for i, coeff in enumerate(b):
            rem[i + shift] -= top * coeff
        _strip(rem)
    return rem


def _primitive(values: list[int]) -> list[int]:
    content = _content(values)
    if values[-1] < 0:
        content = -content
    return [v // content for v in values]


def _rational_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    left = _to_primitive_integer(a)
    right = _to_primitive_integer(b)
    if len(left) < len(right):
        left, right = right, left
    rounds = 0
    while right:
        rem = _integer_prem(left, right)
        left, right = right, (_primitive(rem) if rem else [])
        rounds += 1
    logger.debug("rational_gcd", rounds=rounds, degree=len(left) - 1)
    return UniPoly.from_dense(left, var=a.var if not a.is_zero() else b.var).monic()


# Word-sized primes for modular coprimality tests
COPRIMALITY_PRIMES = (2**61 - 1, 2**31 - 1, 1_000_000_007)


def _remainder_mod(a: list[int], b: list[int], prime: int) -> list[int]:
    rem = list(a)
    inverse = pow(b[-1], -1, prime)
    deg_b = len(b) - 1
    while rem and len(rem) - 1 >= deg_b:
        factor = rem[-1] * inverse % prime
        shift = len(rem) - 1 - deg_b
        for i, coeff in enumerate(b):
            rem[i + shift] = (rem[i + shift] - factor * coeff) % prime
        _strip(rem)
    return rem


def _gcd_degree_mod(a: list[int], b: list[int], prime: int) -> int | None:
    """Degree of gcd(a mod p, b mod p); None when p divides a leading coefficient"""
    if a[-1] % prime == 0 or b[-1] % prime == 0:
        return None
    left = [v % prime for v in a]
    right = [v % prime for v in b]
    while right:
        left, right = right, _remainder_mod(left, right, prime)
    return len(left) - 1


# ============================================================================
# gcd family
# ============================================================================

def _require_field(ring, operation: str) -> None:
    if ring is not None and not ring.irreducible:
        raise NotAField(f"{operation} needs a field; {ring} is not asserted irreducible", ring=ring)


def gcd_uni(a: UniPoly, b: UniPoly) -> UniPoly:
    """
    Monic gcd of two univariate polynomials over a field

    Over Q denominators are cleared and a primitive remainder sequence keeps
    coefficient growth in check. Over an asserted field Q[t]/(m) plain
    Euclid is used; a non-invertible leading coefficient raises ZeroDivisor
    carrying the discovered factor of m.

    gcd(0, 0) = 0.

    Raises:
        NotAField: the coefficient ring is not asserted irreducible
    """
    _require_field(a._check(b), "gcd")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_rational() and b.is_rational():
        return _rational_gcd(a, b)
    left, right = a, b
    while not right.is_zero():
        left, right = right, left % right
    return left.monic()


def extended_gcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, s, t) with s*a + t*b = g and g monic (or zero)"""
    ring = a._check(b)
    _require_field(ring, "extended gcd")
    one = ring.one if ring is not None else 1
    var = a.var if not a.is_zero() else b.var
    r0, r1 = a, b
    s0, s1 = UniPoly.constant(one, var), UniPoly((), var)
    t0, t1 = UniPoly((), var), UniPoly.constant(one, var)
    while not r1.is_zero():
        quotient, remainder = r0.divmod(r1)
        r0, r1 = r1, remainder
        s0, s1 = s1, s0 - quotient * s1
        t0, t1 = t1, t0 - quotient * t1
    if r0.is_zero():
        return r0, s0, t0
    scale = invert(r0.leading_coefficient)
    return r0.scale(scale), s0.scale(scale), t0.scale(scale)


def squarefree_part(poly: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors: p / gcd(p, p')"""
    ensure_nonzero(poly, "squarefree_part input")
    return poly.exact_div(gcd_uni(poly, poly.derivative())).monic()


def is_squarefree(poly: UniPoly) -> bool:
    ensure_nonzero(poly, "is_squarefree input")
    return gcd_uni(poly, poly.derivative()).is_constant()


def coprime(a: UniPoly, b: UniPoly) -> bool:
    """
    True when gcd(a, b) is constant

    Over Q the gcd is first taken modulo a few primes that keep both
    degrees; a constant image proves coprimality without the exact
    remainder sequence. Otherwise the exact gcd decides.
    """
    _require_field(a._check(b), "coprimality test")
    if a.is_zero() or b.is_zero():
        return gcd_uni(a, b).is_constant()
    if a.is_constant() or b.is_constant():
        return True
    if a.is_rational() and b.is_rational():
        left, right = _to_primitive_integer(a), _to_primitive_integer(b)
        for prime in COPRIMALITY_PRIMES:
            if _gcd_degree_mod(left, right, prime) == 0:
                return True
    return gcd_uni(a, b).is_constant()


def remove_common_factors(poly: UniPoly, other: UniPoly) -> tuple[UniPoly, int]:
    """
    Divide out every factor shared with `other`

    Repeats poly <- poly / gcd(poly, other) until the two are coprime.
    Returns the cofactor and the number of division rounds.
    """
    rounds = 0
    while not coprime(poly, other):
        poly = poly.exact_div(gcd_uni(poly, other))
        rounds += 1
    return poly, rounds


# ============================================================================
# Rational roots
# ============================================================================

def _primes(start: int = 3) -> Iterator[int]:
    candidate = start
    while True:
        if candidate > 1 and all(candidate % p for p in range(2, math.isqrt(candidate) + 1)):
            yield candidate
        candidate += 1


def _eval_int(coeffs: list[int], value: int, modulus: int | None = None) -> int:
    result = 0
    for coeff in reversed(coeffs):
        result = result * value + coeff
        if modulus is not None:
            result %= modulus
    return result


def _integer_roots_of_monic(coeffs: list[int]) -> list[int]:
    """
    Distinct integer roots of a monic squarefree integer polynomial

    Candidates for the rational root theorem are produced p-adically: roots
    modulo a prime with simple reduction are Newton-lifted past twice the
    Cauchy bound and each candidate is tested exactly.
    """
    degree = len(coeffs) - 1
    if degree <= 0:
        return []
    if degree == 1:
        return [-coeffs[0]]
    bound = 1 + max(abs(c) for c in coeffs[:-1])
    derivative = [i * coeffs[i] for i in range(1, len(coeffs))]
    for prime in _primes():
        residues = [r for r in range(prime) if _eval_int(coeffs, r, prime) == 0]
        if any(_eval_int(derivative, r, prime) == 0 for r in residues):
            continue
        roots = []
        for residue in residues:
            modulus = prime
            root = residue
            while modulus <= 2 * bound:
                modulus = modulus * modulus
                slope = pow(_eval_int(derivative, root, modulus), -1, modulus)
                root = (root - _eval_int(coeffs, root, modulus) * slope) % modulus
            if root > modulus // 2:
                root -= modulus
            if abs(root) > bound or (root and coeffs[0] % root):
                continue
            if _eval_int(coeffs, root) == 0:
                roots.append(root)
        logger.debug("integer_roots", prime=prime, candidates=len(residues), roots=len(roots))
        return sorted(roots)
    return []  # pragma: no cover


def rational_roots(poly: UniPoly) -> list[Fraction]:
    """
    All rational roots, repeated by multiplicity, in ascending order

    Denominators are cleared by the substitution C = y / D that turns the
    monic polynomial into a monic integer polynomial in y.
    """
    ensure_nonzero(poly, "rational_roots input")
    if not poly.is_rational():
        raise IncompatibleRings("rational_roots needs rational coefficients")
    terms = poly.terms
    zero_multiplicity = terms[-1][0]
    roots: list[Fraction] = [Fraction(0)] * zero_multiplicity
    reduced = UniPoly({e - zero_multiplicity: c for e, c in terms}, poly.var).monic()
    degree = int(reduced.degree)
    if degree > 0:
        dense = [Fraction(c) for c in reduced.dense()]
        scale = reduce(math.lcm, (c.denominator for c in dense), 1)
        integer = [int(c * scale ** (degree - i)) for i, c in enumerate(dense)]
        squarefree = _to_primitive_integer(squarefree_part(UniPoly.from_dense(integer, poly.var)))
        for y in _integer_roots_of_monic(squarefree):
            root = Fraction(y, scale)
            linear = UniPoly({1: 1, 0: -root}, poly.var)
            remaining = reduced
            while True:
                quotient, remainder = remaining.divmod(linear)
                if not remainder.is_zero():
                    break
                roots.append(root)
                remaining = quotient
    return sorted(roots)


def rational_roots_with_denominator(
    poly: UniPoly, denominator: int, numerator_bound: int
) -> list[Fraction]:
    """
    Distinct roots k / denominator in lowest terms with |k| <= numerator_bound

    Avoids the squarefree part: each candidate is screened modulo a large
    prime on the homogenized integer polynomial and confirmed exactly.
    """
    ensure_nonzero(poly, "rational_roots_with_denominator input")
    if not poly.is_rational():
        raise IncompatibleRings("rational_roots_with_denominator needs rational coefficients")
    if denominator < 1:
        raise ValueError(f"denominator must be >= 1, got {denominator}")
    if poly.is_constant():
        return []
    coeffs = _to_primitive_integer(poly)
    degree = len(coeffs) - 1
    prime = COPRIMALITY_PRIMES[0]
    # sum_i a_i k^i D^(n-i) vanishes iff poly(k / D) does
    scaled = [coeff * denominator ** (degree - i) for i, coeff in enumerate(coeffs)]
    reduced = [v % prime for v in scaled]
    roots = []
    for k in range(-numerator_bound, numerator_bound + 1):
        if math.gcd(k, denominator) != 1:
            continue
        if _eval_int(reduced, k % prime, prime) != 0:
            continue
        if _eval_int(scaled, k) == 0:
            roots.append(Fraction(k, denominator))
    logger.debug("bounded_root_search", denominator=denominator, bound=numerator_bound, roots=len(roots))
    return roots


# ============================================================================
# Resultants in X over Q[C]
# ============================================================================

def _as_bipoly(poly: UniPoly | BiPoly) -> BiPoly:
    if isinstance(poly, BiPoly):
        return poly
    if poly.var not in (X_VAR, C_VAR):
        raise IncompatibleRings(f"resultant operands must be in X and C, got {poly.var!r}")
    return _promote(poly)


def _x_rows(poly: BiPoly) -> list[UniPoly]:
    """Dense list (by X exponent) of coefficient polynomials in C"""
    rows = poly.rows()
    zero = UniPoly((), C_VAR)
    return [rows.get(i, zero) for i in range(int(poly.degree_x) + 1)]


def _prem_rows(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """Exact pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b"""
    lead = b[-1]
    steps = len(a) - len(b) + 1
    rem = list(a)
    while rem and len(rem) >= len(b):
        top = rem[-1]
        shift = len(rem) - len(b)
        rem = [coeff * lead for coeff in rem]
        for i, coeff in enumerate(b):
            rem[i + shift] = rem[i + shift] - top * coeff
        _strip(rem)
        steps -= 1
    if steps > 0:
        factor = lead**steps
        rem = [coeff * factor for coeff in rem]
    return rem


def resultant(a: UniPoly | BiPoly, b: UniPoly | BiPoly) -> UniPoly:
    """
    Res_X(a, b) as a polynomial in C, via the subresultant chain

    Raises:
        ZeroOperand: if either operand is zero
    """
    left, right = _as_bipoly(a), _as_bipoly(b)
    if left.is_zero() or right.is_zero():
        raise ZeroOperand("resultant of a zero polynomial")
    rows_a, rows_b = _x_rows(left), _x_rows(right)
    deg_a, deg_b = len(rows_a) - 1, len(rows_b) - 1
    sign = 1
    if deg_a < deg_b:
        rows_a, rows_b = rows_b, rows_a
        deg_a, deg_b = deg_b, deg_a
        if deg_a % 2 and deg_b % 2:
            sign = -1
    if deg_b == 0:
        return (rows_b[0] ** deg_a).scale(sign)
    one = UniPoly.constant(1, C_VAR)
    g, h = one, one
    while True:
        delta = deg_a - deg_b
        if deg_a % 2 and deg_b % 2:
            sign = -sign
        rem = _prem_rows(rows_a, rows_b)
        if not rem:
            return UniPoly((), C_VAR)
        rows_a = rows_b
        divisor = g * h**delta
        rows_b = [coeff.exact_div(divisor) for coeff in rem]
        g = rows_a[-1]
        if delta >= 1:
            h = (g**delta).exact_div(h ** (delta - 1))
        deg_a, deg_b = len(rows_a) - 1, len(rows_b) - 1
        if deg_b == 0:
            break
    h = (rows_b[-1] ** deg_a).exact_div(h ** (deg_a - 1))
    return h.scale(sign)


def sylvester_matrix(a: UniPoly | BiPoly, b: UniPoly | BiPoly) -> list[list[UniPoly]]:
    """Sylvester matrix of a and b viewed as polynomials in X over Q[C]"""
    rows_a = list(reversed(_x_rows(_as_bipoly(a))))
    rows_b = list(reversed(_x_rows(_as_bipoly(b))))
    deg_a, deg_b = len(rows_a) - 1, len(rows_b) - 1
    size = deg_a + deg_b
    zero = UniPoly((), C_VAR)
    matrix = []
    for shift in range(deg_b):
        matrix.append([zero] * shift + rows_a + [zero] * (size - shift - deg_a - 1))
    for shift in range(deg_a):
        matrix.append([zero] * shift + rows_b + [zero] * (size - shift - deg_b - 1))
    return matrix


def bareiss_determinant(matrix: list[list[UniPoly]]) -> UniPoly:
    """Fraction-free determinant over Q[C]"""
    size = len(matrix)
    if size == 0:
        return UniPoly.constant(1, C_VAR)
    work = [list(row) for row in matrix]
    sign = 1
    previous = UniPoly.constant(1, C_VAR)
    for k in range(size - 1):
        if work[k][k].is_zero():
            pivot = next((i for i in range(k + 1, size) if not work[i][k].is_zero()), None)
            if pivot is None:
                return UniPoly((), C_VAR)
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (work[k][k] * work[i][j] - work[i][k] * work[k][j]).exact_div(previous)
        previous = work[k][k]
    return work[-1][-1].scale(sign)


def sylvester_resultant(a: UniPoly | BiPoly, b: UniPoly | BiPoly) -> UniPoly:
    """Res_X(a, b) as the determinant of the Sylvester matrix"""
    left, right = _as_bipoly(a), _as_bipoly(b)
    if left.is_zero() or right.is_zero():
        raise ZeroOperand("resultant of a zero polynomial")
    return bareiss_determinant(sylvester_matrix(left, right))
