"""
Realizability of a Portrait at a Point

Features:
- realizes: decide whether some parameter c gives x the exact portrait (M, N)
  under z^d + c, with a gcd-coprimality certificate
- Rational witnesses, each re-verified by exact iteration
- certificate_check: certify that every root of a squarefree h works
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import structlog

from core.dynatomic import MapSpec, PortraitLabel
from core.exactmath import (
    IncompatibleRings,
    NotDivisible,
    UniPoly,
    coprime,
    format_value,
    is_squarefree,
    rational_roots_with_denominator,
    remove_common_factors,
    to_json_data,
    witness_order_key,
)
from core.exactmath.polynomial import coefficient_ring
from core.utils.config import get_settings

from .loci import degenerate_factors, specialize
from .orbits import OrbitReport, PointValue, orbit_portrait, parameter_box

logger = structlog.get_logger()


class CertificateFailure(Exception):
    """A decision could not be certified; indicates an arithmetic bug"""

    def __init__(self, reason: str, context: dict[str, Any] | None = None):
        super().__init__(reason)
        self.reason = reason
        self.context = context or {}


class NotSquarefree(ValueError):
    """certificate_check needs a squarefree polynomial"""

    def __init__(self, message: str, polynomial: UniPoly):
        super().__init__(message)
        self.polynomial = polynomial


@dataclass
class Witness:
    """A rational parameter c realizing the portrait, with its orbit"""

    c: Fraction
    report: OrbitReport

    def to_dict(self) -> dict[str, Any]:
        data = self.report.to_dict()
        return {"c": format_value(self.c), "orbit": data["orbit"], "portrait": data["portrait"]}


@dataclass
class Certificate:
    """gcd(Pstar, S) = 1 together with deg Pstar >= 1 proves realizability"""

    gcd_Pstar_S_is_one: bool
    deg_Pstar: int

    def to_dict(self) -> dict[str, Any]:
        return {"gcd_Pstar_S_is_one": self.gcd_Pstar_S_is_one, "deg_Pstar": self.deg_Pstar}


@dataclass
class RealizabilityResult:
    """Decision for (x, M, N, d) with the polynomials that justify it"""

    x: PointValue
    label: PortraitLabel
    spec: MapSpec
    realizable: bool
    P: UniPoly
    S: UniPoly
    Pstar: UniPoly
    certificate: Certificate
    rational_witnesses: list[Witness] = field(default_factory=list)
    witnesses_found: int = 0

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary"""
        return {
            "x": format_value(self.x),
            "M": self.label.M,
            "N": self.label.N,
            "d": self.spec.d,
            "realizable": self.realizable,
            "P": to_json_data(self.P),
            "S": to_json_data(self.S),
            "Pstar": to_json_data(self.Pstar),
            "witnesses": [w.to_dict() for w in self.rational_witnesses],
            "certificate": self.certificate.to_dict(),
        }


def _degree(poly: UniPoly) -> int:
    return 0 if poly.is_constant() else int(poly.degree)


def _rational_candidates(x: PointValue, spec: MapSpec, pstar: UniPoly) -> list[Fraction]:
    """Rational roots of Pstar inside the box the escape tests leave open"""
    if coefficient_ring(x) is not None:
        return []
    try:
        rational = pstar.to_rational()
    except IncompatibleRings:
        return []
    denominator, bound = parameter_box(x, spec.d)
    roots = rational_roots_with_denominator(rational, denominator, bound)
    return sorted(roots, key=witness_order_key)


def _verify_witnesses(
    x: PointValue, label: PortraitLabel, spec: MapSpec, roots: list[Fraction]
) -> list[Witness]:
    witnesses = []
    for c in roots:
        report = orbit_portrait(x, c, spec, label.M + label.N + 1)
        if report.portrait != label:
            context = {
                "x": format_value(x),
                "c": format_value(c),
                "expected": label.as_pair(),
                "found": report.to_dict()["portrait"],
            }
            logger.error("witness_mismatch", **context)
            raise CertificateFailure(f"witness c = {format_value(c)} does not give portrait {label}", context)
        witnesses.append(Witness(c=c, report=report))
    return witnesses


def realizes(
    x: PointValue,
    label: PortraitLabel,
    spec: MapSpec,
    witness_limit: int | None = None,
) -> RealizabilityResult:
    """
    Decide whether x has exact portrait (M, N) under z^d + c for some c

    P = Phi_{M,N}(x, C) and S = the degenerate locus. Every factor shared
    with S is divided out of P; x realizes (M, N) iff the remaining Pstar has
    positive degree. Rational roots of Pstar are reported as witnesses and
    each is checked by iterating the map exactly; with witness_limit = 0 the
    root search is skipped and witnesses_found stays 0.

    Raises:
        CertificateFailure: a witness fails its orbit check, or an exact
            division fails
    """
    if witness_limit is None:
        witness_limit = get_settings().witness_limit
    try:
        P = specialize(label, spec, x)
        factors = degenerate_factors(label, spec, x)
    except NotDivisible as exc:
        raise CertificateFailure("specialization is not an exact quotient", {"error": str(exc)}) from exc
    S = UniPoly.constant(1, "C")
    for factor in factors:
        S = S * factor

    if S.is_zero():
        # (x, M) = (0, 1): every root of P is a degenerate parameter
        Pstar = UniPoly.constant(1, "C")
        is_coprime = True
    else:
        Pstar = P
        rounds = 0
        try:
            for factor in factors:
                Pstar, removed = remove_common_factors(Pstar, factor)
                rounds += removed
        except NotDivisible as exc:
            raise CertificateFailure("gcd cofactor is not exact", {"error": str(exc)}) from exc
        Pstar = Pstar.monic()
        is_coprime = all(coprime(Pstar, factor) for factor in factors)
        logger.debug("degenerate_factors_removed", rounds=rounds, deg_P=_degree(P), deg_Pstar=_degree(Pstar))

    realizable = is_coprime and _degree(Pstar) >= 1
    witnesses: list[Witness] = []
    if realizable and witness_limit > 0:
        witnesses = _verify_witnesses(x, label, spec, _rational_candidates(x, spec, Pstar))

    result = RealizabilityResult(
        x=x,
        label=label,
        spec=spec,
        realizable=realizable,
        P=P,
        S=S,
        Pstar=Pstar,
        certificate=Certificate(gcd_Pstar_S_is_one=is_coprime, deg_Pstar=_degree(Pstar)),
        rational_witnesses=witnesses[:witness_limit],
        witnesses_found=len(witnesses),
    )
    logger.info(
        "realizability_decided",
        x=format_value(x),
        M=label.M,
        N=label.N,
        d=spec.d,
        realizable=realizable,
        witnesses=len(witnesses),
    )
    return result


def certificate_check(x: PointValue, label: PortraitLabel, spec: MapSpec, h: UniPoly) -> bool:
    """
    True iff every root c of h gives x the exact portrait (M, N)

    Checks h | Phi_{M,N}(x, C), gcd(h, f^{M-1}(x)) = 1 (when M >= 1) and
    gcd(h, Phi_n(f^M(x), C)) = 1 for every proper divisor n of N. No
    factorization of h is needed.

    Raises:
        ValueError: h is constant
        NotSquarefree: h has a repeated factor
    """
    if h.is_constant():
        raise ValueError("certificate polynomial must have degree >= 1")
    if not is_squarefree(h):
        raise NotSquarefree(f"certificate polynomial {h} is not squarefree", polynomial=h)
    h = h.monic()
    if not (specialize(label, spec, x) % h).is_zero():
        return False
    return all(coprime(h, factor) for factor in degenerate_factors(label, spec, x))
