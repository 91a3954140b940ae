"""
Portraits Module

Components:
- Orbits: exact iteration, portraits, multipliers
- Loci: specializations P(C), degenerate loci S(C), psi specializations
- Realizability: decisions with coprimality certificates and verified witnesses
- Classification: closed-form prediction for sweeps
- Sweep: batch decisions over a grid
"""

from .classification import EXCEPTIONAL_CASES, expected_realizable
from .loci import (
    degenerate_factors,
    degenerate_locus,
    has_multiple_root,
    psi_specialization,
    specialize,
)
from .orbits import (
    NOT_PREPERIODIC,
    OrbitMarker,
    OrbitReport,
    multiplier,
    orbit_portrait,
    parameter_box,
)
from .realizability import (
    Certificate,
    CertificateFailure,
    NotSquarefree,
    RealizabilityResult,
    Witness,
    certificate_check,
    realizes,
)
from .sweep import ACCEPTANCE_POINTS, SweepTask, acceptance_grid, run_sweep, run_task

__all__ = [
    "ACCEPTANCE_POINTS",
    "EXCEPTIONAL_CASES",
    "NOT_PREPERIODIC",
    "Certificate",
    "CertificateFailure",
    "NotSquarefree",
    "OrbitMarker",
    "OrbitReport",
    "RealizabilityResult",
    "SweepTask",
    "Witness",
    "acceptance_grid",
    "certificate_check",
    "degenerate_factors",
    "degenerate_locus",
    "expected_realizable",
    "has_multiple_root",
    "multiplier",
    "orbit_portrait",
    "parameter_box",
    "psi_specialization",
    "realizes",
    "run_sweep",
    "run_task",
    "specialize",
]
