"""
Data Models for the Unicritical Family z^d + c

Features:
- MapSpec: the degree d of f_{d,c}(z) = z^d + c
- PortraitLabel: preperiodic portrait (M, N)
- CurveInfo: degree and component metadata of the curve Phi_{M,N}(X, C) = 0
"""

from dataclasses import dataclass
from typing import Any


class NotRootOfUnity(ValueError):
    """A supplied zeta does not satisfy zeta^d = 1"""

    def __init__(self, message: str, zeta: Any = None, d: int | None = None):
        super().__init__(message)
        self.zeta = zeta
        self.d = d


@dataclass(frozen=True)
class MapSpec:
    """The map f_{d,c}(z) = z^d + c"""

    d: int

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 2:
            raise ValueError(f"degree d must be an integer >= 2, got {self.d!r}")

    def to_dict(self) -> dict[str, int]:
        return {"d": self.d}


@dataclass(frozen=True)
class PortraitLabel:
    """Preperiod M >= 0 and eventual period N >= 1"""

    M: int
    N: int

    def __post_init__(self):
        if isinstance(self.M, bool) or not isinstance(self.M, int) or self.M < 0:
            raise ValueError(f"preperiod M must be an integer >= 0, got {self.M!r}")
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"period N must be an integer >= 1, got {self.N!r}")

    def as_pair(self) -> list[int]:
        return [self.M, self.N]

    def __str__(self) -> str:
        return f"({self.M},{self.N})"


@dataclass(frozen=True)
class CurveInfo:
    """Metadata of the plane curve Phi_{M,N}(X, C) = 0"""

    label: PortraitLabel
    d: int
    degX: int
    degC: int
    component_count: int
    singular_locus_note: str

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary"""
        return {
            "M": self.label.M,
            "N": self.label.N,
            "d": self.d,
            "degX": self.degX,
            "degC": self.degC,
            "components": self.component_count,
            "singular_note": self.singular_locus_note,
        }
