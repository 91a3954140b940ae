"""
Pydantic Models for CLI Payloads

Output models fix the JSON field order so identical invocations print
byte-identical documents; GridEntry validates sweep grid files.
"""

from pydantic import BaseModel, Field, field_validator

from core.exactmath import parse_rational


class PolynomialPayload(BaseModel):
    vars: list[str]
    terms: list[list[int | str]]
    modulus: str | None = Field(None, description="Modulus in t for quotient-ring coefficients")


class WitnessPayload(BaseModel):
    c: str
    orbit: list[str]
    portrait: list[int]


class CertificatePayload(BaseModel):
    gcd_Pstar_S_is_one: bool
    deg_Pstar: int


class RealizabilityPayload(BaseModel):
    x: str
    M: int
    N: int
    d: int
    realizable: bool
    P: PolynomialPayload
    S: PolynomialPayload
    Pstar: PolynomialPayload
    witnesses: list[WitnessPayload]
    certificate: CertificatePayload


class SweepRecordPayload(RealizabilityPayload):
    matches_classification: bool


class SweepPayload(BaseModel):
    entries: list[SweepRecordPayload]
    total: int
    realizable: int
    mismatches: int


class OrbitPayload(BaseModel):
    orbit: list[str]
    portrait: list[int] | str
    bound: int


class CurveInfoPayload(BaseModel):
    M: int
    N: int
    d: int
    degX: int
    degC: int
    components: int
    singular_note: str


class SuitePayload(BaseModel):
    suite: str
    passed: bool
    checked: int
    skipped: int
    skipped_cases: list[str] = Field(default_factory=list)
    first_failure: str | None = None


class VerifyPayload(BaseModel):
    passed: bool
    suites: list[SuitePayload]


class GridEntry(BaseModel):
    """One sweep grid point: {"x": "p/q", "M": int, "N": int, "d": int}"""

    x: str = Field(..., description="Exact rational, p/q or integer")
    M: int = Field(..., ge=0, description="Preperiod")
    N: int = Field(..., ge=1, description="Eventual period")
    d: int = Field(..., ge=2, description="Degree of z^d + c")

    @field_validator("x")
    @classmethod
    def _exact_rational(cls, value: str) -> str:
        parse_rational(value)
        return value.strip()

