"""
Text Rendering

Human-readable "key: value" output for every subcommand. JSON output goes
through the models in cli.schemas instead.
"""

from core.exactmath import parse_json, to_text

from .schemas import (
    CurveInfoPayload,
    OrbitPayload,
    PolynomialPayload,
    RealizabilityPayload,
    SweepPayload,
    VerifyPayload,
)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _portrait_text(portrait: list[int] | str) -> str:
    if isinstance(portrait, str):
        return portrait
    return f"({portrait[0]},{portrait[1]})"


def _poly_text(payload: PolynomialPayload) -> str:
    return to_text(parse_json(payload.model_dump(exclude_none=True)))


def format_realizability(payload: RealizabilityPayload) -> str:
    lines = [
        f"x: {payload.x}",
        f"portrait: ({payload.M},{payload.N})",
        f"d: {payload.d}",
        f"realizable: {_flag(payload.realizable)}",
        f"P: {_poly_text(payload.P)}",
        f"S: {_poly_text(payload.S)}",
        f"Pstar: {_poly_text(payload.Pstar)}",
        f"certificate: gcd(Pstar, S) = 1 is {_flag(payload.certificate.gcd_Pstar_S_is_one)}, "
        f"deg Pstar = {payload.certificate.deg_Pstar}",
    ]
    for witness in payload.witnesses:
        lines.append(
            f"witness: c = {witness.c}, orbit = [{', '.join(witness.orbit)}], "
            f"portrait = {_portrait_text(witness.portrait)}"
        )
    return "\n".join(lines)


def format_orbit(payload: OrbitPayload) -> str:
    return "\n".join(
        [
            f"portrait: {_portrait_text(payload.portrait)}",
            f"orbit: [{', '.join(payload.orbit)}]",
            f"bound: {payload.bound}",
        ]
    )


def format_curve_info(payload: CurveInfoPayload) -> str:
    return "\n".join(f"{key}: {value}" for key, value in payload.model_dump().items())


def format_verify(payload: VerifyPayload) -> str:
    lines = []
    for suite in payload.suites:
        status = "PASS" if suite.passed else "FAIL"
        lines.append(f"{suite.suite}: {status} ({suite.checked} checked, {suite.skipped} skipped)")
        if suite.skipped_cases:
            lines.append(f"  skipped: {'; '.join(suite.skipped_cases)}")
        if suite.first_failure:
            lines.append(f"  first failure: {suite.first_failure}")
    return "\n".join(lines)


def format_suite_list(descriptions: dict[str, str]) -> str:
    return "\n".join(f"{name}: {text}" for name, text in descriptions.items())


def format_sweep(payload: SweepPayload) -> str:
    lines = [
        f"x={e.x} M={e.M} N={e.N} d={e.d} realizable={_flag(e.realizable)} "
        f"matches_classification={_flag(e.matches_classification)}"
        for e in payload.entries
    ]
    lines.append(f"total: {payload.total}")
    lines.append(f"realizable: {payload.realizable}")
    lines.append(f"mismatches: {payload.mismatches}")
    return "\n".join(lines)

