"""
dynportraits Command Line

Subcommands construct (generalized) dynatomic polynomials, decide
realizability with certificates, iterate orbits, run the identity suites
and sweep grids of realizability queries.

Exit codes:
    0  success (including a completed query that answers "not realizable")
    1  usage error: bad arguments, malformed rationals, invalid grid files
    2  internal failure: a certificate could not be established or an
       identity suite found a violation
"""

import json
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated

import click
import structlog
import typer
from pydantic import TypeAdapter

from core.dynatomic import (
    MapSpec,
    PortraitLabel,
    bifurcation_resultant,
    curve_info,
    dynatomic_poly,
    gen_dynatomic_poly,
    iterate_poly,
)
from core.exactmath import (
    ExactMathError,
    QuotientRing,
    RationalParseError,
    parse_unipoly,
    parse_value,
    to_json_data,
    to_text,
)
from core.portraits import CertificateFailure, SweepTask, orbit_portrait, realizes, run_sweep
from core.utils import configure_logging, get_settings
from core.verification import SuiteRegistry

from .formatting import (
    format_curve_info,
    format_orbit,
    format_realizability,
    format_suite_list,
    format_sweep,
    format_verify,
)
from .schemas import (
    CurveInfoPayload,
    GridEntry,
    OrbitPayload,
    PolynomialPayload,
    RealizabilityPayload,
    SuitePayload,
    SweepPayload,
    SweepRecordPayload,
    VerifyPayload,
)

logger = structlog.get_logger()

# Negative rationals such as -1/2 are positionals, not options.
COMMAND_SETTINGS = {"ignore_unknown_options": True}

app = typer.Typer(
    name="dynportraits",
    help="Exact dynatomic polynomials and preperiodic portrait realizability for z^d + c.",
    add_completion=False,
    no_args_is_help=True,
)


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


class UsageFailure(click.UsageError):
    """Usage errors exit with 1 whichever way the app is invoked"""

    exit_code = 1


FormatOption = Annotated[OutputFormat, typer.Option("--format", help="Output format", case_sensitive=False)]
ModulusOption = Annotated[
    str | None,
    typer.Option("--modulus", help="Monic modulus in t; x and c are then read as polynomials in t"),
]
Degree = Annotated[int, typer.Argument(metavar="d", help="Degree of z^d + c, at least 2")]
Preperiod = Annotated[int, typer.Argument(metavar="M", help="Preperiod, at least 0")]
Period = Annotated[int, typer.Argument(metavar="N", help="Eventual period, at least 1")]


@contextmanager
def _inputs() -> Iterator[None]:
    """Parameter and literal checks; failures are usage errors"""
    try:
        yield
    except RationalParseError as exc:
        raise UsageFailure(f"{exc} (offending token: {exc.token!r})") from exc
    except ValueError as exc:
        raise UsageFailure(str(exc)) from exc


@contextmanager
def _computation() -> Iterator[None]:
    """Arithmetic that must succeed; failures are internal errors"""
    try:
        yield
    except (CertificateFailure, ExactMathError) as exc:
        logger.error("computation_failed", error=str(exc), kind=type(exc).__name__)
        typer.echo(f"internal error: {exc}", err=True)
        raise typer.Exit(code=2) from exc


def _emit(fmt: OutputFormat, payload, text: str) -> None:
    if fmt is OutputFormat.json:
        typer.echo(payload.model_dump_json(exclude_none=True))
    else:
        typer.echo(text)


def _emit_poly(fmt: OutputFormat, poly) -> None:
    _emit(fmt, PolynomialPayload.model_validate(to_json_data(poly)), to_text(poly))


def _ring(modulus: str | None) -> QuotientRing | None:
    if modulus is None:
        return None
    return QuotientRing(parse_unipoly(modulus, "t"), irreducible=True)


@app.callback()
def _configure() -> None:
    with _inputs():
        settings = get_settings()
        configure_logging(settings.log_level, settings.log_format)


@app.command("dynatomic", context_settings=COMMAND_SETTINGS)
def dynatomic_command(degree: Degree, period: Period, fmt: FormatOption = OutputFormat.text) -> None:
    """Print the dynatomic polynomial Phi_N(X, C)"""
    with _inputs():
        spec, label = MapSpec(degree), PortraitLabel(0, period)
    with _computation():
        poly = dynatomic_poly(spec, label.N)
    _emit_poly(fmt, poly)


@app.command("gen-dynatomic", context_settings=COMMAND_SETTINGS)
def gen_dynatomic_command(
    degree: Degree,
    preperiod: Preperiod,
    period: Period,
    fmt: FormatOption = OutputFormat.text,
) -> None:
    """Print the generalized dynatomic polynomial Phi_{M,N}(X, C)"""
    with _inputs():
        spec, label = MapSpec(degree), PortraitLabel(preperiod, period)
    with _computation():
        poly = gen_dynatomic_poly(spec, label)
    _emit_poly(fmt, poly)


@app.command("iterate", context_settings=COMMAND_SETTINGS)
def iterate_command(
    degree: Degree,
    steps: Annotated[int, typer.Argument(metavar="n", help="Number of iterations")],
    fmt: FormatOption = OutputFormat.text,
) -> None:
    """Print the n-th iterate f^n(X) as a polynomial in X and C"""
    with _inputs():
        spec = MapSpec(degree)
        if steps < 0:
            raise ValueError(f"iterate count must be >= 0, got {steps}")
    with _computation():
        poly = iterate_poly(spec, steps)
    _emit_poly(fmt, poly)


@app.command("resultant", context_settings=COMMAND_SETTINGS)
def resultant_command(
    degree: Degree,
    period: Period,
    other: Annotated[int, typer.Argument(metavar="n", help="Second period")],
    fmt: FormatOption = OutputFormat.text,
) -> None:
    """Print Res_X(Phi_N, Phi_n), a polynomial in C"""
    with _inputs():
        spec = MapSpec(degree)
        for value in (period, other):
            PortraitLabel(0, value)
    with _computation():
        poly = bifurcation_resultant(spec, period, other)
    _emit_poly(fmt, poly)


@app.command("realizes", context_settings=COMMAND_SETTINGS)
def realizes_command(
    x: Annotated[str, typer.Argument(help="Exact rational p/q, or a polynomial in t with --modulus")],
    preperiod: Preperiod,
    period: Period,
    degree: Degree,
    fmt: FormatOption = OutputFormat.text,
    witness_limit: Annotated[
        int | None, typer.Option("--witness-limit", min=0, help="Maximum witnesses reported")
    ] = None,
    modulus: ModulusOption = None,
) -> None:
    """Decide whether x has exact portrait (M, N) for some parameter c"""
    with _inputs():
        spec, label = MapSpec(degree), PortraitLabel(preperiod, period)
        point = parse_value(x, _ring(modulus))
    with _computation():
        result = realizes(point, label, spec, witness_limit=witness_limit)
    payload = RealizabilityPayload.model_validate(result.to_dict())
    _emit(fmt, payload, format_realizability(payload))


@app.command("portrait", context_settings=COMMAND_SETTINGS)
def portrait_command(
    x: Annotated[str, typer.Argument(help="Starting point")],
    c: Annotated[str, typer.Argument(help="Parameter c")],
    degree: Degree,
    fmt: FormatOption = OutputFormat.text,
    bound: Annotated[int | None, typer.Option("--bound", min=1, help="Maximum iterations")] = None,
    modulus: ModulusOption = None,
) -> None:
    """Iterate z^d + c from x and print the orbit and its portrait"""
    with _inputs():
        spec = MapSpec(degree)
        ring = _ring(modulus)
        point, parameter = parse_value(x, ring), parse_value(c, ring)
        if bound is None:
            bound = get_settings().orbit_bound
    with _computation():
        report = orbit_portrait(point, parameter, spec, bound)
    payload = OrbitPayload.model_validate(report.to_dict())
    _emit(fmt, payload, format_orbit(payload))


@app.command("curve-info", context_settings=COMMAND_SETTINGS)
def curve_info_command(
    degree: Degree,
    preperiod: Preperiod,
    period: Period,
    fmt: FormatOption = OutputFormat.text,
) -> None:
    """Print degrees and singularity data of the curve Phi_{M,N}(X, C) = 0"""
    with _inputs():
        spec, label = MapSpec(degree), PortraitLabel(preperiod, period)
    with _computation():
        info = curve_info(spec, label)
    payload = CurveInfoPayload.model_validate(info.to_dict())
    _emit(fmt, payload, format_curve_info(payload))


@app.command("verify")
def verify_command(
    suite: Annotated[
        list[str] | None, typer.Option("--suite", help="Suite to run; repeat for several (default: all)")
    ] = None,
    list_only: Annotated[bool, typer.Option("--list", help="List the available suites and exit")] = False,
    fmt: FormatOption = OutputFormat.text,
) -> None:
    """Run the identity suites and print pass/fail per suite"""
    if list_only:
        descriptions = SuiteRegistry.describe()
        if fmt is OutputFormat.json:
            typer.echo(json.dumps(descriptions))
        else:
            typer.echo(format_suite_list(descriptions))
        return

    names = suite or SuiteRegistry.list_suites()
    unknown = [name for name in names if SuiteRegistry.get(name) is None]
    if unknown:
        known = ", ".join(SuiteRegistry.list_suites())
        raise UsageFailure(f"unknown suite(s) {', '.join(unknown)}; available: {known}")

    with _computation():
        results = [SuiteRegistry.get(name).run() for name in names]
    payload = VerifyPayload(
        passed=all(r.passed for r in results),
        suites=[SuitePayload.model_validate(r.to_dict()) for r in results],
    )
    _emit(fmt, payload, format_verify(payload))
    if not payload.passed:
        first = next(r for r in results if not r.passed)
        typer.echo(f"identity violated in {first.name}: {first.first_failure}", err=True)
        raise typer.Exit(code=2)


@app.command("sweep")
def sweep_command(
    grid: Annotated[Path, typer.Option("--grid", help='JSON array of {"x", "M", "N", "d"} entries')],
    workers: Annotated[int | None, typer.Option("--workers", min=1, help="Worker processes")] = None,
    witness_limit: Annotated[
        int | None, typer.Option("--witness-limit", min=0, help="Maximum witnesses reported per entry")
    ] = None,
    fmt: FormatOption = OutputFormat.text,
) -> None:
    """Run realizes over every entry of a grid file"""
    with _inputs():
        try:
            data = json.loads(grid.read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageFailure(f"cannot read grid file {grid}: {exc}") from exc
        entries = TypeAdapter(list[GridEntry]).validate_python(data)
        if workers is None:
            workers = get_settings().sweep_workers
    tasks = [SweepTask(x=e.x, M=e.M, N=e.N, d=e.d) for e in entries]
    with _computation():
        records = run_sweep(tasks, workers=workers, witness_limit=witness_limit)
    rows = [SweepRecordPayload.model_validate(r) for r in records]
    payload = SweepPayload(
        entries=rows,
        total=len(rows),
        realizable=sum(1 for r in rows if r.realizable),
        mismatches=sum(1 for r in rows if not r.matches_classification),
    )
    _emit(fmt, payload, format_sweep(payload))


def main(argv: list[str] | None = None) -> int:
    """Run the command line and return its exit code"""
    command = typer.main.get_command(app)
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        result = command.main(args=args, prog_name="dynportraits", standalone_mode=False)
    except click.ClickException as exc:
        typer.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.Abort:
        return 1
    return result if isinstance(result, int) else 0


def run() -> None:
    """Console entry point"""
    sys.exit(main())


if __name__ == "__main__":
    run()
