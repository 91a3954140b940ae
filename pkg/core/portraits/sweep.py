"""
Batch Realizability Sweeps

Grid entries travel to worker processes as plain strings and integers and
are rebuilt there; results come back as dictionaries in input order.
"""

from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

import structlog

from core.dynatomic import MapSpec, PortraitLabel
from core.exactmath import parse_rational
from core.utils import configure_logging, get_settings

from .classification import expected_realizable
from .realizability import realizes

logger = structlog.get_logger()

ACCEPTANCE_POINTS = ("0", "1", "-1", "1/2", "-1/2", "2", "-2", "1/3", "-1/3", "3/2", "5/2")
ACCEPTANCE_PREPERIODS = range(0, 4)
ACCEPTANCE_PERIODS = range(1, 5)
ACCEPTANCE_DEGREES = (2, 3)


@dataclass(frozen=True)
class SweepTask:
    """One grid point: x as exact rational text, portrait (M, N), degree d"""

    x: str
    M: int
    N: int
    d: int


def acceptance_grid() -> list[SweepTask]:
    """The full classification grid: every point, M <= 3, N <= 4, d in {2, 3}"""
    return [
        SweepTask(x=x, M=M, N=N, d=d)
        for d in ACCEPTANCE_DEGREES
        for x in ACCEPTANCE_POINTS
        for M in ACCEPTANCE_PREPERIODS
        for N in ACCEPTANCE_PERIODS
    ]


def run_task(task: SweepTask, witness_limit: int | None = None) -> dict[str, Any]:
    """Decide one grid point and annotate it with the closed-form prediction"""
    x = parse_rational(task.x)
    label = PortraitLabel(task.M, task.N)
    spec = MapSpec(task.d)
    result = realizes(x, label, spec, witness_limit=witness_limit)
    record = result.to_dict()
    record["matches_classification"] = result.realizable == expected_realizable(x, label, spec)
    return record


def _run_task_star(args: tuple[SweepTask, int | None]) -> dict[str, Any]:
    return run_task(*args)


def _init_worker(level: str, fmt: str) -> None:
    # workers log to stderr with the parent's level and format
    configure_logging(level, fmt)


def run_sweep(
    tasks: Iterable[SweepTask],
    workers: int = 1,
    witness_limit: int | None = None,
) -> list[dict[str, Any]]:
    """
    Run realizes over every task

    With workers > 1 the tasks are spread over a process pool; the output
    order always matches the input order.
    """
    tasks = list(tasks)
    settings = get_settings()
    if witness_limit is None:
        witness_limit = settings.witness_limit
    jobs = [(task, witness_limit) for task in tasks]
    logger.info("sweep_started", tasks=len(tasks), workers=workers)
    if workers <= 1 or len(tasks) <= 1:
        records = [_run_task_star(job) for job in jobs]
    else:
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_worker,
            initargs=(settings.log_level, settings.log_format),
        ) as pool:
            records = list(pool.map(_run_task_star, jobs))
    mismatches = sum(1 for r in records if not r["matches_classification"])
    logger.info("sweep_finished", tasks=len(records), mismatches=mismatches)
    return records
