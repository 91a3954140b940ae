"""
Structured Logging Setup

Logs go to stderr so that command output on stdout stays byte-identical
between runs.
"""

import logging
import sys

import structlog


def _stderr_logger_factory(*args) -> structlog.PrintLogger:
    """Resolve sys.stderr per logger so redirected streams are honoured"""
    return structlog.PrintLogger(file=sys.stderr)


def configure_logging(level: str = "WARNING", fmt: str = "console") -> None:
    """Configure structlog with a level filter and a console or JSON renderer"""
    processors = [
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
    ]

    if fmt == "json":
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    numeric_level = logging.getLevelName(level.upper())
    if not isinstance(numeric_level, int):
        raise ValueError(f"unknown log level {level!r}")

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        context_class=dict,
        logger_factory=_stderr_logger_factory,
        cache_logger_on_first_use=False,
    )
