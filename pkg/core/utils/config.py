"""
Runtime Configuration

Settings are read from DYNPORTRAITS_* environment variables, optionally
seeded from a .env file in the working directory.
"""

import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

ENV_PREFIX = "DYNPORTRAITS_"
LOG_FORMATS = ("console", "json")


def _env_int(name: str, default: int, minimum: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ValueError(f"{ENV_PREFIX}{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """Process-wide settings"""

    log_level: str = "WARNING"
    log_format: str = "console"
    orbit_bound: int = 64  # exploratory orbit searches
    sweep_workers: int = 1
    witness_limit: int = 16  # witnesses reported per result

    @classmethod
    def from_env(cls) -> "Settings":
        """Build from the current environment (re-reads on every call)"""
        load_dotenv()
        log_format = os.environ.get(ENV_PREFIX + "LOG_FORMAT", "console").lower()
        if log_format not in LOG_FORMATS:
            raise ValueError(f"{ENV_PREFIX}LOG_FORMAT must be one of {LOG_FORMATS}, got {log_format!r}")
        return cls(
            log_level=os.environ.get(ENV_PREFIX + "LOG_LEVEL", "WARNING").upper(),
            log_format=log_format,
            orbit_bound=_env_int("ORBIT_BOUND", 64, 1),
            sweep_workers=_env_int("SWEEP_WORKERS", 1, 1),
            witness_limit=_env_int("WITNESS_LIMIT", 16, 0),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
