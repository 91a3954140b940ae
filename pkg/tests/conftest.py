"""
Shared Test Fixtures and Configuration

Provides common fixtures for all test levels:
- Unit tests
- Integration tests
- Contract tests
"""

import json
from pathlib import Path

import pytest

from core.dynatomic import MapSpec
from core.exactmath import QuotientRing, parse_unipoly
from core.utils import configure_logging, get_settings

# ============================================================================
# Environment
# ============================================================================

@pytest.fixture(autouse=True, scope="session")
def quiet_logging():
    """Warnings and above only, rendered to stderr"""
    configure_logging("WARNING", "console")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test reads the environment afresh"""
    for name in ("LOG_LEVEL", "LOG_FORMAT", "ORBIT_BOUND", "SWEEP_WORKERS", "WITNESS_LIMIT"):
        monkeypatch.delenv(f"DYNPORTRAITS_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# ============================================================================
# Path Fixtures
# ============================================================================

@pytest.fixture
def project_root() -> Path:
    """Get project root directory"""
    return Path(__file__).parent.parent


@pytest.fixture
def grid_file(tmp_path):
    """Write a sweep grid and return its path"""
    def _write(entries) -> Path:
        path = tmp_path / "grid.json"
        path.write_text(json.dumps(entries), encoding="utf-8")
        return path
    return _write


# ============================================================================
# Maps and Rings
# ============================================================================

@pytest.fixture
def quadratic() -> MapSpec:
    """z^2 + c"""
    return MapSpec(2)


@pytest.fixture
def cubic() -> MapSpec:
    """z^3 + c"""
    return MapSpec(3)


@pytest.fixture
def gaussian_ring() -> QuotientRing:
    """Q(i) as Q[t]/(t^2 + 1)"""
    return QuotientRing(parse_unipoly("t^2 + 1", "t"), irreducible=True)


# ============================================================================
# CLI
# ============================================================================

@pytest.fixture
def run_cli(capsys):
    """Run the command line in-process; returns (exit_code, stdout, stderr)"""
    from cli.main import main

    def _run(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run
