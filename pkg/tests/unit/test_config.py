"""
Unit Tests for Settings and Logging

Tests:
- Defaults and environment overrides
- Invalid values
- Cached settings
- Log routing to stderr
"""

import json

import pytest
import structlog

from core.utils import Settings, configure_logging, get_settings


@pytest.mark.unit
class TestSettings:
    """Tests for DYNPORTRAITS_* settings"""

    def test_defaults(self):
        """Test defaults with no environment overrides"""
        settings = Settings.from_env()
        assert settings.log_level == "WARNING"
        assert settings.log_format == "console"
        assert settings.orbit_bound == 64
        assert settings.sweep_workers == 1
        assert settings.witness_limit == 16

    def test_environment_overrides(self, monkeypatch):
        """Test every setting can be overridden"""
        monkeypatch.setenv("DYNPORTRAITS_LOG_LEVEL", "debug")
        monkeypatch.setenv("DYNPORTRAITS_LOG_FORMAT", "JSON")
        monkeypatch.setenv("DYNPORTRAITS_ORBIT_BOUND", "128")
        monkeypatch.setenv("DYNPORTRAITS_SWEEP_WORKERS", "4")
        monkeypatch.setenv("DYNPORTRAITS_WITNESS_LIMIT", "0")

        settings = Settings.from_env()
        assert settings.log_level == "DEBUG"
        assert settings.log_format == "json"
        assert settings.orbit_bound == 128
        assert settings.sweep_workers == 4
        assert settings.witness_limit == 0

    def test_blank_value_uses_default(self, monkeypatch):
        """Test an empty variable falls back to the default"""
        monkeypatch.setenv("DYNPORTRAITS_ORBIT_BOUND", "  ")
        assert Settings.from_env().orbit_bound == 64

    @pytest.mark.parametrize(
        "name, value",
        [
            ("DYNPORTRAITS_ORBIT_BOUND", "0"),
            ("DYNPORTRAITS_ORBIT_BOUND", "many"),
            ("DYNPORTRAITS_SWEEP_WORKERS", "0"),
            ("DYNPORTRAITS_WITNESS_LIMIT", "-1"),
            ("DYNPORTRAITS_LOG_FORMAT", "xml"),
        ],
    )
    def test_invalid_values(self, monkeypatch, name, value):
        """Test invalid values raise ValueError naming the variable"""
        monkeypatch.setenv(name, value)
        with pytest.raises(ValueError, match=name):
            Settings.from_env()

    def test_get_settings_is_cached(self, monkeypatch):
        """Test get_settings reads the environment once until cleared"""
        first = get_settings()
        monkeypatch.setenv("DYNPORTRAITS_ORBIT_BOUND", "7")
        assert get_settings() is first

        get_settings.cache_clear()
        assert get_settings().orbit_bound == 7


@pytest.mark.unit
class TestLogging:
    """Tests for configure_logging"""

    def test_json_logs_go_to_stderr(self, capsys):
        """Test JSON lines on stderr and nothing on stdout"""
        configure_logging("INFO", "json")
        try:
            structlog.get_logger().info("sample_event", answer=42)
            captured = capsys.readouterr()
        finally:
            configure_logging("WARNING", "console")

        assert captured.out == ""
        record = json.loads(captured.err.strip().splitlines()[-1])
        assert record["event"] == "sample_event"
        assert record["answer"] == 42
        assert record["level"] == "info"

    def test_level_filter(self, capsys):
        """Test events below the configured level are dropped"""
        configure_logging("WARNING", "console")
        structlog.get_logger().info("hidden_event")
        assert "hidden_event" not in capsys.readouterr().err

    def test_unknown_level(self):
        """Test an unknown level name raises"""
        with pytest.raises(ValueError):
            configure_logging("CHATTY")
