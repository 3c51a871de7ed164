"""Tests for holofourier.core.config module."""

import pytest

from holofourier.core.config import Settings, get_settings
from holofourier.shared.exceptions import ConfigError


def test_settings_default_values() -> None:
    """Test that defaults apply with no environment."""
    settings = Settings(_env_file=None)  # type: ignore[call-arg]

    assert settings.log_level == "INFO"
    assert settings.default_seed == 0
    assert settings.oracle_max_samples == 4096
    assert settings.stats_workers == 1
    assert settings.chft_phase_correlation == 0.5
    assert settings.report_indent == 2


def test_settings_load_from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that settings load from environment variables, case-insensitively."""
    monkeypatch.setenv("DEFAULT_SEED", "42")
    monkeypatch.setenv("stats_workers", "4")
    monkeypatch.setenv("LOG_LEVEL", "debug")

    settings = Settings()

    assert settings.default_seed == 42
    assert settings.stats_workers == 4
    assert settings.log_level == "DEBUG"


def test_settings_log_level_validation_invalid(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that an invalid log level raises ConfigError."""
    monkeypatch.setenv("LOG_LEVEL", "INVALID")

    with pytest.raises(ConfigError, match="Invalid log level"):
        Settings()


@pytest.mark.parametrize(
    ("name", "value", "message"),
    [
        ("DEFAULT_SEED", "-1", "Default seed"),
        ("DEFAULT_SEED", str(2**64), "Default seed"),
        ("ORACLE_MAX_SAMPLES", "0", "Oracle cap"),
        ("ORACLE_MAX_SAMPLES", "65537", "Oracle cap"),
        ("STATS_WORKERS", "0", "Stats workers"),
        ("STATS_WORKERS", "65", "Stats workers"),
        ("CHFT_PHASE_CORRELATION", "0", "correlation length"),
        ("REPORT_INDENT", "9", "Report indent"),
    ],
)
def test_settings_range_validation(
    monkeypatch: pytest.MonkeyPatch, name: str, value: str, message: str
) -> None:
    """Test that out-of-range values raise ConfigError."""
    monkeypatch.setenv(name, value)

    with pytest.raises(ConfigError, match=message):
        Settings()


def test_get_settings_caching() -> None:
    """Test that get_settings() returns the cached instance."""
    settings1 = get_settings()
    settings2 = get_settings()

    assert settings1 is settings2
