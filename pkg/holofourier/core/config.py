"""Configuration management using Pydantic Settings."""

from typing import ClassVar

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from holofourier.shared.exceptions import ConfigError

# Singleton instance
_settings: "Settings | None" = None


class Settings(BaseSettings):
    """Library and CLI defaults loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    log_level: str = "INFO"

    # Randomness
    default_seed: int = 0

    # Numerics
    oracle_max_samples: int = 4096
    stats_workers: int = 1
    # Knot spacing of the smooth random phase used by the continuous transform
    chft_phase_correlation: float = 0.5

    # Reports
    report_indent: int = 2

    VALID_LOG_LEVELS: ClassVar[set[str]] = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is one of the allowed values."""
        v_upper = v.upper()
        if v_upper not in cls.VALID_LOG_LEVELS:
            raise ConfigError(
                f"Invalid log level: {v}. Must be one of {', '.join(sorted(cls.VALID_LOG_LEVELS))}"
            )
        return v_upper

    @field_validator("default_seed")
    @classmethod
    def validate_default_seed(cls, v: int) -> int:
        """Validate the default seed fits in 64 unsigned bits."""
        if not 0 <= v < 2**64:
            raise ConfigError(f"Default seed must be in [0, 2**64), got {v}")
        return v

    @field_validator("oracle_max_samples")
    @classmethod
    def validate_oracle_cap(cls, v: int) -> int:
        """Validate the brute-force oracle cap (1-65536 samples)."""
        if not 1 <= v <= 65536:
            raise ConfigError(f"Oracle cap must be between 1 and 65536 samples, got {v}")
        return v

    @field_validator("stats_workers")
    @classmethod
    def validate_stats_workers(cls, v: int) -> int:
        """Validate the statistics worker count (1-64)."""
        if not 1 <= v <= 64:
            raise ConfigError(f"Stats workers must be between 1 and 64, got {v}")
        return v

    @field_validator("chft_phase_correlation")
    @classmethod
    def validate_phase_correlation(cls, v: float) -> float:
        """Validate the smooth-phase knot spacing is positive."""
        if not v > 0:
            raise ConfigError(f"CHFT phase correlation length must be positive, got {v}")
        return v

    @field_validator("report_indent")
    @classmethod
    def validate_report_indent(cls, v: int) -> int:
        """Validate JSON report indentation (0-8)."""
        if not 0 <= v <= 8:
            raise ConfigError(f"Report indent must be between 0 and 8, got {v}")
        return v


def get_settings() -> Settings:
    """Get or create the global Settings instance (cached singleton)."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings
