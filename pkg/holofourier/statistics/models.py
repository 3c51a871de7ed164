"""Report models for ensemble experiments and quality metrics."""

import math
from typing import TypeAlias

from pydantic import BaseModel, ConfigDict, Field, model_validator

from holofourier.shared.arrays import RealArray
from holofourier.shared.exceptions import InvalidArgumentError

# Real weights phi(k) of a random-phase sum V = sum_k exp(j 2 pi theta_k) phi(k)
WeightVector: TypeAlias = RealArray


class MomentReport(BaseModel):
    """Predicted and empirical moments of |V|^2 over phase realizations.

    Attributes:
        expected_energy: Predicted E|V|^2
        predicted_sigma: Predicted standard deviation of |V|^2
        empirical_mean_energy: Sample mean of |V|^2
        empirical_sigma: Sample standard deviation of |V|^2
        empirical_mean_re: Real part of the sample mean of V
        empirical_mean_im: Imaginary part of the sample mean of V
        trials: Number of phase realizations
        seeds: Per-trial seeds (base_seed + trial index)
    """

    model_config = ConfigDict(frozen=True)

    expected_energy: float
    predicted_sigma: float
    empirical_mean_energy: float
    empirical_sigma: float
    empirical_mean_re: float = 0.0
    empirical_mean_im: float = 0.0
    trials: int
    seeds: list[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_fields(self) -> "MomentReport":
        """Validate trial count, seed list and finiteness."""
        if self.trials < 1:
            raise InvalidArgumentError(f"Trials must be >= 1, got {self.trials}")
        if len(self.seeds) != self.trials:
            raise InvalidArgumentError(
                f"Expected {self.trials} seeds, got {len(self.seeds)}"
            )
        empirical = (
            self.empirical_mean_energy,
            self.empirical_sigma,
            self.empirical_mean_re,
            self.empirical_mean_im,
        )
        if not all(math.isfinite(v) for v in empirical):
            raise InvalidArgumentError("Empirical moments must be finite")
        return self

    @property
    def empirical_mean(self) -> complex:
        """Sample mean of V."""
        return complex(self.empirical_mean_re, self.empirical_mean_im)

    @property
    def standard_error(self) -> float:
        """Standard error of the empirical mean energy."""
        return self.empirical_sigma / math.sqrt(self.trials)

    def agrees(self, sigmas: float = 3.0) -> bool:
        """Whether the empirical mean lies within ``sigmas`` standard errors of the prediction."""
        return abs(self.empirical_mean_energy - self.expected_energy) <= sigmas * self.standard_error


class QualityReport(BaseModel):
    """Amplitude error of a recovery against its reference.

    ``psnr_db`` is ``inf`` for identical inputs and serializes to JSON as
    the string ``"Infinity"``.
    """

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="strings")

    rmse: float = Field(..., ge=0.0)
    psnr_db: float
    peak: float = Field(..., gt=0.0)


class PositionReport(BaseModel):
    """Retained energy fraction per window start, holographic vs plain crops.

    Attributes:
        length: Window length L
        size: Signal length M
        starts: Window starts a
        holographic_fraction: Mean over trials of retained energy / total energy
        plain_fraction: Same for the zero-phase (plain) transform
        trials: Number of phase realizations
    """

    model_config = ConfigDict(frozen=True)

    length: int
    size: int
    starts: list[int]
    holographic_fraction: list[float]
    plain_fraction: list[float]
    trials: int

    @staticmethod
    def _spread(values: list[float]) -> float:
        mean = sum(values) / len(values)
        return (max(values) - min(values)) / mean if mean > 0 else math.inf

    @property
    def holographic_spread(self) -> float:
        """(max - min) / mean of the holographic fractions."""
        return self._spread(self.holographic_fraction)

    @property
    def plain_spread(self) -> float:
        """(max - min) / mean of the plain-crop fractions."""
        return self._spread(self.plain_fraction)
