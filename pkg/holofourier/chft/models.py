"""Domain types for the continuous holographic transform."""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, field_validator

from holofourier.shared.arrays import ComplexArray, RealArray, as_complex_array
from holofourier.shared.exceptions import InvalidArgumentError


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Samples f(y_n) on the uniform grid y_n = y0 + n * dy, n = 0..N-1.

    Attributes:
        samples: Complex samples, N >= 2
        y0: Grid start
        dy: Grid step, > 0
    """

    samples: ComplexArray
    y0: float
    dy: float

    def __post_init__(self) -> None:
        samples = as_complex_array(self.samples, ndim=1, name="samples").copy()
        if samples.size < 2:
            raise InvalidArgumentError(f"A sampled function needs N >= 2 samples, got {samples.size}")
        if not (np.isfinite(self.dy) and self.dy > 0):
            raise InvalidArgumentError(f"Grid step must be positive and finite, got {self.dy}")
        if not np.isfinite(self.y0):
            raise InvalidArgumentError(f"Grid start must be finite, got {self.y0}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_function(
        cls,
        fn: Callable[[RealArray], npt.ArrayLike],
        start: float,
        stop: float,
        count: int,
    ) -> "SampledFunction":
        """Sample ``fn`` on ``count`` left endpoints of [start, stop).

        Raises:
            InvalidArgumentError: If stop <= start or count < 2
        """
        if not stop > start:
            raise InvalidArgumentError(f"Grid needs stop > start, got [{start}, {stop})")
        if count < 2:
            raise InvalidArgumentError(f"A sampled function needs N >= 2 samples, got {count}")
        dy = (stop - start) / count
        grid = start + dy * np.arange(count)
        return cls(samples=np.asarray(fn(grid), dtype=np.complex128), y0=start, dy=dy)

    @property
    def count(self) -> int:
        """Number of samples N."""
        return int(self.samples.size)

    @property
    def grid(self) -> RealArray:
        """Sample positions y_n."""
        return self.y0 + self.dy * np.arange(self.count)

    @property
    def extent(self) -> tuple[float, float]:
        """First and last sample positions."""
        return self.y0, self.y0 + self.dy * (self.count - 1)


class BoxFilter(BaseModel):
    """Ideal low-pass W(omega) = 1 on [-k, k], 0 elsewhere."""

    model_config = ConfigDict(frozen=True)

    cutoff: float = Field(..., description="Cutoff frequency k")

    @field_validator("cutoff")
    @classmethod
    def validate_cutoff(cls, v: float) -> float:
        """Validate k > 0."""
        if not (np.isfinite(v) and v > 0):
            raise InvalidArgumentError(f"Box filter cutoff must be positive, got {v}")
        return v


class RegularizationIndex(BaseModel):
    """Width parameter n of the Gaussian damping exp(-omega^2 / n^2)."""

    model_config = ConfigDict(frozen=True)

    n: float = Field(..., description="Regularization index")

    @field_validator("n")
    @classmethod
    def validate_n(cls, v: float) -> float:
        """Validate n > 0."""
        if not (np.isfinite(v) and v > 0):
            raise InvalidArgumentError(f"Regularization index must be positive, got {v}")
        return v
