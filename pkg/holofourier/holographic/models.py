"""Domain types for the discrete holographic transform."""

from dataclasses import dataclass
from enum import IntEnum
from math import prod

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator

from holofourier.shared.arrays import ComplexArray, RealArray, as_complex_array
from holofourier.shared.exceptions import InvalidArgumentError

# Generator id for phases drawn with numpy's default bit generator
DEFAULT_GENERATOR = "numpy-pcg64"
EMBEDDED_GENERATOR = "embedded"
ZERO_GENERATOR = "constant-zero"


class PhaseMode(IntEnum):
    """How a hologram carries its phase field (values match the file format)."""

    SEED = 0
    EMBEDDED = 1


@dataclass(frozen=True, eq=False)
class PhaseField:
    """Random phase samples P in [0, 1), one per source sample.

    Attributes:
        values: Phase samples, same shape as the source signal
        seed: Seed the values were drawn from, or None for embedded fields
        generator_id: Name of the deterministic generator
    """

    values: RealArray
    seed: int | None = None
    generator_id: str = EMBEDDED_GENERATOR

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64)
        if values.ndim not in (1, 2) or values.size == 0:
            raise InvalidArgumentError("Phase field must be a nonempty 1D or 2D array")
        if not np.all(np.isfinite(values)) or np.any(values < 0.0) or np.any(values >= 1.0):
            raise InvalidArgumentError("Phase values must lie in [0, 1)")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, shape: tuple[int, ...]) -> "PhaseField":
        """Phase field identically zero (a plain unitary transform)."""
        return cls(values=np.zeros(shape), seed=None, generator_id=ZERO_GENERATOR)

    @classmethod
    def from_values(cls, values: npt.ArrayLike) -> "PhaseField":
        """Wrap raw phase samples that did not come from a known generator."""
        return cls(values=np.asarray(values, dtype=np.float64))

    @property
    def shape(self) -> tuple[int, ...]:
        """Shape of the phase raster."""
        return tuple(self.values.shape)

    @property
    def factor(self) -> ComplexArray:
        """Unimodular encoding factor exp(j 2 pi P)."""
        return np.exp(2j * np.pi * self.values)

    @property
    def is_reproducible(self) -> bool:
        """Whether (seed, generator_id, shape) regenerates these values."""
        return self.seed is not None and self.generator_id == DEFAULT_GENERATOR


@dataclass(frozen=True, eq=False)
class Hologram:
    """Holographic representation H of a source signal.

    Attributes:
        data: Complex hologram samples, same shape as the source
        phase: Phase field used at encode time
        phase_mode: Whether files carry the seed or the raw phase raster
    """

    data: ComplexArray
    phase: PhaseField
    phase_mode: PhaseMode = PhaseMode.SEED

    def __post_init__(self) -> None:
        data = as_complex_array(self.data, name="hologram data").copy()
        if data.shape != self.phase.shape:
            raise InvalidArgumentError(
                f"Hologram shape {data.shape} does not match phase shape {self.phase.shape}"
            )
        if self.phase_mode is PhaseMode.SEED and not self.phase.is_reproducible:
            raise InvalidArgumentError("Seed mode requires a phase drawn from the default generator")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def source_shape(self) -> tuple[int, ...]:
        """Dimensions of the encoded source."""
        return tuple(self.data.shape)

    @property
    def ndim(self) -> int:
        """Dimensionality (1 or 2)."""
        return int(self.data.ndim)

    @property
    def size(self) -> int:
        """Total number of samples M."""
        return int(self.data.size)


class WindowSpec(BaseModel):
    """Contiguous crop of a hologram: an interval (1D) or rectangle (2D).

    Attributes:
        starts: Start index per axis (a, or a_row and a_col)
        lengths: Window length per axis (L, or L_rows and L_cols)
    """

    model_config = ConfigDict(frozen=True)

    starts: tuple[int, ...] = Field(..., description="Start index per axis")
    lengths: tuple[int, ...] = Field(..., description="Window length per axis")

    @model_validator(mode="after")
    def validate_axes(self) -> "WindowSpec":
        """Validate axis count, starts >= 0 and lengths >= 1."""
        if len(self.starts) != len(self.lengths) or len(self.starts) not in (1, 2):
            raise InvalidArgumentError("Window must have one start and one length per axis (1 or 2 axes)")
        if any(a < 0 for a in self.starts):
            raise InvalidArgumentError(f"Window starts must be >= 0, got {self.starts}")
        if any(n < 1 for n in self.lengths):
            raise InvalidArgumentError(f"Window lengths must be >= 1, got {self.lengths}")
        return self

    @classmethod
    def span(cls, start: int, length: int) -> "WindowSpec":
        """1D window [start, start + length - 1]."""
        return cls(starts=(start,), lengths=(length,))

    @classmethod
    def rect(cls, row_start: int, rows: int, col_start: int, cols: int) -> "WindowSpec":
        """2D axis-aligned rectangle."""
        return cls(starts=(row_start, col_start), lengths=(rows, cols))

    @classmethod
    def full(cls, shape: tuple[int, ...]) -> "WindowSpec":
        """Window covering the whole index set."""
        return cls(starts=(0,) * len(shape), lengths=tuple(shape))

    @property
    def ndim(self) -> int:
        """Number of axes."""
        return len(self.starts)

    @property
    def size(self) -> int:
        """Number of samples inside the window."""
        return prod(self.lengths)

    @property
    def slices(self) -> tuple[slice, ...]:
        """Index expression selecting the window."""
        return tuple(slice(a, a + n) for a, n in zip(self.starts, self.lengths, strict=True))

    def check_fits(self, shape: tuple[int, ...]) -> None:
        """Validate a + L <= M on every axis.

        Raises:
            InvalidArgumentError: If the window does not fit inside ``shape``
        """
        if len(shape) != self.ndim:
            raise InvalidArgumentError(f"{self.ndim}D window cannot crop a {len(shape)}D array")
        for a, n, m in zip(self.starts, self.lengths, shape, strict=True):
            if a + n > m:
                raise InvalidArgumentError(f"Window [{a}, {a + n - 1}] exceeds axis length {m}")

    def mask(self, shape: tuple[int, ...]) -> npt.NDArray[np.bool_]:
        """Indicator W of the window over an array of ``shape``."""
        self.check_fits(shape)
        out = np.zeros(shape, dtype=bool)
        out[self.slices] = True
        return out
