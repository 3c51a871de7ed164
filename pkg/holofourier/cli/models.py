"""Run configuration and report models for the command-line interface."""

from enum import StrEnum
from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from holofourier.shared.arrays import check_seed
from holofourier.shared.exceptions import InvalidArgumentError
from holofourier.statistics.models import MomentReport

DEFAULT_REG_N = (4.0, 8.0, 16.0, 32.0)
# Synthetic length M (stats) or sample count N (chft-demo) when --size is omitted
DEFAULT_SIZE = 256
DEFAULT_CHFT_SIZE = 512


class Command(StrEnum):
    """Subcommands of the ``holofourier`` CLI."""

    ENCODE = "encode"
    RECOVER = "recover"
    CROP_RECOVER = "crop-recover"
    STATS = "stats"
    CHFT_DEMO = "chft-demo"
    PROGRESSIVE_SIM = "progressive-sim"
    IDENTITY_SUITE = "identity-suite"


class ReportFormat(StrEnum):
    """Serialization of report files."""

    JSON = "json"
    CSV = "csv"


class RunConfig(BaseModel):
    """Everything one CLI invocation needs.

    Attributes:
        command: Subcommand to run
        seed: Seed every random draw derives from
        input: Source file (PGM image, CSV signal or hologram)
        output: Primary artifact or report path
        recovered: Optional path for a recovered image or signal
        curves: Sampled-curve CSV of the continuous demo (default: beside --output)
        window_start: Window start per axis (one value applies to every axis)
        window_len: Window length per axis (one value applies to every axis)
        size: Signal length M (stats) or sample count N (chft-demo)
        amplitude: Constant source amplitude I0 for synthetic experiments
        packets: Packet count for progressive transmission
        loss_rate: Channel drop probability
        reorder: Shuffle delivered packets
        trials: Phase realizations for statistics
        cutoff_k: Box filter cutoff for the continuous demo
        reg_n: Regularization indices for the continuous demo
        signal: Test function name for the continuous demo
        embed_phase: Store the phase raster in hologram files
        format: Report serialization
    """

    model_config = ConfigDict(frozen=True)

    command: Command
    seed: int = 0
    input: Path | None = None
    output: Path | None = None
    recovered: Path | None = None
    curves: Path | None = None
    window_start: tuple[int, ...] = ()
    window_len: tuple[int, ...] = ()
    size: int | None = None
    amplitude: float = 1.0
    packets: int = 8
    loss_rate: float = 0.0
    reorder: bool = False
    trials: int = 200
    cutoff_k: float | None = None
    reg_n: tuple[float, ...] = DEFAULT_REG_N
    signal: str = "raised-cosine"
    embed_phase: bool = False
    format: ReportFormat = ReportFormat.JSON

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: int) -> int:
        """Validate the seed fits in 64 unsigned bits."""
        return check_seed(v)

    @field_validator("loss_rate")
    @classmethod
    def validate_loss_rate(cls, v: float) -> float:
        """Validate the loss rate is a probability."""
        if not 0.0 <= v <= 1.0:
            raise InvalidArgumentError(f"--loss-rate must be in [0, 1], got {v}")
        return v

    @field_validator("size", "packets", "trials")
    @classmethod
    def validate_positive(cls, v: int | None) -> int | None:
        """Validate counts are positive."""
        if v is not None and v < 1:
            raise InvalidArgumentError(f"Counts must be >= 1, got {v}")
        return v

    @field_validator("reg_n")
    @classmethod
    def validate_reg_n(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        """Validate regularization indices are positive."""
        if not v or any(n <= 0 for n in v):
            raise InvalidArgumentError(f"--reg-n values must be positive, got {list(v)}")
        return v

    @model_validator(mode="after")
    def validate_paths(self) -> "RunConfig":
        """Validate that commands reading files were given one."""
        needs_input = {
            Command.ENCODE,
            Command.RECOVER,
            Command.CROP_RECOVER,
            Command.PROGRESSIVE_SIM,
        }
        if self.command in needs_input and self.input is None:
            raise InvalidArgumentError(f"{self.command} requires --input")
        if self.command in (Command.ENCODE, Command.RECOVER) and self.output is None:
            raise InvalidArgumentError(f"{self.command} requires --output")
        return self

    @property
    def resolved_size(self) -> int:
        """--size, or the command's default length."""
        if self.size is not None:
            return self.size
        return DEFAULT_CHFT_SIZE if self.command is Command.CHFT_DEMO else DEFAULT_SIZE

    def window_axes(self, ndim: int, shape: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Expand window flags to one (start, length) per axis.

        A missing length means the whole axis; a single value is reused
        for every axis.

        Raises:
            InvalidArgumentError: If more values are given than axes
        """

        def expand(values: tuple[int, ...], default: tuple[int, ...], flag: str) -> tuple[int, ...]:
            if not values:
                return default
            if len(values) == 1:
                return values * ndim
            if len(values) != ndim:
                raise InvalidArgumentError(f"{flag} takes 1 or {ndim} values, got {len(values)}")
            return values

        starts = expand(self.window_start, (0,) * ndim, "--window-start")
        lengths = expand(self.window_len, tuple(shape), "--window-len")
        return starts, lengths


class QualityFields(BaseModel):
    """RMSE and PSNR of a recovery; infinite PSNR serializes as "Infinity"."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    rmse: float
    psnr_db: float


class CropRecoverReport(QualityFields):
    """Windowed recovery quality against the source, with a plain-crop baseline."""

    shape: list[int]
    window_start: list[int]
    window_len: list[int]
    fraction: float = Field(..., description="Window size L / M")
    baseline_rmse: float
    baseline_psnr_db: float
    seed: int


class StatsReport(BaseModel):
    """Constant-source windowed energy experiment."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    size: int
    window_start: int
    window_len: int
    amplitude: float
    relative_error: float
    moments: MomentReport


class ConvergencePoint(BaseModel):
    """Sup error of the regularized inverse at one n."""

    n: float
    sup_error: float


class ChftReport(BaseModel):
    """Convergence of the continuous demo.

    Its CSV form keeps every field; the sampled curves are written separately.
    """

    model_config = ConfigDict(ser_json_inf_nan="strings")
    csv_records: ClassVar[bool] = False

    signal: str
    count: int
    seed: int
    correlation: float
    sup_f: float
    convergence: list[ConvergencePoint]
    monotone: bool
    cutoff_k: float | None = None
    box_sup_amplitude_error: float | None = None


class ProgressStep(QualityFields):
    """Render quality after one packet arrival."""

    packet_id: int
    coverage: float


class ProgressiveReport(BaseModel):
    """Outcome of a simulated progressive transmission."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    shape: list[int]
    packets: int
    loss_rate: float
    reorder: bool
    seed: int
    delivered: list[int]
    steps: list[ProgressStep]


class IdentityCheck(BaseModel):
    """One identity of the property battery."""

    name: str
    max_error: float
    tolerance: float
    passed: bool


class IdentityReport(BaseModel):
    """All identity checks and the overall verdict."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    seed: int
    checks: list[IdentityCheck]
    passed: bool
