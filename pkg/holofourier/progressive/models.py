"""Packets, receiver state and channel settings for progressive delivery."""

import zlib
from dataclasses import dataclass
from threading import Lock

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, field_validator

from holofourier.holographic.models import WindowSpec
from holofourier.shared.arrays import ComplexArray, RealArray, as_complex_array, check_seed
from holofourier.shared.exceptions import InvalidArgumentError


@dataclass(frozen=True, eq=False)
class Packet:
    """One window of a hologram, self-describing.

    Attributes:
        packet_id: Index of this packet in its stream
        total_packets: Number of packets in the stream
        window: Region of the hologram carried
        payload: Hologram samples inside the window, shaped like the window
        source_dims: Shape of the full hologram
    """

    packet_id: int
    total_packets: int
    window: WindowSpec
    payload: ComplexArray
    source_dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.packet_id < self.total_packets:
            raise InvalidArgumentError(
                f"Packet id {self.packet_id} outside [0, {self.total_packets})"
            )
        self.window.check_fits(self.source_dims)
        payload = as_complex_array(self.payload, name="payload").copy()
        if payload.shape != self.window.lengths:
            raise InvalidArgumentError(
                f"Payload shape {payload.shape} does not match window {self.window.lengths}"
            )
        payload.setflags(write=False)
        object.__setattr__(self, "payload", payload)
        object.__setattr__(self, "source_dims", tuple(self.source_dims))

    @property
    def checksum(self) -> int:
        """CRC32 of the little-endian payload bytes."""
        return zlib.crc32(self.payload.astype("<c16").tobytes())

    def same_content(self, other: "Packet") -> bool:
        """Whether two packets carry identical headers and payload bits."""
        return (
            self.packet_id == other.packet_id
            and self.total_packets == other.total_packets
            and self.window == other.window
            and self.source_dims == other.source_dims
            and self.payload.tobytes() == other.payload.tobytes()
        )


class ReceiverState:
    """Packets received so far for one stream, keyed by packet id.

    ``accumulate`` calls must come from one writer at a time; the lock
    keeps the stored map consistent if they do not.
    """

    def __init__(self, source_dims: tuple[int, ...], expected_total: int) -> None:
        """Initialize an empty receiver.

        Args:
            source_dims: Shape of the hologram being streamed
            expected_total: Number of packets in the stream

        Raises:
            InvalidArgumentError: If dims are not 1D/2D positive or total < 1
        """
        if len(source_dims) not in (1, 2) or any(n < 1 for n in source_dims):
            raise InvalidArgumentError(f"Invalid source dims {source_dims}")
        if expected_total < 1:
            raise InvalidArgumentError(f"Expected total must be >= 1, got {expected_total}")
        self.source_dims = tuple(source_dims)
        self.expected_total = expected_total
        self.received: dict[int, Packet] = {}
        self.lock = Lock()

    @property
    def size(self) -> int:
        """Total number of hologram samples M."""
        return int(np.prod(self.source_dims))

    @property
    def received_samples(self) -> int:
        """Number of hologram samples covered by stored packets."""
        return sum(p.window.size for p in self.received.values())

    @property
    def coverage(self) -> float:
        """Fraction of packets received."""
        return len(self.received) / self.expected_total

    def mask(self) -> npt.NDArray[np.bool_]:
        """Union of the received windows."""
        out = np.zeros(self.source_dims, dtype=bool)
        for p in self.received.values():
            out[p.window.slices] = True
        return out

    def packet_ids(self) -> list[int]:
        """Stored ids in canonical (ascending) order."""
        return sorted(self.received)


class ChannelConfig(BaseModel):
    """Settings of the simulated lossy, reordering channel."""

    model_config = ConfigDict(frozen=True)

    loss_rate: float = Field(0.0, description="Independent drop probability per packet")
    reorder: bool = Field(False, description="Shuffle surviving packets")
    seed: int = Field(0, description="Channel seed")

    @field_validator("loss_rate")
    @classmethod
    def validate_loss_rate(cls, v: float) -> float:
        """Validate 0 <= loss_rate <= 1."""
        if not 0.0 <= v <= 1.0:
            raise InvalidArgumentError(f"Loss rate must be in [0, 1], got {v}")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: int) -> int:
        """Validate the seed fits in 64 unsigned bits."""
        return check_seed(v)


@dataclass(frozen=True, eq=False)
class RenderResult:
    """Reconstruction from the packets received so far.

    Attributes:
        recovered: Sum of per-window recoveries, before rescaling
        image: ``recovered`` rescaled by sqrt(M / received samples)
        coverage: Fraction of packets received
        packet_ids: Packets that contributed, ascending
    """

    recovered: ComplexArray
    image: ComplexArray
    coverage: float
    packet_ids: tuple[int, ...]

    @property
    def amplitude(self) -> RealArray:
        """|image|, the amplitude estimate of the source."""
        return np.abs(self.image)
