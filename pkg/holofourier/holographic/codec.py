"""Binary hologram file format.

Layout (little-endian, row-major):

    magic     4 bytes  b"HOLO"
    version   u16      1
    ndim      u8       1 or 2
    dims      u32 x ndim
    mode      u8       0 = seed, 1 = embedded phase raster
    phase     u64 seed, or f64 x prod(dims)
    data      (f64 re, f64 im) x prod(dims)
"""

import struct
from math import prod
from pathlib import Path

import numpy as np

from holofourier.core.files import atomic_write_bytes, read_bytes
from holofourier.core.logging import get_logger
from holofourier.holographic.models import Hologram, PhaseField, PhaseMode
from holofourier.holographic.phase import generate_phase
from holofourier.shared.exceptions import FormatError, InvalidArgumentError

logger = get_logger(__name__)

MAGIC = b"HOLO"
VERSION = 1

_HEADER = struct.Struct("<4sHB")
_DIM = struct.Struct("<I")
_MODE = struct.Struct("<B")
_SEED = struct.Struct("<Q")


def encode_hologram(h: Hologram) -> bytes:
    """Serialize a hologram to bytes."""
    parts = [_HEADER.pack(MAGIC, VERSION, h.ndim)]
    parts.extend(_DIM.pack(n) for n in h.source_shape)
    parts.append(_MODE.pack(int(h.phase_mode)))
    if h.phase_mode is PhaseMode.SEED and h.phase.seed is not None:
        parts.append(_SEED.pack(h.phase.seed))
    else:
        parts.append(h.phase.values.astype("<f8").tobytes())
    parts.append(h.data.astype("<c16").tobytes())
    return b"".join(parts)


class _Reader:
    """Cursor over a byte buffer that reports offsets in its errors."""

    def __init__(self, buf: bytes) -> None:
        self.buf = buf
        self.offset = 0

    def take(self, n: int, what: str) -> bytes:
        if self.offset + n > len(self.buf):
            raise FormatError(
                f"Truncated hologram: expected {n} bytes of {what} at offset {self.offset}, "
                f"{len(self.buf) - self.offset} available"
            )
        chunk = self.buf[self.offset : self.offset + n]
        self.offset += n
        return chunk

    def unpack(self, fmt: struct.Struct, what: str) -> tuple[int, ...]:
        return fmt.unpack(self.take(fmt.size, what))


def decode_hologram(buf: bytes) -> Hologram:
    """Parse bytes produced by encode_hologram.

    Raises:
        FormatError: On bad magic, unsupported version, truncation,
            trailing bytes or an invalid phase raster
    """
    reader = _Reader(buf)
    magic, version, ndim = reader.unpack(_HEADER, "header")
    if magic != MAGIC:
        raise FormatError(f"Bad magic at offset 0: {magic!r}")
    if version != VERSION:
        raise FormatError(f"Unsupported hologram version {version} at offset 4")
    if ndim not in (1, 2):
        raise FormatError(f"Invalid ndim {ndim} at offset 6")

    shape = tuple(reader.unpack(_DIM, "dims")[0] for _ in range(ndim))
    if 0 in shape:
        raise FormatError(f"Zero-length dimension in {shape}")
    count = prod(shape)

    mode_offset = reader.offset
    (mode_value,) = reader.unpack(_MODE, "phase mode")
    try:
        mode = PhaseMode(mode_value)
    except ValueError as e:
        raise FormatError(f"Invalid phase mode {mode_value} at offset {mode_offset}") from e

    try:
        if mode is PhaseMode.SEED:
            (seed,) = reader.unpack(_SEED, "seed")
            phase = generate_phase(seed, shape)
        else:
            raster = np.frombuffer(reader.take(8 * count, "phase raster"), dtype="<f8")
            phase = PhaseField.from_values(raster.reshape(shape))
    except InvalidArgumentError as e:
        raise FormatError(f"Invalid phase section: {e}") from e

    data = np.frombuffer(reader.take(16 * count, "data"), dtype="<c16").reshape(shape)
    if reader.offset != len(buf):
        raise FormatError(f"Trailing bytes after offset {reader.offset}")

    try:
        return Hologram(data=data.astype(np.complex128), phase=phase, phase_mode=mode)
    except InvalidArgumentError as e:
        raise FormatError(f"Invalid hologram data: {e}") from e


def save_hologram(h: Hologram, path: Path) -> None:
    """Write a hologram file atomically."""
    atomic_write_bytes(path, encode_hologram(h))
    logger.info(
        "holographic.file.saved",
        path=str(path),
        shape=list(h.source_shape),
        phase_mode=h.phase_mode.name.lower(),
    )


def load_hologram(path: Path) -> Hologram:
    """Read a hologram file.

    Raises:
        StorageError: If the file cannot be read
        FormatError: If its contents are malformed
    """
    h = decode_hologram(read_bytes(path))
    logger.debug("holographic.file.loaded", path=str(path), shape=list(h.source_shape))
    return h
