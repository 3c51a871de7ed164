"""Grayscale PGM images and CSV signals.

Pixels map linearly to amplitudes, p -> p / maxval. On output amplitudes
are clamped to [0, 1] and quantized with round-half-up to 8 bits.
"""

import math
from pathlib import Path

import numpy as np
import numpy.typing as npt

from holofourier.core.files import atomic_write_bytes, atomic_write_text, read_bytes
from holofourier.shared.arrays import ComplexArray, RealArray, as_complex_array
from holofourier.shared.exceptions import FormatError, InvalidArgumentError

_WHITESPACE = b" \t\r\n\v\f"


def _header_token(buf: bytes, pos: int) -> tuple[bytes, int]:
    """Next whitespace-delimited header token, skipping '#' comments."""
    while pos < len(buf):
        if buf[pos] in _WHITESPACE:
            pos += 1
        elif buf[pos] == ord("#"):
            end = buf.find(b"\n", pos)
            pos = len(buf) if end < 0 else end + 1
        else:
            break
    start = pos
    while pos < len(buf) and buf[pos] not in _WHITESPACE and buf[pos] != ord("#"):
        pos += 1
    if start == pos:
        raise FormatError(f"PGM header ends early at byte {start}")
    return buf[start:pos], pos


def _header_int(buf: bytes, pos: int, what: str) -> tuple[int, int]:
    token, end = _header_token(buf, pos)
    if not token.isdigit():
        raise FormatError(f"PGM {what} at byte {end - len(token)} is not a number: {token!r}")
    return int(token), end


def parse_pgm(buf: bytes) -> RealArray:
    """Decode binary (P5) 8-bit PGM bytes to amplitudes in [0, 1].

    Raises:
        FormatError: On a bad magic, header, raster size or a pixel above
            maxval, naming the byte offset
    """
    magic, pos = _header_token(buf, 0)
    if magic != b"P5":
        raise FormatError(f"Not a binary PGM at byte 0: {magic[:8]!r}")
    width, pos = _header_int(buf, pos, "width")
    height, pos = _header_int(buf, pos, "height")
    maxval, pos = _header_int(buf, pos, "maxval")
    if width < 1 or height < 1:
        raise FormatError(f"PGM dimensions must be positive, got {width}x{height}")
    if not 1 <= maxval <= 255:
        raise FormatError(f"Only 8-bit PGM is supported, maxval is {maxval}")
    if pos >= len(buf) or buf[pos] not in _WHITESPACE:
        raise FormatError(f"Missing whitespace after PGM header at byte {pos}")
    pos += 1

    expected = width * height
    raster = buf[pos:]
    if len(raster) != expected:
        raise FormatError(
            f"PGM raster at byte {pos} has {len(raster)} bytes, expected {expected}"
        )
    pixels = np.frombuffer(raster, dtype=np.uint8)
    over = np.flatnonzero(pixels > maxval)
    if over.size:
        raise FormatError(f"PGM pixel at byte {pos + int(over[0])} exceeds maxval {maxval}")
    return pixels.reshape(height, width).astype(np.float64) / maxval


def format_pgm(image: npt.ArrayLike) -> bytes:
    """Encode real amplitudes as an 8-bit P5 PGM, floor(clamp(v, 0, 1) * 255 + 0.5)."""
    values = np.asarray(image, dtype=np.float64)
    if values.ndim != 2 or values.size == 0:
        raise InvalidArgumentError("PGM output needs a nonempty 2D image")
    if not np.all(np.isfinite(values)):
        raise InvalidArgumentError("PGM output contains non-finite values")
    pixels = np.floor(np.clip(values, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)
    height, width = pixels.shape
    return f"P5\n{width} {height}\n255\n".encode("ascii") + pixels.tobytes()


def load_image(path: Path) -> ComplexArray:
    """Read a PGM file as a 2D complex array of amplitudes.

    Raises:
        StorageError: If the file cannot be read
        FormatError: If it is not an 8-bit binary PGM
    """
    return as_complex_array(parse_pgm(read_bytes(path)), ndim=2, name="image")


def save_image(image: npt.ArrayLike, path: Path) -> None:
    """Write amplitudes as an 8-bit PGM, atomically."""
    atomic_write_bytes(path, format_pgm(image))


def parse_signal(text: str) -> ComplexArray:
    """Parse CSV lines of ``value`` or ``re,im``; blank lines are skipped.

    Raises:
        FormatError: On a malformed or non-finite row, naming the line number
    """
    values: list[complex] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        fields = [f.strip() for f in stripped.split(",")]
        if len(fields) > 2:
            raise FormatError(f"Line {number}: expected 1 or 2 columns, got {len(fields)}")
        try:
            parts = [float(f) for f in fields]
        except ValueError as e:
            raise FormatError(f"Line {number}: {e}") from e
        if not all(math.isfinite(p) for p in parts):
            raise FormatError(f"Line {number}: non-finite value")
        values.append(complex(parts[0], parts[1] if len(parts) == 2 else 0.0))
    if not values:
        raise FormatError("Signal file has no samples")
    return np.array(values, dtype=np.complex128)


def format_signal(signal: npt.ArrayLike) -> str:
    """One sample per line; ``re,im`` columns when any imaginary part is nonzero."""
    samples = as_complex_array(signal, ndim=1, name="signal")
    if np.any(samples.imag != 0.0):
        lines = [f"{float(v.real)!r},{float(v.imag)!r}" for v in samples]
    else:
        lines = [repr(float(v.real)) for v in samples]
    return "\n".join(lines) + "\n"


def load_signal(path: Path) -> ComplexArray:
    """Read a CSV signal as a 1D complex array."""
    try:
        text = read_bytes(path).decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"{path}: not UTF-8 text at byte {e.start}") from e
    return parse_signal(text)


def save_signal(signal: npt.ArrayLike, path: Path) -> None:
    """Write a CSV signal atomically."""
    atomic_write_text(path, format_signal(signal))


def load_source(path: Path) -> ComplexArray:
    """Load an image (``.pgm``) or signal (``.csv``) by file suffix.

    Raises:
        InvalidArgumentError: For any other suffix
    """
    suffix = path.suffix.lower()
    if suffix == ".pgm":
        return load_image(path)
    if suffix == ".csv":
        return load_signal(path)
    raise InvalidArgumentError(f"Unsupported input type {suffix!r}; use .pgm or .csv")


def save_amplitude(values: npt.ArrayLike, path: Path) -> None:
    """Save an amplitude array as PGM (2D) or CSV (1D) by file suffix.

    Raises:
        InvalidArgumentError: If the suffix does not match the dimensionality
    """
    arr = np.asarray(values)
    suffix = path.suffix.lower()
    if suffix == ".pgm" and arr.ndim == 2:
        save_image(np.real(arr), path)
    elif suffix == ".csv" and arr.ndim == 1:
        save_signal(arr, path)
    else:
        raise InvalidArgumentError(
            f"Cannot write a {arr.ndim}D result to {suffix!r}; use .pgm for images, .csv for signals"
        )
