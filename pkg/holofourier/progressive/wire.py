"""HPKT packet framing.

Layout (little-endian):

    magic        4 bytes  b"HPKT"
    version      u16      1
    packet_id    u32
    total        u32
    ndim         u8
    dims         u32 x ndim
    window       (start u32, len u32) x ndim
    payload      (f64 re, f64 im) x window size, row-major
    crc          u32      CRC32 of every preceding byte
"""

import struct
import zlib
from math import prod

import numpy as np

from holofourier.holographic.models import WindowSpec
from holofourier.progressive.models import Packet
from holofourier.shared.exceptions import FormatError, IntegrityError, InvalidArgumentError

MAGIC = b"HPKT"
VERSION = 1

_HEADER = struct.Struct("<4sHIIB")
_U32 = struct.Struct("<I")
_AXIS = struct.Struct("<II")


def encode_packet(p: Packet) -> bytes:
    """Frame a packet with its trailing CRC32."""
    parts = [_HEADER.pack(MAGIC, VERSION, p.packet_id, p.total_packets, len(p.source_dims))]
    parts.extend(_U32.pack(n) for n in p.source_dims)
    parts.extend(_AXIS.pack(a, n) for a, n in zip(p.window.starts, p.window.lengths, strict=True))
    parts.append(p.payload.astype("<c16").tobytes())
    body = b"".join(parts)
    return body + _U32.pack(zlib.crc32(body))


def decode_packet(buf: bytes) -> Packet:
    """Parse and verify one HPKT frame.

    Raises:
        IntegrityError: If the CRC does not match
        FormatError: On bad magic, version, truncation or inconsistent fields
    """
    if len(buf) < _HEADER.size + _U32.size:
        raise FormatError(f"Packet too short: {len(buf)} bytes")
    body, trailer = buf[:-4], buf[-4:]
    (crc,) = _U32.unpack(trailer)
    if zlib.crc32(body) != crc:
        raise IntegrityError(f"Packet CRC mismatch at offset {len(body)}")

    magic, version, packet_id, total, ndim = _HEADER.unpack_from(body, 0)
    if magic != MAGIC:
        raise FormatError(f"Bad magic at offset 0: {magic!r}")
    if version != VERSION:
        raise FormatError(f"Unsupported packet version {version} at offset 4")
    if ndim not in (1, 2):
        raise FormatError(f"Invalid ndim {ndim} at offset 14")

    offset = _HEADER.size
    header_end = offset + ndim * (_U32.size + _AXIS.size)
    if len(body) < header_end:
        raise FormatError(f"Truncated packet header at offset {len(body)}")
    dims = tuple(_U32.unpack_from(body, offset + i * _U32.size)[0] for i in range(ndim))
    offset += ndim * _U32.size
    axes = [_AXIS.unpack_from(body, offset + i * _AXIS.size) for i in range(ndim)]
    offset += ndim * _AXIS.size

    lengths = tuple(n for _, n in axes)
    expected = offset + 16 * prod(lengths)
    if len(body) != expected:
        raise FormatError(f"Payload ends at offset {len(body)}, expected {expected}")

    try:
        window = WindowSpec(starts=tuple(a for a, _ in axes), lengths=lengths)
        payload = np.frombuffer(body, dtype="<c16", offset=offset).reshape(lengths)
        return Packet(
            packet_id=packet_id,
            total_packets=total,
            window=window,
            payload=payload.astype(np.complex128),
            source_dims=dims,
        )
    except InvalidArgumentError as e:
        raise FormatError(f"Inconsistent packet fields: {e}") from e
