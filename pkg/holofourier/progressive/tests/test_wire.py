"""Tests for holofourier.progressive.wire."""

import struct
import zlib

import numpy as np
import pytest

from holofourier.holographic.encoding import encode_with_seed
from holofourier.progressive.transmission import partition
from holofourier.progressive.wire import decode_packet, encode_packet
from holofourier.shared.exceptions import FormatError, IntegrityError


class TestPacketWire:
    """Tests for HPKT framing."""

    def test_layout(self, packets) -> None:
        """Test header fields, size and trailing CRC of a 1D packet."""
        frame = encode_packet(packets[3])
        assert frame[:4] == b"HPKT"
        assert struct.unpack_from("<HIIB", frame, 4) == (1, 3, 8, 1)
        assert struct.unpack_from("<I", frame, 15) == (256,)
        assert struct.unpack_from("<II", frame, 19) == (96, 32)
        assert len(frame) == 27 + 16 * 32 + 4
        assert struct.unpack("<I", frame[-4:])[0] == zlib.crc32(frame[:-4])

    def test_decode_restores_packet(self, packets) -> None:
        """Test that a decoded frame carries the same content."""
        back = decode_packet(encode_packet(packets[5]))
        assert back.same_content(packets[5])
        assert back.checksum == packets[5].checksum

    def test_decode_2d(self) -> None:
        """Test that a row-band packet of an image survives framing."""
        h = encode_with_seed(np.arange(24.0).reshape(4, 6), seed=3)
        packet = partition(h, 2)[1]
        back = decode_packet(encode_packet(packet))
        assert back.same_content(packet)
        assert back.payload.shape == (2, 6)

    def test_corrupted_payload(self, packets) -> None:
        """Test that a flipped payload bit fails the CRC."""
        frame = bytearray(encode_packet(packets[0]))
        frame[40] ^= 0x01
        with pytest.raises(IntegrityError, match="CRC"):
            decode_packet(bytes(frame))

    def test_bad_magic_with_valid_crc(self, packets) -> None:
        """Test that a wrong magic is a format error."""
        body = b"XPKT" + encode_packet(packets[0])[4:-4]
        with pytest.raises(FormatError, match="magic"):
            decode_packet(body + struct.pack("<I", zlib.crc32(body)))

    def test_truncated(self) -> None:
        """Test that a tiny buffer is a format error."""
        with pytest.raises(FormatError, match="too short"):
            decode_packet(b"HPKT\x01")

    def test_inconsistent_window(self, packets) -> None:
        """Test that a window outside the dims is a format error."""
        body = bytearray(encode_packet(packets[7])[:-4])
        struct.pack_into("<I", body, 19, 250)
        with pytest.raises(FormatError, match="Inconsistent"):
            decode_packet(bytes(body) + struct.pack("<I", zlib.crc32(bytes(body))))
