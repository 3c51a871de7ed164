"""Tests for holofourier.holographic.encoding."""

import numpy as np
import pytest

from holofourier.dft.transforms import Direction, udft_1d
from holofourier.holographic.encoding import encode, encode_1d, encode_2d, encode_with_seed
from holofourier.holographic.models import PhaseField, PhaseMode
from holofourier.holographic.phase import generate_phase
from holofourier.shared.exceptions import InvalidArgumentError


def _literal_encode_1d(signal: np.ndarray, phase: np.ndarray) -> np.ndarray:
    m = signal.size
    out = np.zeros(m, dtype=np.complex128)
    for u in range(m):
        for k in range(m):
            out[u] += signal[k] * np.exp(2j * np.pi * phase[k]) * np.exp(2j * np.pi * u * k / m)
    return out / np.sqrt(m)


class TestEncode1d:
    """Tests for 1D encoding."""

    def test_impulse_zero_phase(self) -> None:
        """Test that an impulse with zero phase encodes to 0.5 everywhere."""
        h = encode_1d(np.array([1.0, 0.0, 0.0, 0.0]), PhaseField.zeros((4,)))
        np.testing.assert_allclose(h.data, [0.5, 0.5, 0.5, 0.5], atol=1e-15)

    def test_energy_preserved(self, random_complex) -> None:
        """Test that the hologram has the signal's 2-norm."""
        signal = random_complex((200,))
        h = encode_1d(signal, generate_phase(5, (200,)))
        assert abs(np.linalg.norm(h.data) - np.linalg.norm(signal)) < 1e-10

    def test_matches_literal_double_sum(self, random_complex) -> None:
        """Test M=8 against a term-by-term evaluation of the encoding sum."""
        signal = random_complex((8,))
        phase = generate_phase(17, (8,))
        h = encode_1d(signal, phase)
        assert np.max(np.abs(h.data - _literal_encode_1d(signal, phase.values))) < 1e-12

    def test_equals_forward_transform_of_modulated_signal(self, random_complex) -> None:
        """Test H = udft_1d(signal * exp(j 2 pi P), FORWARD)."""
        signal = random_complex((32,))
        phase = generate_phase(2, (32,))
        expected = udft_1d(signal * np.exp(2j * np.pi * phase.values), Direction.FORWARD)
        np.testing.assert_allclose(encode_1d(signal, phase).data, expected, atol=1e-13)

    def test_shape_mismatch(self) -> None:
        """Test that a phase of the wrong length is rejected."""
        with pytest.raises(InvalidArgumentError, match="does not match"):
            encode_1d(np.ones(8), generate_phase(1, (9,)))

    def test_rejects_2d_input(self) -> None:
        """Test that encode_1d refuses images."""
        with pytest.raises(InvalidArgumentError, match="1D"):
            encode_1d(np.ones((2, 2)), generate_phase(1, (2, 2)))


class TestEncode2d:
    """Tests for 2D encoding."""

    def test_constant_image_single_bin(self) -> None:
        """Test that a constant 4x4 image with zero phase has one bin of value 4."""
        h = encode_2d(np.ones((4, 4)), PhaseField.zeros((4, 4)))
        expected = np.zeros((4, 4))
        expected[0, 0] = 4.0
        np.testing.assert_allclose(h.data, expected, atol=1e-14)

    def test_energy_preserved(self, random_complex) -> None:
        """Test energy preservation on a random 16x16 image."""
        image = random_complex((16, 16))
        h = encode_2d(image, generate_phase(8, (16, 16)))
        assert abs(np.linalg.norm(h.data) - np.linalg.norm(image)) < 1e-10

    def test_separable(self, random_complex) -> None:
        """Test that 2D encoding equals 1D transforms applied along each axis."""
        image = random_complex((8, 8))
        phase = generate_phase(4, (8, 8))
        modulated = image * phase.factor
        rows = np.stack([udft_1d(row, Direction.FORWARD) for row in modulated])
        both = np.stack([udft_1d(col, Direction.FORWARD) for col in rows.T]).T
        assert np.max(np.abs(encode_2d(image, phase).data - both)) < 1e-12


class TestEncodeWithSeed:
    """Tests for seeded encoding and phase transport modes."""

    def test_defaults_to_seed_mode(self) -> None:
        """Test that seeded encodes carry the seed."""
        h = encode_with_seed(np.ones(8), seed=3)
        assert h.phase_mode is PhaseMode.SEED
        assert h.phase.seed == 3

    def test_embed_option(self) -> None:
        """Test that embed_phase switches to the raster mode."""
        h = encode_with_seed(np.ones(8), seed=3, embed_phase=True)
        assert h.phase_mode is PhaseMode.EMBEDDED

    def test_raw_phase_forces_embedded(self) -> None:
        """Test that a phase with no generator provenance is embedded."""
        h = encode(np.ones(4), PhaseField.from_values([0.1, 0.2, 0.3, 0.4]))
        assert h.phase_mode is PhaseMode.EMBEDDED

    def test_dispatch_2d(self) -> None:
        """Test that encode handles images."""
        h = encode_with_seed(np.ones((3, 5)), seed=1)
        assert h.source_shape == (3, 5)
        assert h.ndim == 2

    def test_rejects_nan(self) -> None:
        """Test that non-finite samples are rejected."""
        with pytest.raises(InvalidArgumentError, match="non-finite"):
            encode_with_seed(np.array([1.0, np.nan]), seed=1)
