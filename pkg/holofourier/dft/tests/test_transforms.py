"""Tests for holofourier.dft.transforms."""

import numpy as np
import pytest

from holofourier.dft.transforms import Direction, brute_force_dft, udft, udft_1d, udft_2d
from holofourier.shared.exceptions import InvalidArgumentError


class TestUdft1d:
    """Tests for the unitary 1D transform."""

    def test_impulse_gives_constant_row(self) -> None:
        """Test that a length-4 impulse maps to 0.5 everywhere."""
        out = udft_1d(np.array([1, 0, 0, 0]), Direction.FORWARD)
        np.testing.assert_allclose(out, [0.5, 0.5, 0.5, 0.5], atol=1e-15)

    def test_constant_maps_to_single_bin(self) -> None:
        """Test that forward([1,1,1,1]) is [2,0,0,0]."""
        out = udft_1d(np.ones(4), Direction.FORWARD)
        np.testing.assert_allclose(out, [2, 0, 0, 0], atol=1e-15)

    def test_round_trip(self, random_complex) -> None:
        """Test that inverse(forward(x)) = x for length 16."""
        x = random_complex((16,))
        back = udft_1d(udft_1d(x, Direction.FORWARD), Direction.INVERSE)
        assert np.max(np.abs(back - x)) < 1e-12

    def test_forward_sign_is_positive(self) -> None:
        """Test that FORWARD applies exp(+j 2 pi u k / M)."""
        m = 8
        x = np.zeros(m)
        x[1] = 1.0
        out = udft_1d(x, Direction.FORWARD)
        expected = np.exp(2j * np.pi * np.arange(m) / m) / np.sqrt(m)
        np.testing.assert_allclose(out, expected, atol=1e-15)

    @pytest.mark.parametrize("m", [1, 2, 3, 7, 16, 100, 257])
    def test_energy_preserved(self, random_complex, m: int) -> None:
        """Test that the transform preserves the 2-norm for arbitrary lengths."""
        x = random_complex((m,))
        for direction in Direction:
            out = udft_1d(x, direction)
            assert abs(np.linalg.norm(out) - np.linalg.norm(x)) <= 1e-10 * np.linalg.norm(x)

    def test_empty_input_rejected(self) -> None:
        """Test that an empty array raises InvalidArgumentError."""
        with pytest.raises(InvalidArgumentError, match="empty"):
            udft_1d(np.array([]))

    def test_non_finite_rejected(self) -> None:
        """Test that NaN samples raise InvalidArgumentError."""
        with pytest.raises(InvalidArgumentError, match="non-finite"):
            udft_1d(np.array([1.0, np.nan]))


class TestUdft2d:
    """Tests for the unitary 2D transform."""

    def test_impulse_gives_constant(self) -> None:
        """Test that a 2x2 impulse at (0,0) maps to 0.5 everywhere."""
        x = np.zeros((2, 2))
        x[0, 0] = 1.0
        np.testing.assert_allclose(udft_2d(x), np.full((2, 2), 0.5), atol=1e-15)

    def test_round_trip(self, random_complex) -> None:
        """Test that a random 8x8 array survives forward then inverse."""
        x = random_complex((8, 8))
        back = udft_2d(udft_2d(x, Direction.FORWARD), Direction.INVERSE)
        assert np.max(np.abs(back - x)) < 1e-12

    def test_separable(self, random_complex) -> None:
        """Test that the 2D transform is 1D transforms along each axis."""
        x = random_complex((4, 6))
        rows = np.array([udft_1d(row) for row in x])
        both = np.array([udft_1d(col) for col in rows.T]).T
        np.testing.assert_allclose(udft_2d(x), both, atol=1e-13)

    def test_matches_oracle(self, random_complex) -> None:
        """Test agreement with the brute-force oracle on 4x4."""
        x = random_complex((4, 4))
        for direction in Direction:
            assert np.max(np.abs(udft_2d(x, direction) - brute_force_dft(x, direction))) < 1e-12

    def test_dispatch(self, random_complex) -> None:
        """Test that udft dispatches on dimensionality."""
        x1 = random_complex((5,))
        x2 = random_complex((3, 5))
        np.testing.assert_array_equal(udft(x1), udft_1d(x1))
        np.testing.assert_array_equal(udft(x2), udft_2d(x2))

    def test_wrong_dimensionality_rejected(self) -> None:
        """Test that a 1D input to udft_2d is rejected."""
        with pytest.raises(InvalidArgumentError, match="2D"):
            udft_2d(np.ones(4))


class TestBruteForceDft:
    """Tests for the direct-sum oracle."""

    def test_matches_fast_path_all_small_lengths(self, random_complex) -> None:
        """Test oracle equivalence for every length 1..64."""
        for m in range(1, 65):
            x = random_complex((m,))
            for direction in Direction:
                err = np.max(np.abs(udft_1d(x, direction) - brute_force_dft(x, direction)))
                assert err < 1e-10, (m, direction)

    def test_matches_fast_path_2d_up_to_16(self, random_complex) -> None:
        """Test oracle equivalence for 2D shapes up to 16x16."""
        for rows in (1, 3, 8, 16):
            for cols in (1, 5, 16):
                x = random_complex((rows, cols))
                for direction in Direction:
                    err = np.max(np.abs(udft_2d(x, direction) - brute_force_dft(x, direction)))
                    assert err < 1e-10

    def test_impulse(self) -> None:
        """Test that the oracle maps an impulse to a constant row."""
        np.testing.assert_allclose(brute_force_dft(np.array([1, 0, 0, 0])), np.full(4, 0.5))

    def test_linearity(self, random_complex) -> None:
        """Test oracle(a x + b y) = a oracle(x) + b oracle(y)."""
        x = random_complex((32,))
        y = random_complex((32,))
        a, b = 1.5 - 0.5j, -2.0 + 1j
        lhs = brute_force_dft(a * x + b * y)
        rhs = a * brute_force_dft(x) + b * brute_force_dft(y)
        assert np.max(np.abs(lhs - rhs)) < 1e-12

    def test_cap_enforced(self) -> None:
        """Test that inputs over the cap are rejected."""
        with pytest.raises(InvalidArgumentError, match="cap"):
            brute_force_dft(np.ones(65), max_samples=64)

    def test_cap_defaults_to_settings(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that the default cap comes from Settings."""
        monkeypatch.setenv("ORACLE_MAX_SAMPLES", "16")
        with pytest.raises(InvalidArgumentError, match="cap is 16"):
            brute_force_dft(np.ones((4, 5)))
