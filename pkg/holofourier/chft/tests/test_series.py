"""Tests for holofourier.chft.series."""

import numpy as np
import pytest

from holofourier.chft.models import SampledFunction
from holofourier.chft.series import fourier_series_coefficient, fourier_transform_at
from holofourier.chft.signals import gaussian
from holofourier.shared.exceptions import InvalidArgumentError


class TestFourierSeriesCoefficient:
    """Tests for series coefficients and their transform link."""

    def test_cosine(self) -> None:
        """Test that cos(2 pi x / L) has a_1 = a_-1 = 1/2 and a_0 = 0."""
        f = SampledFunction.from_function(lambda x: np.cos(np.pi * x), -1.0, 1.0, 256)
        assert abs(fourier_series_coefficient(f, 2.0, 1) - 0.5) < 1e-6
        assert abs(fourier_series_coefficient(f, 2.0, -1) - 0.5) < 1e-6
        assert abs(fourier_series_coefficient(f, 2.0, 0)) < 1e-6

    def test_constant(self) -> None:
        """Test that f = c has a_0 = c and vanishing higher coefficients."""
        f = SampledFunction(samples=np.full(64, 3.0), y0=-0.5, dy=1.0 / 64)
        assert fourier_series_coefficient(f, 1.0, 0) == pytest.approx(3.0)
        for n in (1, 2, 5):
            assert abs(fourier_series_coefficient(f, 1.0, n)) < 1e-12

    def test_matches_scaled_transform(self, rng: np.random.Generator) -> None:
        """Test a_n = (1/L) f_hat(n/L) for a random band-limited bump, |n| <= 8."""
        period = 8.0
        amplitudes = rng.standard_normal(4)
        offsets = rng.random(4)

        def signal(x: np.ndarray) -> np.ndarray:
            envelope = np.exp(-(x**2) / (2 * 0.6**2))
            carrier = sum(
                a * np.cos(2 * np.pi * (m * x / period + p))
                for m, (a, p) in enumerate(zip(amplitudes, offsets, strict=True))
            )
            return envelope * carrier

        f = SampledFunction.from_function(signal, -period / 2, period / 2, 512)
        for n in range(-8, 9):
            a_n = fourier_series_coefficient(f, period, n)
            assert abs(a_n - fourier_transform_at(f, n / period) / period) < 1e-8

    def test_integer_valued_float_index(self) -> None:
        """Test that 2.0 is accepted as an index."""
        f = SampledFunction.from_function(gaussian, -1.0, 1.0, 32)
        assert fourier_series_coefficient(f, 2.0, 2.0) == fourier_series_coefficient(f, 2.0, 2)

    def test_fractional_index(self) -> None:
        """Test that a non-integer index is rejected."""
        f = SampledFunction.from_function(gaussian, -1.0, 1.0, 32)
        with pytest.raises(InvalidArgumentError, match="integer"):
            fourier_series_coefficient(f, 2.0, 0.5)

    def test_support_outside_period(self) -> None:
        """Test that samples beyond [-L/2, L/2] are rejected."""
        f = SampledFunction.from_function(gaussian, -2.0, 2.0, 32)
        with pytest.raises(InvalidArgumentError, match="outside"):
            fourier_series_coefficient(f, 2.0, 1)


class TestFourierTransformAt:
    """Tests for pointwise transform quadrature."""

    @pytest.mark.parametrize("omega", [0.0, 0.25, 1.0])
    def test_gaussian_pair(self, omega: float) -> None:
        """Test that exp(-pi x^2) transforms to exp(-pi omega^2)."""
        f = SampledFunction.from_function(gaussian, -6.0, 6.0, 1024)
        assert abs(fourier_transform_at(f, omega) - np.exp(-np.pi * omega**2)) < 1e-10
