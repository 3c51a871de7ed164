"""Continuous holographic transform by Riemann sums."""

from holofourier.chft.models import BoxFilter, RegularizationIndex, SampledFunction
from holofourier.chft.series import fourier_series_coefficient, fourier_transform_at
from holofourier.chft.signals import SIGNALS, box, gaussian, raised_cosine
from holofourier.chft.transform import (
    amplitude_estimate,
    box_kernel,
    chft_forward,
    chft_phase,
    gaussian_kernel,
    regularized_inverse,
    regularized_inverse_from_spectrum,
    windowed_reconstruct,
)

__all__ = [
    "SIGNALS",
    "BoxFilter",
    "RegularizationIndex",
    "SampledFunction",
    "amplitude_estimate",
    "box",
    "box_kernel",
    "chft_forward",
    "chft_phase",
    "fourier_series_coefficient",
    "fourier_transform_at",
    "gaussian",
    "gaussian_kernel",
    "raised_cosine",
    "regularized_inverse",
    "regularized_inverse_from_spectrum",
    "windowed_reconstruct",
]
