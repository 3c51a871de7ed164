"""Unitary discrete Fourier transforms and closed-form kernels."""

from holofourier.dft.kernels import (
    circular_convolve,
    geometric_exp_sum,
    phi_l,
    sinc,
    sinc_ratio_sum,
)
from holofourier.dft.transforms import Direction, brute_force_dft, udft, udft_1d, udft_2d

__all__ = [
    "Direction",
    "brute_force_dft",
    "circular_convolve",
    "geometric_exp_sum",
    "phi_l",
    "sinc",
    "sinc_ratio_sum",
    "udft",
    "udft_1d",
    "udft_2d",
]
