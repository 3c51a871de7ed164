"""Test functions for the continuous transform."""

from collections.abc import Callable

import numpy as np
import numpy.typing as npt

from holofourier.shared.arrays import RealArray


def gaussian(x: npt.ArrayLike) -> RealArray:
    """exp(-pi x^2), its own Fourier transform."""
    arr = np.asarray(x, dtype=np.float64)
    return np.exp(-np.pi * arr * arr)


def raised_cosine(x: npt.ArrayLike) -> RealArray:
    """(1 + cos(pi x)) / 2 on [-1, 1], zero outside. Continuously differentiable."""
    arr = np.asarray(x, dtype=np.float64)
    return np.where(np.abs(arr) <= 1.0, (1.0 + np.cos(np.pi * arr)) / 2.0, 0.0)


def box(x: npt.ArrayLike, half_width: float = 0.5) -> RealArray:
    """Indicator of [-half_width, half_width]; discontinuous."""
    arr = np.asarray(x, dtype=np.float64)
    return np.where(np.abs(arr) <= half_width, 1.0, 0.0)


SIGNALS: dict[str, Callable[[npt.ArrayLike], RealArray]] = {
    "gaussian": gaussian,
    "raised-cosine": raised_cosine,
    "box": box,
}
