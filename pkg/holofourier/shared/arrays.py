"""Validation helpers for the complex sample grids every module passes around."""

from typing import TypeAlias

import numpy as np
import numpy.typing as npt

from holofourier.shared.exceptions import InvalidArgumentError

ComplexArray: TypeAlias = npt.NDArray[np.complex128]
RealArray: TypeAlias = npt.NDArray[np.float64]


def as_complex_array(x: npt.ArrayLike, ndim: int | None = None, name: str = "array") -> ComplexArray:
    """Coerce input to a finite complex128 array.

    Args:
        x: Array-like samples (real or complex)
        ndim: Required dimensionality (1 or 2), or None for either
        name: Argument name used in error messages

    Returns:
        Contiguous complex128 copy-or-view of the input

    Raises:
        InvalidArgumentError: If the array is empty, has the wrong
            dimensionality, or contains NaN/Inf
    """
    arr = np.ascontiguousarray(x, dtype=np.complex128)
    if ndim is not None and arr.ndim != ndim:
        raise InvalidArgumentError(f"{name} must be {ndim}D, got {arr.ndim}D")
    if arr.ndim not in (1, 2):
        raise InvalidArgumentError(f"{name} must be 1D or 2D, got {arr.ndim}D")
    if arr.size == 0 or 0 in arr.shape:
        raise InvalidArgumentError(f"{name} must not be empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{name} contains non-finite samples")
    return arr


def as_real_vector(x: npt.ArrayLike, name: str = "weights") -> RealArray:
    """Coerce input to a finite, nonempty 1D float64 array.

    Raises:
        InvalidArgumentError: If empty, not 1D, or non-finite
    """
    arr = np.ascontiguousarray(x, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidArgumentError(f"{name} must be a nonempty 1D sequence")
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{name} contains non-finite entries")
    return arr


def check_seed(seed: int) -> int:
    """Validate a 64-bit unsigned seed.

    Raises:
        InvalidArgumentError: If the seed is outside [0, 2**64)
    """
    if not 0 <= seed < 2**64:
        raise InvalidArgumentError(f"Seed must be in [0, 2**64), got {seed}")
    return seed
