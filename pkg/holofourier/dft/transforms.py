"""Unitary DFTs with explicit direction names.

Direction convention used by every module in the package:

- ``Direction.FORWARD`` applies the kernel ``(1/sqrt(M)) exp(+j 2 pi u k / M)``.
  This is the encoding direction of the holographic transform.
- ``Direction.INVERSE`` applies ``(1/sqrt(M)) exp(-j 2 pi u k / M)``, the
  direction of every recovery sum.

With ``norm="ortho"`` numpy's ``ifft`` carries the ``+`` sign and ``fft`` the
``-`` sign, so FORWARD maps to ``numpy.fft.ifft`` and INVERSE to
``numpy.fft.fft``.
"""

from enum import StrEnum

import numpy as np
import numpy.typing as npt

from holofourier.core.config import get_settings
from holofourier.shared.arrays import ComplexArray, as_complex_array
from holofourier.shared.exceptions import InvalidArgumentError


class Direction(StrEnum):
    """Transform direction, named by the sign of the exponent it applies."""

    FORWARD = "forward"
    INVERSE = "inverse"

    @property
    def sign(self) -> int:
        """Sign of the exponent: +1 for FORWARD, -1 for INVERSE."""
        return 1 if self is Direction.FORWARD else -1


def udft_1d(x: npt.ArrayLike, direction: Direction = Direction.FORWARD) -> ComplexArray:
    """Unitary 1D DFT.

    Args:
        x: Length-M samples, M >= 1
        direction: FORWARD (+j kernel) or INVERSE (-j kernel)

    Returns:
        Length-M transformed samples

    Raises:
        InvalidArgumentError: If input is empty, not 1D, or non-finite
    """
    arr = as_complex_array(x, ndim=1, name="x")
    if Direction(direction) is Direction.FORWARD:
        return np.fft.ifft(arr, norm="ortho")
    return np.fft.fft(arr, norm="ortho")


def udft_2d(x: npt.ArrayLike, direction: Direction = Direction.FORWARD) -> ComplexArray:
    """Unitary 2D DFT, separable over rows and columns.

    Raises:
        InvalidArgumentError: If input is empty, not 2D, or non-finite
    """
    arr = as_complex_array(x, ndim=2, name="x")
    if Direction(direction) is Direction.FORWARD:
        return np.fft.ifft2(arr, norm="ortho")
    return np.fft.fft2(arr, norm="ortho")


def udft(x: npt.ArrayLike, direction: Direction = Direction.FORWARD) -> ComplexArray:
    """Dispatch to udft_1d or udft_2d on the input's dimensionality."""
    arr = as_complex_array(x, name="x")
    if arr.ndim == 1:
        return udft_1d(arr, direction)
    return udft_2d(arr, direction)


def _kernel_matrix(m: int, sign: int) -> ComplexArray:
    """Return the literal M x M unitary DFT matrix for the given exponent sign."""
    idx = np.arange(m, dtype=np.float64)
    return np.exp(sign * 2j * np.pi * np.outer(idx, idx) / m) / np.sqrt(m)


def brute_force_dft(
    x: npt.ArrayLike,
    direction: Direction = Direction.FORWARD,
    max_samples: int | None = None,
) -> ComplexArray:
    """Evaluate the defining DFT sum directly (O(N^2) per axis).

    Used as an oracle for the fast path. The kernel matrices are built from
    ``exp`` directly and never touch ``numpy.fft``.

    Args:
        x: 1D or 2D samples
        direction: FORWARD or INVERSE
        max_samples: Total-size cap; defaults to ``Settings.oracle_max_samples``

    Returns:
        Transformed samples with the same shape as ``x``

    Raises:
        InvalidArgumentError: If the input exceeds the oracle cap
    """
    arr = as_complex_array(x, name="x")
    cap = get_settings().oracle_max_samples if max_samples is None else max_samples
    if arr.size > cap:
        raise InvalidArgumentError(f"Oracle input has {arr.size} samples, cap is {cap}")

    sign = Direction(direction).sign
    if arr.ndim == 1:
        return _kernel_matrix(arr.shape[0], sign) @ arr
    rows = _kernel_matrix(arr.shape[0], sign)
    cols = _kernel_matrix(arr.shape[1], sign)
    return rows @ arr @ cols.T
