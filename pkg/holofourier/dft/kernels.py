"""Closed-form kernels and identities built on the unitary DFT.

``sinc`` is the unnormalized ``sin(x)/x`` throughout, with ``sinc(0) = 1``.
"""

import cmath
import math
from typing import overload

import numpy as np
import numpy.typing as npt

from holofourier.shared.arrays import ComplexArray, RealArray, as_complex_array
from holofourier.shared.exceptions import InvalidArgumentError

# Below this magnitude sin(x)/x is replaced by its Taylor expansion
_SINC_SERIES_CUTOFF = 1e-8


def sinc(x: npt.ArrayLike) -> RealArray:
    """Unnormalized sinc, sin(x)/x, exact at the removable singularity."""
    arr = np.asarray(x, dtype=np.float64)
    small = np.abs(arr) < _SINC_SERIES_CUTOFF
    safe = np.where(small, 1.0, arr)
    return np.where(small, 1.0 - arr * arr / 6.0, np.sin(safe) / safe)


def geometric_exp_sum(x: float, length: int) -> complex:
    """Closed form of sum_{u=0}^{L-1} exp(-j 2 pi x u).

    Evaluates ``L exp(-j (L-1) pi x) sinc(L pi x) / sinc(pi x)``. The sum has
    period 1 in ``x``, so the formula is applied to the offset ``d`` of ``x``
    from its nearest integer, as ``exp(-j (L-1) pi d) sin(L pi d) / sin(pi d)``.
    This keeps the arguments small. Only an exact integer ``x`` takes the
    limit value ``L``; sin(L pi d) / sin(pi d) stays accurate for any nonzero d.

    Args:
        x: Real frequency offset
        length: Number of terms L >= 1

    Returns:
        The complex sum

    Raises:
        InvalidArgumentError: If length < 1
    """
    if length < 1:
        raise InvalidArgumentError(f"Geometric sum length must be >= 1, got {length}")

    d = x - round(x)
    if d == 0.0:
        return complex(length)
    prefactor = cmath.exp(-1j * (length - 1) * math.pi * d)
    return prefactor * (math.sin(length * math.pi * d) / math.sin(math.pi * d))


def _check_window_length(length: int, m: int) -> None:
    if not 1 <= length <= m:
        raise InvalidArgumentError(f"Window length must satisfy 1 <= L <= M, got L={length}, M={m}")


@overload
def phi_l(d: int, length: int, m: int) -> float: ...


@overload
def phi_l(d: npt.NDArray[np.integer] | RealArray, length: int, m: int) -> RealArray: ...


def phi_l(
    d: int | npt.NDArray[np.integer] | RealArray, length: int, m: int
) -> float | RealArray:
    """Periodic-sinc kernel phi_L(d) = L sinc(L pi d / M) / (M sinc(pi d / M)).

    At ``d = 0`` the value is ``L/M``; with ``L = M`` the kernel is the
    Kronecker delta on ``-(M-1) <= d <= M-1``.

    Args:
        d: Integer offset(s) r - k
        length: Window length L
        m: Signal length M

    Returns:
        Kernel value(s), scalar for scalar input

    Raises:
        InvalidArgumentError: If L is outside [1, M] or |d| > M-1
    """
    _check_window_length(length, m)
    offsets = np.asarray(d, dtype=np.float64)
    if np.any(np.abs(offsets) > m - 1):
        raise InvalidArgumentError(f"Kernel offset must lie in [-(M-1), M-1] for M={m}")

    if length == m:
        values = (offsets == 0).astype(np.float64)
    else:
        values = length * sinc(length * np.pi * offsets / m) / (m * sinc(np.pi * offsets / m))

    if values.ndim == 0:
        return float(values)
    return values


def sinc_ratio_sum(length: int, m: int, r: int) -> float:
    """Direct sum over k of sinc^2(L pi (r-k) / M) / sinc^2(pi (r-k) / M).

    The sum equals M/L for every r; this evaluates it term by term so the
    identity can be checked rather than assumed.

    Raises:
        InvalidArgumentError: If L is outside [1, M] or r is outside [0, M)
    """
    _check_window_length(length, m)
    if not 0 <= r < m:
        raise InvalidArgumentError(f"Index r must satisfy 0 <= r < M, got r={r}, M={m}")

    offsets = r - np.arange(m, dtype=np.float64)
    numerator = sinc(length * np.pi * offsets / m) ** 2
    denominator = sinc(np.pi * offsets / m) ** 2
    return float(np.sum(numerator / denominator))


def circular_convolve(x1: npt.ArrayLike, h: npt.ArrayLike) -> ComplexArray:
    """Circular convolution x2(n) = sum_k h((n-k) mod N) x1(k).

    Evaluated from the definition, so it can serve as an independent check
    of the convolution theorem.

    Raises:
        InvalidArgumentError: If lengths differ or inputs are not 1D
    """
    signal = as_complex_array(x1, ndim=1, name="x1")
    kernel = as_complex_array(h, ndim=1, name="h")
    if signal.shape != kernel.shape:
        raise InvalidArgumentError(
            f"Convolution operands must have equal length, got {signal.size} and {kernel.size}"
        )
    n = signal.size
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return kernel[idx] @ signal
