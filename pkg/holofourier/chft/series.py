"""Fourier series coefficients and their link to the Fourier transform.

For f supported in [-L/2, L/2] the series coefficient a_n equals
(1/L) f_hat(n/L). Both sides are computed here by separate quadratures.
"""

import numpy as np

from holofourier.chft.models import SampledFunction
from holofourier.shared.exceptions import InvalidArgumentError


def fourier_series_coefficient(f: SampledFunction, period: float, n: int | float) -> complex:
    """a_n = (1/L) integral over [-L/2, L/2] of f(x) exp(-j 2 pi n x / L) dx.

    Left-endpoint Riemann sum over the samples.

    Args:
        f: Samples lying inside [-L/2, L/2]
        period: Period L > 0
        n: Integer coefficient index

    Returns:
        The complex coefficient

    Raises:
        InvalidArgumentError: If n is not an integer, L <= 0, or the grid
            leaves [-L/2, L/2]
    """
    if isinstance(n, bool) or not float(n).is_integer():
        raise InvalidArgumentError(f"Series index must be an integer, got {n}")
    if not period > 0:
        raise InvalidArgumentError(f"Period must be positive, got {period}")
    first, last = f.extent
    slack = 1e-9 * period
    if first < -period / 2 - slack or last > period / 2 + slack:
        raise InvalidArgumentError(
            f"Samples span [{first}, {last}], outside [-{period / 2}, {period / 2}]"
        )

    basis = np.exp(-2j * np.pi * int(n) * f.grid / period)
    return complex(np.sum(f.samples * basis) * f.dy / period)


def fourier_transform_at(f: SampledFunction, omega: float) -> complex:
    """f_hat(omega) = integral of f(x) exp(-j 2 pi omega x) dx by the trapezoid rule."""
    integrand = f.samples * np.exp(-2j * np.pi * omega * f.grid)
    return complex(np.trapezoid(integrand, dx=f.dy))
