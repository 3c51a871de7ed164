"""Riemann-sum realization of the continuous holographic transform.

The spectrum uses the kernel exp(-j 2 pi omega y), so the regularized
inverse with exp(+j 2 pi omega x) returns f(x) exp(j 2 pi P(x)) as n grows.
All integrals are left-endpoint Riemann sums over the sample grid.
"""

import math
from typing import overload

import numpy as np
import numpy.typing as npt

from holofourier.chft.models import BoxFilter, RegularizationIndex, SampledFunction
from holofourier.dft.kernels import sinc
from holofourier.holographic.models import PhaseField
from holofourier.holographic.phase import generate_phase
from holofourier.shared.arrays import ComplexArray, RealArray, as_complex_array, as_real_vector
from holofourier.shared.exceptions import InvalidArgumentError
from holofourier.statistics.moments import lemma1_predicted_moments

# Generator id for knot-interpolated phases; not regenerable by generate_phase
SMOOTH_GENERATOR = "numpy-pcg64-knots"


def chft_phase(seed: int, f: SampledFunction, correlation: float | None = None) -> PhaseField:
    """Random phase P(y_n) for a sampled function.

    With ``correlation=None`` every grid point gets an independent uniform
    sample. With a positive correlation length, independent uniform knots
    are placed every ``correlation`` units from y0 and joined by a cosine
    blend along the shortest arc of the phase circle, so exp(j 2 pi P) is
    continuously differentiable in y and does not depend on the grid step.

    Args:
        seed: Phase seed
        f: Function whose grid the phase is evaluated on
        correlation: Knot spacing, or None for i.i.d. samples

    Returns:
        PhaseField with one value per sample

    Raises:
        InvalidArgumentError: If correlation is not positive
    """
    if correlation is None:
        return generate_phase(seed, (f.count,))
    if not correlation > 0:
        raise InvalidArgumentError(f"Phase correlation length must be positive, got {correlation}")

    position = (f.grid - f.y0) / correlation
    knots = generate_phase(seed, (int(math.floor(position[-1])) + 2,)).values
    index = np.floor(position).astype(np.int64)
    blend = (1.0 - np.cos(np.pi * (position - index))) / 2.0
    step = knots[index + 1] - knots[index]
    step = step - np.round(step)
    values = np.mod(knots[index] + blend * step, 1.0)
    values = np.where(values >= 1.0, 0.0, values)
    return PhaseField(values=values, seed=seed, generator_id=SMOOTH_GENERATOR)


def _modulated(f: SampledFunction, phase: PhaseField) -> ComplexArray:
    if phase.shape != (f.count,):
        raise InvalidArgumentError(
            f"Phase has shape {phase.shape}, function has {f.count} samples"
        )
    return f.samples * phase.factor


def chft_forward(f: SampledFunction, phase: PhaseField, omega_grid: npt.ArrayLike) -> ComplexArray:
    """H(omega) = sum_n f(y_n) exp(-j 2 pi omega y_n) exp(j 2 pi P(y_n)) dy.

    Raises:
        InvalidArgumentError: If the phase length differs from N
    """
    omega = as_real_vector(omega_grid, name="omega_grid")
    g = _modulated(f, phase)
    kernel = np.exp(-2j * np.pi * np.outer(omega, f.grid))
    return (kernel @ g) * f.dy


@overload
def box_kernel(w: BoxFilter, x: float) -> float: ...


@overload
def box_kernel(w: BoxFilter, x: RealArray) -> RealArray: ...


def box_kernel(w: BoxFilter, x: float | RealArray) -> float | RealArray:
    """Spatial form of the box filter, w(x) = 2k sinc(2 pi k x)."""
    values = 2.0 * w.cutoff * sinc(2.0 * np.pi * w.cutoff * np.asarray(x, dtype=np.float64))
    if values.ndim == 0:
        return float(values)
    return values


def _box_weights(f: SampledFunction, w: BoxFilter, x: RealArray) -> RealArray:
    return box_kernel(w, x[:, None] - f.grid[None, :]) * f.dy


def windowed_reconstruct(
    f: SampledFunction, phase: PhaseField, w: BoxFilter, x_grid: npt.ArrayLike
) -> ComplexArray:
    """g(x) = sum_n f(y_n) w(x - y_n) dy exp(j 2 pi P(y_n)).

    Raises:
        InvalidArgumentError: If the phase length differs from N
    """
    x = as_real_vector(x_grid, name="x_grid")
    return _box_weights(f, w, x) @ _modulated(f, phase)


def amplitude_estimate(f: SampledFunction, w: BoxFilter, x: float) -> float:
    """Predicted |g(x)| for random phase: the root sum of squared weights.

    The weights f(y_n) w(x - y_n) dy do not involve the phase; their root
    sum of squares is sqrt(E|g(x)|^2).
    """
    weights = f.samples * _box_weights(f, w, np.array([x], dtype=np.float64))[0]
    energy, _ = lemma1_predicted_moments(np.abs(weights))
    return math.sqrt(energy)


@overload
def gaussian_kernel(n: RegularizationIndex, d: float) -> float: ...


@overload
def gaussian_kernel(n: RegularizationIndex, d: RealArray) -> RealArray: ...


def gaussian_kernel(n: RegularizationIndex, d: float | RealArray) -> float | RealArray:
    """k_n(d) = n sqrt(pi) exp(-pi^2 n^2 d^2), the transform of exp(-omega^2 / n^2).

    Integrates to 1 over d and peaks at n sqrt(pi).
    """
    offsets = np.asarray(d, dtype=np.float64)
    values = n.n * math.sqrt(math.pi) * np.exp(-((math.pi * n.n * offsets) ** 2))
    if values.ndim == 0:
        return float(values)
    return values


def regularized_inverse(
    f: SampledFunction, phase: PhaseField, n: RegularizationIndex, x_grid: npt.ArrayLike
) -> ComplexArray:
    """f_n(x) = sum_m f(y_m) exp(j 2 pi P(y_m)) k_n(x - y_m) dy.

    Tends to f(x) exp(j 2 pi P(x)) as n grows, provided the phase is smooth
    on the scale 1/n.

    Raises:
        InvalidArgumentError: If the phase length differs from N
    """
    x = as_real_vector(x_grid, name="x_grid")
    kernel = gaussian_kernel(n, x[:, None] - f.grid[None, :]) * f.dy
    return kernel @ _modulated(f, phase)


def regularized_inverse_from_spectrum(
    spectrum: npt.ArrayLike,
    omega_grid: npt.ArrayLike,
    n: RegularizationIndex,
    x_grid: npt.ArrayLike,
) -> ComplexArray:
    """f_n(x) = integral of H(omega) exp(j 2 pi omega x) exp(-omega^2 / n^2) d omega.

    Trapezoid quadrature over the supplied (increasing) omega grid; the grid
    must cover the band where exp(-omega^2 / n^2) is significant.

    Raises:
        InvalidArgumentError: If grids are mismatched or omega is not increasing
    """
    h = as_complex_array(spectrum, ndim=1, name="spectrum")
    omega = as_real_vector(omega_grid, name="omega_grid")
    x = as_real_vector(x_grid, name="x_grid")
    if h.shape != omega.shape:
        raise InvalidArgumentError(
            f"Spectrum has {h.size} samples, omega grid has {omega.size}"
        )
    if omega.size < 2 or np.any(np.diff(omega) <= 0):
        raise InvalidArgumentError("Omega grid must be strictly increasing with at least 2 points")

    integrand = (h * np.exp(-((omega / n.n) ** 2)))[None, :] * np.exp(
        2j * np.pi * np.outer(x, omega)
    )
    return np.trapezoid(integrand, omega, axis=1)
