"""Full and windowed recovery of a source signal from its hologram.

Every recovery applies the INVERSE transform. The zero-extended path keeps
the full index set and masks the hologram; the compact path crops the
hologram and transforms only the L retained samples.
"""

from typing import Literal

import numpy as np
import numpy.typing as npt

from holofourier.core.logging import get_logger
from holofourier.dft.kernels import phi_l
from holofourier.dft.transforms import Direction, udft
from holofourier.holographic.models import Hologram, PhaseField, WindowSpec
from holofourier.shared.arrays import ComplexArray, RealArray, as_complex_array
from holofourier.shared.exceptions import InvalidArgumentError

logger = get_logger(__name__)

Comparison = Literal["amplitude", "complex"]


def recover_full(h: Hologram) -> ComplexArray:
    """Inverse transform of the whole hologram.

    Returns ``I(r) exp(j 2 pi P(r))``; its modulus is the source amplitude
    and needs no knowledge of P.
    """
    return udft(h.data, Direction.INVERSE)


def recover_amplitude(h: Hologram) -> RealArray:
    """Amplitude view |recover_full(h)|."""
    return np.abs(recover_full(h))


def recover_source(h: Hologram) -> ComplexArray:
    """Complex source I(r), removing the stored phase factor."""
    return recover_full(h) * np.conj(h.phase.factor)


def recover_masked(h: Hologram, mask: npt.ArrayLike) -> ComplexArray:
    """Zero-extended recovery through an arbitrary indicator mask.

    Args:
        h: Hologram
        mask: Boolean (or 0/1) array with the hologram's shape

    Returns:
        Full-size inverse transform of ``H * mask``

    Raises:
        InvalidArgumentError: If the mask shape differs from the hologram
    """
    indicator = np.asarray(mask)
    if indicator.shape != h.source_shape:
        raise InvalidArgumentError(
            f"Mask shape {indicator.shape} does not match hologram shape {h.source_shape}"
        )
    return udft(h.data * indicator.astype(np.float64), Direction.INVERSE)


def recover_windowed_zero_extended(h: Hologram, w: WindowSpec) -> ComplexArray:
    """Recover from the cropped hologram H(u) W(u) at full length M.

    I_W(r) = sum_u H(u) W(u) (1/sqrt(M)) exp(-j 2 pi u r / M)

    Raises:
        InvalidArgumentError: If the window does not fit the hologram
    """
    recovered = recover_masked(h, w.mask(h.source_shape))
    logger.debug(
        "holographic.recover.windowed",
        path="zero_extended",
        starts=list(w.starts),
        lengths=list(w.lengths),
    )
    return recovered


def _window_kernel(start: int, length: int, m: int) -> ComplexArray:
    """M x M matrix exp(-j (2 pi / M) c (r - k)) phi_L(r - k), c = a + (L-1)/2."""
    r = np.arange(m)
    d = r[:, None] - r[None, :]
    centre = start + (length - 1) / 2.0
    return np.exp(-2j * np.pi * centre * d / m) * phi_l(d, length, m)


def recover_windowed_closed_form(
    signal: npt.ArrayLike, phase: PhaseField, w: WindowSpec
) -> ComplexArray:
    """Evaluate the windowed recovery from the source, without a transform.

    In 1D this is

        I_W(r) = exp(-j (2 pi / M) c r) sum_k I(k) exp(j 2 pi P'(k)) phi_L(r - k)

    with ``c = a + (L-1)/2`` and ``P'(k) = P(k) + c k / M``. In 2D the kernel
    is applied separably along rows and columns. Costs O(M^2) per axis.

    Raises:
        InvalidArgumentError: On shape mismatch or an invalid window
    """
    source = as_complex_array(signal, name="signal")
    if source.shape != phase.shape:
        raise InvalidArgumentError(
            f"Signal shape {source.shape} does not match phase shape {phase.shape}"
        )
    w.check_fits(source.shape)

    modulated = source * phase.factor
    kernels = [
        _window_kernel(a, n, m)
        for a, n, m in zip(w.starts, w.lengths, source.shape, strict=True)
    ]
    if source.ndim == 1:
        return kernels[0] @ modulated
    return kernels[0] @ modulated @ kernels[1].T


def recover_windowed_compact(h: Hologram, w: WindowSpec) -> ComplexArray:
    """Transform only the cropped samples.

    I_T(r) = sum_{k=0}^{L-1} H(k + a) (1/sqrt(L)) exp(-j 2 pi r k / L)

    Returns:
        Array with the window's shape (length L in 1D)

    Raises:
        InvalidArgumentError: If the window does not fit the hologram
    """
    w.check_fits(h.source_shape)
    return udft(h.data[w.slices], Direction.INVERSE)


def subsampling_discrepancy(h: Hologram, w: WindowSpec, compare: Comparison = "amplitude") -> float:
    """Max deviation between the compact recovery and the subsampled zero-extended one.

    Along each axis ``I_T(r') = sqrt(M/L) I_W(M r' / L) exp(j 2 pi a r' / L)``.
    ``compare="amplitude"`` checks moduli only; ``"complex"`` also checks the
    linear phase ramp.

    Raises:
        InvalidArgumentError: If L does not divide M on some axis
    """
    w.check_fits(h.source_shape)
    for n, m in zip(w.lengths, h.source_shape, strict=True):
        if m % n != 0:
            raise InvalidArgumentError(f"Subsampling needs L to divide M, got L={n}, M={m}")
    if compare not in ("amplitude", "complex"):
        raise InvalidArgumentError(f"Unknown comparison: {compare}")

    compact = recover_windowed_compact(h, w)
    extended = recover_windowed_zero_extended(h, w)
    steps = tuple(m // n for n, m in zip(w.lengths, h.source_shape, strict=True))
    sampled = extended[tuple(slice(None, None, s) for s in steps)] * np.sqrt(h.size / w.size)

    if compare == "amplitude":
        return float(np.max(np.abs(np.abs(compact) - np.abs(sampled))))

    ramp = np.ones(w.lengths, dtype=np.complex128)
    for axis, (a, n) in enumerate(zip(w.starts, w.lengths, strict=True)):
        shape = [1] * w.ndim
        shape[axis] = n
        ramp = ramp * np.exp(2j * np.pi * a * np.arange(n) / n).reshape(shape)
    return float(np.max(np.abs(compact - sampled * ramp)))


def check_subsampling_relation(h: Hologram, w: WindowSpec) -> float:
    """Amplitude form of the subsampling relation: max | |I_T| - sqrt(M/L) |I_W(M r'/L)| |."""
    return subsampling_discrepancy(h, w, compare="amplitude")


def rescale_amplitude(x: npt.ArrayLike, length: int, m: int) -> ComplexArray:
    """Multiply by sqrt(M/L) so a windowed recovery estimates the source scale.

    For 2D windows pass the window area and the hologram size.

    Raises:
        InvalidArgumentError: If not 1 <= L <= M
    """
    if not 1 <= length <= m:
        raise InvalidArgumentError(f"Rescale needs 1 <= L <= M, got L={length}, M={m}")
    return np.asarray(x, dtype=np.complex128) * np.sqrt(m / length)
