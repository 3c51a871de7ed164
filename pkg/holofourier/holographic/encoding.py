"""Holographic encoding: H = F[I * exp(j 2 pi P)] in the FORWARD direction."""

import numpy.typing as npt

from holofourier.core.logging import get_logger
from holofourier.dft.transforms import Direction, udft_1d, udft_2d
from holofourier.holographic.models import Hologram, PhaseField, PhaseMode
from holofourier.holographic.phase import generate_phase
from holofourier.shared.arrays import ComplexArray, as_complex_array
from holofourier.shared.exceptions import InvalidArgumentError

logger = get_logger(__name__)


def _phase_mode(phase: PhaseField, embed_phase: bool) -> PhaseMode:
    if embed_phase or not phase.is_reproducible:
        return PhaseMode.EMBEDDED
    return PhaseMode.SEED


def _modulate(signal: ComplexArray, phase: PhaseField) -> ComplexArray:
    if signal.shape != phase.shape:
        raise InvalidArgumentError(
            f"Signal shape {signal.shape} does not match phase shape {phase.shape}"
        )
    return signal * phase.factor


def encode_1d(signal: npt.ArrayLike, phase: PhaseField, embed_phase: bool = False) -> Hologram:
    """Encode a 1D signal.

    H(u) = sum_k I(k) exp(j 2 pi P(k)) (1/sqrt(M)) exp(j 2 pi u k / M)

    Args:
        signal: Length-M complex or real samples
        phase: Phase field of length M
        embed_phase: Store the raw phase raster instead of the seed

    Returns:
        Hologram of length M

    Raises:
        InvalidArgumentError: If shapes mismatch or the signal is invalid
    """
    samples = as_complex_array(signal, ndim=1, name="signal")
    data = udft_1d(_modulate(samples, phase), Direction.FORWARD)
    return Hologram(data=data, phase=phase, phase_mode=_phase_mode(phase, embed_phase))


def encode_2d(image: npt.ArrayLike, phase: PhaseField, embed_phase: bool = False) -> Hologram:
    """Encode a 2D image with the separable FORWARD transform.

    Raises:
        InvalidArgumentError: If shapes mismatch or the image is invalid
    """
    samples = as_complex_array(image, ndim=2, name="image")
    data = udft_2d(_modulate(samples, phase), Direction.FORWARD)
    return Hologram(data=data, phase=phase, phase_mode=_phase_mode(phase, embed_phase))


def encode(signal: npt.ArrayLike, phase: PhaseField, embed_phase: bool = False) -> Hologram:
    """Encode a 1D signal or 2D image, dispatching on dimensionality."""
    samples = as_complex_array(signal, name="signal")
    if samples.ndim == 1:
        return encode_1d(samples, phase, embed_phase)
    return encode_2d(samples, phase, embed_phase)


def encode_with_seed(signal: npt.ArrayLike, seed: int, embed_phase: bool = False) -> Hologram:
    """Generate the phase field from ``seed`` and encode.

    Args:
        signal: 1D signal or 2D image
        seed: Phase seed shared with the decoder
        embed_phase: Store the raw phase raster instead of the seed

    Returns:
        Hologram of the same shape as the input
    """
    samples = as_complex_array(signal, name="signal")
    phase = generate_phase(seed, samples.shape)
    hologram = encode(samples, phase, embed_phase)
    logger.debug(
        "holographic.encode.completed",
        shape=list(samples.shape),
        seed=seed,
        phase_mode=hologram.phase_mode.name.lower(),
    )
    return hologram
