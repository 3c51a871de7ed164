"""Seeded random phase generation."""

import numpy as np

from holofourier.holographic.models import DEFAULT_GENERATOR, PhaseField
from holofourier.shared.arrays import check_seed
from holofourier.shared.exceptions import InvalidArgumentError


def _check_shape(shape: tuple[int, ...]) -> tuple[int, ...]:
    if len(shape) not in (1, 2) or any(n < 1 for n in shape):
        raise InvalidArgumentError(f"Phase shape must be 1D or 2D with positive sides, got {shape}")
    return tuple(int(n) for n in shape)


def generate_phase(seed: int, shape: tuple[int, ...]) -> PhaseField:
    """Draw i.i.d. uniform phases in [0, 1) from a seeded PCG64 generator.

    The same (seed, shape) always yields the same field.

    Args:
        seed: 64-bit unsigned seed
        shape: Source signal shape (1D or 2D)

    Returns:
        Reproducible PhaseField
    """
    check_seed(seed)
    shape = _check_shape(shape)
    values = np.random.default_rng(seed).random(shape)
    return PhaseField(values=values, seed=seed, generator_id=DEFAULT_GENERATOR)


def regenerate_phase(seed: int, generator_id: str, shape: tuple[int, ...]) -> PhaseField:
    """Rebuild a phase field from its provenance.

    Raises:
        InvalidArgumentError: If the generator is not one this package provides
    """
    if generator_id != DEFAULT_GENERATOR:
        raise InvalidArgumentError(f"Unknown phase generator: {generator_id}")
    return generate_phase(seed, shape)
