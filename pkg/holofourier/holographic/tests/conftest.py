"""Fixtures for holographic tests."""

import numpy as np
import pytest

from holofourier.holographic.encoding import encode_with_seed
from holofourier.holographic.models import Hologram


@pytest.fixture
def nonnegative_signal(rng: np.random.Generator) -> np.ndarray:
    """Random nonnegative real signal of length 64."""
    return rng.random(64)


@pytest.fixture
def hologram_1d(random_complex) -> tuple[np.ndarray, Hologram]:
    """A random length-16 complex signal and its seed-7 hologram."""
    signal = random_complex((16,))
    return signal, encode_with_seed(signal, seed=7)


@pytest.fixture
def hologram_2d(random_complex) -> tuple[np.ndarray, Hologram]:
    """A random 8x12 complex image and its seed-11 hologram."""
    image = random_complex((8, 12))
    return image, encode_with_seed(image, seed=11)
