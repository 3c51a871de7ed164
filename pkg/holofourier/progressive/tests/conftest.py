"""Fixtures for progressive transmission tests."""

import numpy as np
import pytest

from holofourier.holographic.encoding import encode_with_seed
from holofourier.holographic.models import Hologram
from holofourier.progressive.models import Packet, ReceiverState
from holofourier.progressive.transmission import partition


@pytest.fixture
def source(rng: np.random.Generator) -> np.ndarray:
    """Random nonnegative signal of length 256."""
    return rng.random(256)


@pytest.fixture
def hologram(source: np.ndarray) -> Hologram:
    """Seed-21 hologram of the source."""
    return encode_with_seed(source, seed=21)


@pytest.fixture
def packets(hologram: Hologram) -> list[Packet]:
    """The hologram cut into 8 packets."""
    return partition(hologram, 8)


@pytest.fixture
def receiver() -> ReceiverState:
    """Empty receiver for a length-256 hologram in 8 packets."""
    return ReceiverState(source_dims=(256,), expected_total=8)
