"""Shared pytest fixtures for holofourier tests."""

from collections.abc import Callable, Iterator

import numpy as np
import pytest

from holofourier.core.config import Settings

ComplexSampler = Callable[[tuple[int, ...]], np.ndarray]


@pytest.fixture
def rng() -> np.random.Generator:
    """Deterministic generator for test inputs.

    Returns:
        numpy Generator seeded with a fixed value
    """
    return np.random.default_rng(20240611)


@pytest.fixture
def random_complex(rng: np.random.Generator) -> ComplexSampler:
    """Sampler for complex Gaussian arrays of a given shape.

    Args:
        rng: Deterministic generator fixture

    Returns:
        Function mapping a shape to a complex128 array
    """

    def sample(shape: tuple[int, ...]) -> np.ndarray:
        return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)

    return sample


@pytest.fixture
def test_settings() -> Settings:
    """Create Settings instance with test values.

    Returns:
        Settings instance configured for testing
    """
    return Settings(
        log_level="INFO",
        default_seed=0,
        oracle_max_samples=4096,
        stats_workers=1,
    )


@pytest.fixture(autouse=True)
def reset_settings_cache() -> Iterator[None]:
    """Reset the global settings cache before and after each test.

    This ensures tests don't interfere with each other via cached settings.
    """
    import holofourier.core.config

    holofourier.core.config._settings = None

    yield

    holofourier.core.config._settings = None
