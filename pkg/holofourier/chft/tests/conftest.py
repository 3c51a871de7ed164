"""Fixtures for continuous-transform tests."""

import pytest

from holofourier.chft.models import SampledFunction
from holofourier.chft.signals import raised_cosine


@pytest.fixture
def bump() -> SampledFunction:
    """Raised cosine on [-1, 1] sampled on [-2, 2) with N=512."""
    return SampledFunction.from_function(raised_cosine, -2.0, 2.0, 512)


@pytest.fixture
def coarse_bump() -> SampledFunction:
    """Raised cosine on [-1, 1] sampled on [-2, 2) with N=128."""
    return SampledFunction.from_function(raised_cosine, -2.0, 2.0, 128)
