"""Fixtures for CLI tests."""

from pathlib import Path

import numpy as np
import pytest

from holofourier.cli.image_io import format_pgm, format_signal


@pytest.fixture
def gray_image(rng: np.random.Generator) -> np.ndarray:
    """16 x 16 image whose gray levels are multiples of 51 (amplitudes k / 5)."""
    return rng.integers(0, 6, size=(16, 16)) / 5.0


@pytest.fixture
def image_file(tmp_path: Path, gray_image: np.ndarray) -> Path:
    """The gray image written as a PGM file."""
    path = tmp_path / "source.pgm"
    path.write_bytes(format_pgm(gray_image))
    return path


@pytest.fixture
def signal_file(tmp_path: Path, rng: np.random.Generator) -> Path:
    """Length-256 signal with three-decimal samples, as CSV."""
    path = tmp_path / "source.csv"
    path.write_text(format_signal(np.round(rng.random(256), 3)))
    return path
