"""Tests for holofourier.shared.arrays."""

import numpy as np
import pytest

from holofourier.shared.arrays import as_complex_array, as_real_vector, check_seed
from holofourier.shared.exceptions import InvalidArgumentError


class TestAsComplexArray:
    """Tests for as_complex_array."""

    def test_real_input_becomes_complex(self) -> None:
        """Test that real samples are promoted to complex128."""
        arr = as_complex_array([[1.0, 2.0], [3.0, 4.0]])
        assert arr.dtype == np.complex128
        assert arr.shape == (2, 2)
        assert arr[1, 0] == 3.0 + 0.0j

    def test_required_ndim(self) -> None:
        """Test that a 2D array is rejected where 1D is required."""
        with pytest.raises(InvalidArgumentError, match="signal must be 1D, got 2D"):
            as_complex_array(np.ones((2, 2)), ndim=1, name="signal")

    @pytest.mark.parametrize(
        "value, message",
        [
            (np.ones((2, 2, 2)), "must be 1D or 2D"),
            (np.zeros(0), "must not be empty"),
            (np.zeros((3, 0)), "must not be empty"),
            ([1.0, np.nan], "non-finite"),
            ([1.0, complex(0, np.inf)], "non-finite"),
        ],
    )
    def test_rejects(self, value, message: str) -> None:
        """Test that bad shapes and non-finite samples raise."""
        with pytest.raises(InvalidArgumentError, match=message):
            as_complex_array(value)


class TestAsRealVector:
    """Tests for as_real_vector."""

    def test_accepts_list(self) -> None:
        """Test that a list becomes a float64 vector."""
        arr = as_real_vector([1, 2, 3])
        assert arr.dtype == np.float64
        np.testing.assert_array_equal(arr, [1.0, 2.0, 3.0])

    @pytest.mark.parametrize("value", [[], [[1.0, 2.0]], [1.0, np.inf]])
    def test_rejects(self, value) -> None:
        """Test that empty, 2D and non-finite weights raise."""
        with pytest.raises(InvalidArgumentError, match="weights"):
            as_real_vector(value)


def test_check_seed_bounds() -> None:
    """Test that seeds outside [0, 2**64) raise and edges pass."""
    assert check_seed(0) == 0
    assert check_seed(2**64 - 1) == 2**64 - 1
    for bad in (-1, 2**64):
        with pytest.raises(InvalidArgumentError, match="Seed must be in"):
            check_seed(bad)
