"""Tests for holofourier.progressive.channel."""

import numpy as np
import pytest

from holofourier.holographic.encoding import encode_with_seed
from holofourier.progressive.channel import simulate_channel
from holofourier.progressive.models import ChannelConfig
from holofourier.progressive.transmission import partition
from holofourier.shared.exceptions import InvalidArgumentError


class TestSimulateChannel:
    """Tests for the lossy, reordering channel."""

    def test_lossless_identity(self, packets) -> None:
        """Test that no loss and no reorder delivers everything in order."""
        delivered = simulate_channel(packets, ChannelConfig(loss_rate=0.0, reorder=False, seed=1))
        assert [p.packet_id for p in delivered] == list(range(8))

    def test_total_loss(self, packets) -> None:
        """Test that loss_rate=1 delivers nothing."""
        assert simulate_channel(packets, ChannelConfig(loss_rate=1.0, seed=1)) == []

    def test_binomial_survivors(self) -> None:
        """Test that 1000 packets at 25% loss keep 750 within 3 sigma."""
        packets = partition(encode_with_seed(np.ones(1000), seed=0), 1000)
        delivered = simulate_channel(packets, ChannelConfig(loss_rate=0.25, seed=42))
        sigma = np.sqrt(1000 * 0.25 * 0.75)
        assert abs(len(delivered) - 750) <= 3 * sigma

    def test_deterministic(self, packets) -> None:
        """Test that the same seed gives the same delivery."""
        config = ChannelConfig(loss_rate=0.3, reorder=True, seed=9)
        first = [p.packet_id for p in simulate_channel(packets, config)]
        second = [p.packet_id for p in simulate_channel(packets, config)]
        assert first == second

    def test_reorder_permutes(self, packets) -> None:
        """Test that reordering keeps the same packets in a different order."""
        delivered = simulate_channel(packets, ChannelConfig(loss_rate=0.0, reorder=True, seed=3))
        ids = [p.packet_id for p in delivered]
        assert sorted(ids) == list(range(8))
        assert ids != list(range(8))

    @pytest.mark.parametrize("rate", [-0.1, 1.5])
    def test_invalid_loss_rate(self, rate: float) -> None:
        """Test that loss rates outside [0, 1] are rejected."""
        with pytest.raises(InvalidArgumentError, match="Loss rate"):
            ChannelConfig(loss_rate=rate)
