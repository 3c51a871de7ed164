"""Deterministic lossy, reordering channel."""

from collections.abc import Sequence

import numpy as np

from holofourier.core.logging import get_logger
from holofourier.progressive.models import ChannelConfig, Packet

logger = get_logger(__name__)


def simulate_channel(packets: Sequence[Packet], config: ChannelConfig) -> list[Packet]:
    """Drop each packet independently with ``loss_rate`` and optionally shuffle.

    The same packets and config always give the same delivery sequence.
    """
    rng = np.random.default_rng(config.seed)
    keep = rng.random(len(packets)) >= config.loss_rate
    delivered = [p for p, kept in zip(packets, keep, strict=True) if kept]
    if config.reorder and delivered:
        delivered = [delivered[i] for i in rng.permutation(len(delivered))]

    logger.info(
        "progressive.channel.simulated",
        sent=len(packets),
        delivered=len(delivered),
        loss_rate=config.loss_rate,
        reorder=config.reorder,
        seed=config.seed,
    )
    return delivered
