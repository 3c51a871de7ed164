"""Progressive transmission of holograms in independent windows."""

from holofourier.progressive.channel import simulate_channel
from holofourier.progressive.models import ChannelConfig, Packet, ReceiverState, RenderResult
from holofourier.progressive.transmission import accumulate, partition, render
from holofourier.progressive.wire import decode_packet, encode_packet

__all__ = [
    "ChannelConfig",
    "Packet",
    "ReceiverState",
    "RenderResult",
    "accumulate",
    "decode_packet",
    "encode_packet",
    "partition",
    "render",
    "simulate_channel",
]
