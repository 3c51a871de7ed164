"""Partitioning, accumulation and rendering of progressively delivered holograms."""

import numpy as np

from holofourier.core.logging import get_logger
from holofourier.dft.transforms import Direction, udft
from holofourier.holographic.models import Hologram, WindowSpec
from holofourier.holographic.recovery import rescale_amplitude
from holofourier.progressive.models import Packet, ReceiverState, RenderResult
from holofourier.shared.arrays import ComplexArray
from holofourier.shared.exceptions import (
    IntegrityError,
    InvalidArgumentError,
    InvalidStateError,
    ProtocolError,
)

logger = get_logger(__name__)


def partition(h: Hologram, num_packets: int) -> list[Packet]:
    """Split a hologram into equal contiguous windows along its leading axis.

    1D holograms are cut into intervals, 2D holograms into row bands.

    Args:
        h: Hologram to send
        num_packets: Number of packets; must divide the leading-axis length

    Returns:
        Packets in window order

    Raises:
        InvalidArgumentError: If num_packets does not divide the leading axis
    """
    leading = h.source_shape[0]
    if num_packets < 1 or leading % num_packets != 0:
        raise InvalidArgumentError(
            f"Packet count {num_packets} does not divide leading axis length {leading}"
        )

    band = leading // num_packets
    packets = []
    for i in range(num_packets):
        if h.ndim == 1:
            window = WindowSpec.span(i * band, band)
        else:
            window = WindowSpec.rect(i * band, band, 0, h.source_shape[1])
        packets.append(
            Packet(
                packet_id=i,
                total_packets=num_packets,
                window=window,
                payload=h.data[window.slices],
                source_dims=h.source_shape,
            )
        )
    logger.debug("progressive.partition.completed", packets=num_packets, band=band)
    return packets


def accumulate(state: ReceiverState, p: Packet) -> ReceiverState:
    """Store a packet in the receiver.

    Duplicates with identical content are ignored.

    Returns:
        The same state, updated

    Raises:
        ProtocolError: If the packet's dims or total disagree with the
            receiver, or its window overlaps a different stored packet
        IntegrityError: If a packet id arrives twice with different content
    """
    if p.source_dims != state.source_dims:
        raise ProtocolError(
            f"Packet dims {p.source_dims} do not match receiver dims {state.source_dims}"
        )
    if p.total_packets != state.expected_total:
        raise ProtocolError(
            f"Packet total {p.total_packets} does not match expected {state.expected_total}"
        )

    with state.lock:
        existing = state.received.get(p.packet_id)
        if existing is not None:
            if not existing.same_content(p):
                raise IntegrityError(f"Conflicting duplicate of packet {p.packet_id}")
            logger.debug("progressive.packet.duplicate", packet_id=p.packet_id)
            return state

        covered = np.zeros(state.source_dims, dtype=bool)
        for other in state.received.values():
            covered[other.window.slices] = True
        if covered[p.window.slices].any():
            raise ProtocolError(f"Packet {p.packet_id} overlaps a received window")

        state.received[p.packet_id] = p

    logger.debug(
        "progressive.packet.accepted",
        packet_id=p.packet_id,
        received=len(state.received),
        expected=state.expected_total,
    )
    return state


def _window_recovery(p: Packet) -> ComplexArray:
    extended = np.zeros(p.source_dims, dtype=np.complex128)
    extended[p.window.slices] = p.payload
    return udft(extended, Direction.INVERSE)


def render(state: ReceiverState) -> RenderResult:
    """Reconstruct from every received packet.

    Per-window recoveries are summed in ascending packet id, so the result
    is bit-identical for any arrival order. The sum is rescaled by
    sqrt(M / L) with L the number of received samples.

    Raises:
        InvalidStateError: If no packet has been received
    """
    ids = state.packet_ids()
    if not ids:
        raise InvalidStateError("Cannot render before any packet is received")

    recovered = np.zeros(state.source_dims, dtype=np.complex128)
    for packet_id in ids:
        recovered = recovered + _window_recovery(state.received[packet_id])

    image = rescale_amplitude(recovered, state.received_samples, state.size)
    logger.debug(
        "progressive.render.completed",
        packets=len(ids),
        coverage=state.coverage,
    )
    return RenderResult(
        recovered=recovered,
        image=image,
        coverage=state.coverage,
        packet_ids=tuple(ids),
    )
