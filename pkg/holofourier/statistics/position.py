"""Sensitivity of retained energy to where the crop is taken."""

import numpy as np
import numpy.typing as npt

from holofourier.core.logging import get_logger
from holofourier.dft.transforms import Direction, udft_1d
from holofourier.holographic.models import WindowSpec
from holofourier.holographic.phase import generate_phase
from holofourier.shared.arrays import as_complex_array, check_seed
from holofourier.shared.exceptions import InvalidArgumentError
from holofourier.statistics.models import PositionReport

logger = get_logger(__name__)


def position_sensitivity(
    signal: npt.ArrayLike,
    length: int,
    starts: list[int],
    trials: int = 50,
    base_seed: int = 0,
) -> PositionReport:
    """Compare holographic and plain crops of length L at several starts.

    For each start the retained fraction sum_{u in W} |H(u)|^2 / sum |I|^2 is
    averaged over ``trials`` phase fields. The plain transform uses zero
    phase, so its fraction depends on which frequencies the crop keeps.

    Args:
        signal: 1D source signal, not identically zero
        length: Window length L
        starts: Window starts to compare
        trials: Number of phase fields, >= 1
        base_seed: Seed of trial 0

    Returns:
        PositionReport with one fraction per start for each representation

    Raises:
        InvalidArgumentError: On an invalid window, empty starts, a zero
            signal or trials < 1
    """
    source = as_complex_array(signal, ndim=1, name="signal")
    m = source.size
    if not starts:
        raise InvalidArgumentError("At least one window start is required")
    if trials < 1:
        raise InvalidArgumentError(f"Trials must be >= 1, got {trials}")
    check_seed(base_seed)
    masks = []
    for a in starts:
        window = WindowSpec.span(a, length)
        masks.append(window.mask((m,)))

    total = float(np.sum(np.abs(source) ** 2))
    if total == 0.0:
        raise InvalidArgumentError("Signal has zero energy")

    plain_power = np.abs(udft_1d(source, Direction.FORWARD)) ** 2
    plain = [float(np.sum(plain_power[mask])) / total for mask in masks]

    holographic = np.zeros(len(starts))
    for t in range(trials):
        phase = generate_phase(base_seed + t, (m,))
        power = np.abs(udft_1d(source * phase.factor, Direction.FORWARD)) ** 2
        holographic += [np.sum(power[mask]) for mask in masks]
    holographic /= trials * total

    report = PositionReport(
        length=length,
        size=m,
        starts=list(starts),
        holographic_fraction=holographic.tolist(),
        plain_fraction=plain,
        trials=trials,
    )
    logger.info(
        "statistics.position.completed",
        length=length,
        size=m,
        holographic_spread=report.holographic_spread,
        plain_spread=report.plain_spread,
    )
    return report
