"""Moments of random-phase sums, predicted and sampled.

For V = sum_k exp(j 2 pi theta_k) phi(k) with i.i.d. uniform theta_k the
moments are

    E[V] = 0
    E|V|^2 = sum_k phi(k)^2
    sigma(|V|^2) = sqrt(sum_{k != l} phi(k)^2 phi(l)^2)

Trial t always draws from ``default_rng(base_seed + t)``, so results do not
depend on how trials are scheduled.
"""

import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import numpy as np
import numpy.typing as npt

from holofourier.core.config import get_settings
from holofourier.core.logging import get_logger
from holofourier.dft.kernels import phi_l
from holofourier.holographic.encoding import encode_with_seed
from holofourier.holographic.models import WindowSpec
from holofourier.holographic.recovery import recover_windowed_zero_extended
from holofourier.shared.arrays import as_real_vector, check_seed
from holofourier.shared.exceptions import InvalidArgumentError
from holofourier.statistics.models import MomentReport

logger = get_logger(__name__)

T = TypeVar("T")


def _trial_seeds(trials: int, base_seed: int) -> list[int]:
    if trials < 2:
        raise InvalidArgumentError(f"Need at least 2 trials, got {trials}")
    check_seed(base_seed)
    check_seed(base_seed + trials - 1)
    return [base_seed + t for t in range(trials)]


def _map_trials(trial: Callable[[int], T], seeds: list[int], workers: int | None) -> list[T]:
    """Run ``trial`` once per seed, in seed order, optionally on a thread pool."""
    count = get_settings().stats_workers if workers is None else workers
    if count <= 1:
        return [trial(seed) for seed in seeds]
    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(trial, seeds))


def lemma1_predicted_moments(phi: npt.ArrayLike) -> tuple[float, float]:
    """Predicted (E|V|^2, sigma(|V|^2)) for weights phi.

    Args:
        phi: Real weights, nonempty and finite

    Returns:
        (sum phi^2, sqrt((sum phi^2)^2 - sum phi^4))

    Raises:
        InvalidArgumentError: If phi is empty or non-finite
    """
    weights = as_real_vector(phi, name="phi")
    squares = weights * weights
    energy = float(np.sum(squares))
    off_diagonal = energy * energy - float(np.sum(squares * squares))
    return energy, math.sqrt(max(off_diagonal, 0.0))


def lemma1_empirical_moments(
    phi: npt.ArrayLike,
    trials: int,
    base_seed: int = 0,
    workers: int | None = None,
) -> MomentReport:
    """Sample V under ``trials`` independent uniform phase draws.

    Args:
        phi: Real weights
        trials: Number of realizations, >= 2
        base_seed: Seed of trial 0
        workers: Thread count; defaults to ``Settings.stats_workers``

    Returns:
        MomentReport with predicted and empirical moments

    Raises:
        InvalidArgumentError: If trials < 2 or phi is invalid
    """
    weights = as_real_vector(phi, name="phi")
    seeds = _trial_seeds(trials, base_seed)

    def sample(seed: int) -> complex:
        theta = np.random.default_rng(seed).random(weights.size)
        return complex(np.sum(np.exp(2j * np.pi * theta) * weights))

    v = np.array(_map_trials(sample, seeds, workers), dtype=np.complex128)
    energy = np.abs(v) ** 2
    expected, sigma = lemma1_predicted_moments(weights)
    mean_v = complex(np.mean(v))

    report = MomentReport(
        expected_energy=expected,
        predicted_sigma=sigma,
        empirical_mean_energy=float(np.mean(energy)),
        empirical_sigma=float(np.std(energy, ddof=1)),
        empirical_mean_re=mean_v.real,
        empirical_mean_im=mean_v.imag,
        trials=trials,
        seeds=seeds,
    )
    logger.info(
        "statistics.moments.completed",
        weights=weights.size,
        trials=trials,
        base_seed=base_seed,
        expected_energy=expected,
        empirical_mean_energy=report.empirical_mean_energy,
    )
    return report


def windowed_predicted_moments(m: int, length: int, i0: float = 1.0) -> tuple[float, float]:
    """Predicted moments of |I_W(r)|^2 for a constant source I0.

    The recovery at r is a random-phase sum with weights I0 phi_L(r - k),
    whose squared magnitudes do not depend on r.

    Returns:
        ((L/M) I0^2, sigma) from the phi_L row at r = 0

    Raises:
        InvalidArgumentError: If not 1 <= L <= M
    """
    row = phi_l(-np.arange(m), length, m)
    return lemma1_predicted_moments(abs(i0) * row)


def windowed_energy_experiment(
    m: int,
    length: int,
    start: int,
    i0: float = 1.0,
    trials: int = 200,
    base_seed: int = 0,
    workers: int | None = None,
) -> MomentReport:
    """Measure |I_W(r)|^2 for a constant source over independent phase fields.

    The empirical mean and sigma are taken over every r and every trial.

    Args:
        m: Signal length M
        length: Window length L
        start: Window start a
        i0: Source amplitude
        trials: Number of phase fields, >= 2
        base_seed: Seed of trial 0
        workers: Thread count; defaults to ``Settings.stats_workers``

    Returns:
        MomentReport whose prediction is (L/M) I0^2

    Raises:
        InvalidArgumentError: On an invalid window or trials < 2
    """
    window = WindowSpec.span(start, length)
    window.check_fits((m,))
    seeds = _trial_seeds(trials, base_seed)
    source = np.full(m, float(i0))

    def sample(seed: int) -> npt.NDArray[np.float64]:
        h = encode_with_seed(source, seed)
        return np.abs(recover_windowed_zero_extended(h, window)) ** 2

    energy = np.stack(_map_trials(sample, seeds, workers))
    expected, sigma = windowed_predicted_moments(m, length, i0)

    report = MomentReport(
        expected_energy=expected,
        predicted_sigma=sigma,
        empirical_mean_energy=float(np.mean(energy)),
        empirical_sigma=float(np.std(energy)),
        trials=trials,
        seeds=seeds,
    )
    logger.info(
        "statistics.windowed.completed",
        m=m,
        length=length,
        start=start,
        trials=trials,
        expected_energy=expected,
        empirical_mean_energy=report.empirical_mean_energy,
    )
    return report
