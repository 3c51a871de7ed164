"""Battery of numerical identities the transforms must satisfy.

Each check returns the largest deviation it observed; a check passes when
that deviation is below its tolerance. All inputs derive from one seed.
"""

from collections.abc import Callable

import numpy as np

from holofourier.cli.models import IdentityCheck, IdentityReport
from holofourier.core.logging import get_logger
from holofourier.dft.kernels import circular_convolve, geometric_exp_sum, sinc_ratio_sum
from holofourier.dft.transforms import Direction, brute_force_dft, udft
from holofourier.holographic.encoding import encode_with_seed
from holofourier.holographic.models import WindowSpec
from holofourier.holographic.phase import generate_phase
from holofourier.holographic.recovery import (
    recover_amplitude,
    recover_masked,
    recover_windowed_closed_form,
    recover_windowed_zero_extended,
    subsampling_discrepancy,
)
from holofourier.shared.arrays import ComplexArray

logger = get_logger(__name__)

Check = Callable[[np.random.Generator], float]


def _complex(rng: np.random.Generator, shape: tuple[int, ...]) -> ComplexArray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def unitary_round_trip(rng: np.random.Generator) -> float:
    """FORWARD then INVERSE is the identity and preserves energy."""
    worst = 0.0
    for shape in [(1,), (7,), (64,), (12, 20)]:
        x = _complex(rng, shape)
        y = udft(x, Direction.FORWARD)
        worst = max(
            worst,
            float(np.max(np.abs(udft(y, Direction.INVERSE) - x))),
            abs(float(np.linalg.norm(y) - np.linalg.norm(x))),
        )
    return worst


def oracle_1d(rng: np.random.Generator) -> float:
    """Fast transform equals the direct double sum for every N <= 64."""
    worst = 0.0
    for n in range(1, 65):
        x = _complex(rng, (n,))
        for direction in Direction:
            diff = udft(x, direction) - brute_force_dft(x, direction)
            worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def oracle_2d(rng: np.random.Generator) -> float:
    """Fast 2D transform equals the direct sum on 16 x 16."""
    x = _complex(rng, (16, 16))
    return max(
        float(np.max(np.abs(udft(x, d) - brute_force_dft(x, d)))) for d in Direction
    )


def sinc_ratio_identity(_rng: np.random.Generator) -> float:
    """sum_k sinc^2(L pi (r-k)/M) / sinc^2(pi (r-k)/M) = M/L, up to M = 32."""
    worst = 0.0
    for m in range(1, 33):
        for length in range(1, m + 1):
            for r in range(m):
                worst = max(worst, abs(sinc_ratio_sum(length, m, r) - m / length))
    return worst


def geometric_sum_identity(rng: np.random.Generator) -> float:
    """Closed form of sum_u exp(-j 2 pi x u) against the direct sum."""
    worst = 0.0
    for _ in range(1000):
        x = float(rng.uniform(-2.0, 2.0))
        length = int(rng.integers(1, 65))
        direct = complex(np.sum(np.exp(-2j * np.pi * x * np.arange(length))))
        worst = max(worst, abs(geometric_exp_sum(x, length) - direct))
    for x in (-2.0, 0.0, 3.0):
        worst = max(worst, abs(geometric_exp_sum(x, 5) - 5.0))
    for x in (5e-10, 1.0 + 5e-10, 3.0 - 9e-10):
        direct = complex(np.sum(np.exp(-2j * np.pi * x * np.arange(64))))
        worst = max(worst, abs(geometric_exp_sum(x, 64) - direct))
    return worst


def convolution_theorem(rng: np.random.Generator) -> float:
    """Transform of a circular convolution is sqrt(N) times the product of transforms."""
    n = 16
    worst = 0.0
    for _ in range(10):
        x1, h = _complex(rng, (n,)), _complex(rng, (n,))
        lhs = brute_force_dft(circular_convolve(x1, h), Direction.INVERSE)
        rhs = np.sqrt(n) * brute_force_dft(h, Direction.INVERSE) * brute_force_dft(x1, Direction.INVERSE)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def shift_theorem(rng: np.random.Generator) -> float:
    """Circular shift by a multiplies the transform by exp(-j 2 pi v a / N)."""
    n = 16
    h = _complex(rng, (n,))
    v = np.arange(n)
    worst = 0.0
    for a in range(n):
        expected = udft(h, Direction.INVERSE) * np.exp(-2j * np.pi * v * a / n)
        worst = max(worst, float(np.max(np.abs(udft(np.roll(h, a), Direction.INVERSE) - expected))))
    return worst


def full_recovery(rng: np.random.Generator) -> float:
    """The whole hologram returns the source amplitude, 64 x 64."""
    image = rng.random((64, 64))
    h = encode_with_seed(image, int(rng.integers(2**32)))
    return float(np.max(np.abs(recover_amplitude(h) - image)))


def subsampling_relation(rng: np.random.Generator) -> float:
    """Compact recovery is a rescaled, phase-ramped subsampling of the zero-extended one."""
    worst = 0.0
    for m in (16, 64):
        h = encode_with_seed(_complex(rng, (m,)), int(rng.integers(2**32)))
        for length in (d for d in range(1, m + 1) if m % d == 0):
            start = int(rng.integers(0, m - length + 1))
            w = WindowSpec.span(start, length)
            worst = max(worst, subsampling_discrepancy(h, w, compare="complex"))
    return worst


def window_linearity(rng: np.random.Generator) -> float:
    """Recoveries of disjoint windows add up to the recovery of their union."""
    m = 64
    h = encode_with_seed(_complex(rng, (m,)), int(rng.integers(2**32)))
    first, second = WindowSpec.span(0, 16), WindowSpec.span(40, 8)
    union = first.mask((m,)) | second.mask((m,))
    combined = recover_windowed_zero_extended(h, first) + recover_windowed_zero_extended(h, second)
    return float(np.max(np.abs(combined - recover_masked(h, union))))


def closed_form_window(rng: np.random.Generator) -> float:
    """Kernel expression of the windowed recovery matches the transform path."""
    worst = 0.0
    for shape, w in [((32,), WindowSpec.span(5, 12)), ((8, 12), WindowSpec.rect(2, 4, 3, 6))]:
        signal = _complex(rng, shape)
        seed = int(rng.integers(2**32))
        h = encode_with_seed(signal, seed)
        closed = recover_windowed_closed_form(signal, generate_phase(seed, shape), w)
        worst = max(worst, float(np.max(np.abs(closed - recover_windowed_zero_extended(h, w)))))
    return worst


CHECKS: list[tuple[str, Check, float]] = [
    ("unitary-round-trip", unitary_round_trip, 1e-10),
    ("oracle-1d", oracle_1d, 1e-10),
    ("oracle-2d", oracle_2d, 1e-10),
    ("sinc-ratio-sum", sinc_ratio_identity, 1e-8),
    ("geometric-sum", geometric_sum_identity, 1e-11),
    ("convolution-theorem", convolution_theorem, 1e-10),
    ("shift-theorem", shift_theorem, 1e-10),
    ("full-recovery", full_recovery, 1e-9),
    ("subsampling", subsampling_relation, 1e-10),
    ("window-linearity", window_linearity, 1e-12),
    ("closed-form-window", closed_form_window, 1e-10),
]


def run_identity_suite(seed: int = 0) -> IdentityReport:
    """Run every identity with inputs drawn from ``seed``."""
    rng = np.random.default_rng(seed)
    checks = []
    for name, check, tolerance in CHECKS:
        error = check(rng)
        passed = bool(error < tolerance)
        checks.append(IdentityCheck(name=name, max_error=error, tolerance=tolerance, passed=passed))
        if not passed:
            logger.warning("cli.identity.failed", check=name, max_error=error, tolerance=tolerance)

    report = IdentityReport(seed=seed, checks=checks, passed=all(c.passed for c in checks))
    logger.info("cli.identity.completed", passed=report.passed, checks=len(checks))
    return report


def format_table(report: IdentityReport) -> str:
    """Fixed-width pass/fail table."""
    width = max(len(c.name) for c in report.checks)
    lines = [f"{'check':<{width}}  {'max error':>10}  {'tolerance':>9}  result"]
    for c in report.checks:
        verdict = "PASS" if c.passed else "FAIL"
        lines.append(f"{c.name:<{width}}  {c.max_error:>10.3e}  {c.tolerance:>9.0e}  {verdict}")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"
