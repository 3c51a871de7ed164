"""Command implementations behind the ``holofourier`` CLI.

Each ``run_*`` function takes a validated RunConfig, writes its artifacts
and returns the report it produced, if any. ``run`` dispatches and maps
errors to exit codes.
"""

import sys
from collections.abc import Callable
from itertools import pairwise
from pathlib import Path

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ValidationError

from holofourier.chft.models import BoxFilter, RegularizationIndex, SampledFunction
from holofourier.chft.signals import SIGNALS
from holofourier.chft.transform import (
    amplitude_estimate,
    chft_phase,
    regularized_inverse,
    windowed_reconstruct,
)
from holofourier.cli.identity_suite import format_table, run_identity_suite
from holofourier.cli.image_io import load_source, save_amplitude
from holofourier.cli.models import (
    ChftReport,
    Command,
    ConvergencePoint,
    CropRecoverReport,
    IdentityReport,
    ProgressiveReport,
    ProgressStep,
    RunConfig,
    StatsReport,
)
from holofourier.cli.reports import format_report, render_table, write_report
from holofourier.core.config import get_settings
from holofourier.core.files import atomic_write_text
from holofourier.core.logging import bound_command, get_logger
from holofourier.holographic.codec import load_hologram, save_hologram
from holofourier.holographic.encoding import encode, encode_with_seed
from holofourier.holographic.models import Hologram, PhaseField, WindowSpec
from holofourier.holographic.recovery import (
    recover_amplitude,
    recover_windowed_zero_extended,
    rescale_amplitude,
)
from holofourier.progressive.channel import simulate_channel
from holofourier.progressive.models import ChannelConfig, ReceiverState, RenderResult
from holofourier.progressive.transmission import accumulate, partition, render
from holofourier.progressive.wire import decode_packet, encode_packet
from holofourier.shared.arrays import ComplexArray, RealArray
from holofourier.shared.exceptions import (
    ConfigError,
    FormatError,
    HoloFourierError,
    IntegrityError,
    InvalidArgumentError,
    InvalidStateError,
    ProtocolError,
    StorageError,
)
from holofourier.statistics.models import QualityReport
from holofourier.statistics.moments import windowed_energy_experiment
from holofourier.statistics.quality import quality_metrics

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTEGRITY = 4

# Amplitudes are compared at this many decimals; transform round-off lies
# below it, so an exact recovery scores an infinite PSNR
QUALITY_DECIMALS = 12

# Sample interval [start, stop) of the continuous demo
CHFT_EXTENT = (-2.0, 2.0)


def exit_code_for(error: BaseException) -> int:
    """Exit status for an error escaping a command.

    Usage errors give 2, unreadable or malformed files 3, and packet
    protocol or integrity failures 4.
    """
    if isinstance(error, ConfigError | InvalidArgumentError | InvalidStateError | ValidationError):
        return EXIT_USAGE
    if isinstance(error, FormatError | StorageError | OSError):
        return EXIT_IO
    if isinstance(error, ProtocolError | IntegrityError):
        return EXIT_INTEGRITY
    return EXIT_FAILURE


def _settled(values: npt.ArrayLike) -> RealArray:
    return np.round(np.abs(np.asarray(values)), QUALITY_DECIMALS)


def _quality(source: npt.ArrayLike, recovered: npt.ArrayLike) -> QualityReport:
    return quality_metrics(_settled(source), _settled(recovered))


def _input(config: RunConfig) -> Path:
    if config.input is None:
        raise InvalidArgumentError(f"{config.command} requires --input")
    return config.input


def _output(config: RunConfig) -> Path:
    if config.output is None:
        raise InvalidArgumentError(f"{config.command} requires --output")
    return config.output


def _window(config: RunConfig, shape: tuple[int, ...]) -> WindowSpec:
    starts, lengths = config.window_axes(len(shape), shape)
    window = WindowSpec(starts=starts, lengths=lengths)
    window.check_fits(shape)
    return window


def _windowed_estimate(h: Hologram, window: WindowSpec) -> ComplexArray:
    return rescale_amplitude(recover_windowed_zero_extended(h, window), window.size, h.size)


def _emit(report: BaseModel, config: RunConfig) -> None:
    """Write the report to --output, or print it when no output was given."""
    if config.output is None:
        sys.stdout.write(format_report(report, config.format))
    else:
        write_report(report, config.output, config.format)


def run_encode(config: RunConfig) -> None:
    """Encode a PGM image or CSV signal into a hologram file."""
    source = load_source(_input(config))
    h = encode_with_seed(source, config.seed, embed_phase=config.embed_phase)
    save_hologram(h, _output(config))
    logger.info(
        "cli.encode.completed",
        shape=list(h.source_shape),
        phase_mode=h.phase_mode.name.lower(),
        output=str(config.output),
    )


def run_recover(config: RunConfig) -> None:
    """Recover the amplitude from a hologram file.

    Without window flags the whole hologram is used. With them, only the
    window is kept and the result is rescaled by sqrt(M/L).
    """
    h = load_hologram(_input(config))
    if config.window_start or config.window_len:
        window = _window(config, h.source_shape)
        amplitude = np.abs(_windowed_estimate(h, window))
    else:
        amplitude = recover_amplitude(h)
    save_amplitude(amplitude, _output(config))
    logger.info("cli.recover.completed", shape=list(h.source_shape), output=str(config.output))


def run_crop_recover(config: RunConfig) -> CropRecoverReport:
    """Encode, crop, recover and score against the source.

    The same window applied to a plain (zero-phase) transform gives the
    baseline, whose quality depends on where the window sits.
    """
    source = load_source(_input(config))
    shape = tuple(source.shape)
    window = _window(config, shape)

    estimate = _windowed_estimate(encode_with_seed(source, config.seed), window)
    baseline = _windowed_estimate(encode(source, PhaseField.zeros(shape)), window)
    quality = _quality(source, estimate)
    plain = _quality(source, baseline)

    if config.recovered is not None:
        save_amplitude(np.abs(estimate), config.recovered)

    report = CropRecoverReport(
        shape=list(shape),
        window_start=list(window.starts),
        window_len=list(window.lengths),
        fraction=window.size / source.size,
        rmse=quality.rmse,
        psnr_db=quality.psnr_db,
        baseline_rmse=plain.rmse,
        baseline_psnr_db=plain.psnr_db,
        seed=config.seed,
    )
    _emit(report, config)
    return report


def run_stats(config: RunConfig) -> StatsReport:
    """Windowed energy of a constant source over many phase seeds."""
    if config.amplitude == 0.0:
        raise InvalidArgumentError("--amplitude must be nonzero")
    m = config.resolved_size
    starts, lengths = config.window_axes(1, (m,))

    moments = windowed_energy_experiment(
        m,
        lengths[0],
        starts[0],
        i0=config.amplitude,
        trials=config.trials,
        base_seed=config.seed,
    )
    report = StatsReport(
        size=m,
        window_start=starts[0],
        window_len=lengths[0],
        amplitude=config.amplitude,
        relative_error=abs(moments.empirical_mean_energy - moments.expected_energy)
        / moments.expected_energy,
        moments=moments,
    )
    _emit(report, config)
    return report


def _signal(name: str) -> Callable[[npt.ArrayLike], RealArray]:
    try:
        return SIGNALS[name]
    except KeyError:
        raise InvalidArgumentError(
            f"Unknown signal {name!r}; choose from {', '.join(sorted(SIGNALS))}"
        ) from None


def _curves_path(config: RunConfig) -> Path | None:
    if config.curves is not None:
        return config.curves
    if config.output is not None:
        return config.output.with_name(f"{config.output.stem}.curves.csv")
    return None


def run_chft_demo(config: RunConfig) -> ChftReport:
    """Sample a test function, apply the continuous transform numerically and
    measure how the regularized inverse converges.

    The convergence report goes to --output (or stdout) in --format. The
    sampled curves |f|, |f_n| for every n and |g| when a cutoff is set go to
    --curves, or to ``<output stem>.curves.csv`` beside the report.
    """
    f = SampledFunction.from_function(_signal(config.signal), *CHFT_EXTENT, config.resolved_size)
    correlation = get_settings().chft_phase_correlation
    phase = chft_phase(config.seed, f, correlation)
    x = f.grid
    target = f.samples * phase.factor

    header = ["x", "abs_f"]
    columns: list[RealArray] = [x, np.abs(f.samples)]
    points = []
    for n in config.reg_n:
        fn = regularized_inverse(f, phase, RegularizationIndex(n=n), x)
        points.append(ConvergencePoint(n=n, sup_error=float(np.max(np.abs(fn - target)))))
        header.append(f"abs_f_n{n:g}")
        columns.append(np.abs(fn))

    box_error = None
    if config.cutoff_k is not None:
        w = BoxFilter(cutoff=config.cutoff_k)
        g = np.abs(windowed_reconstruct(f, phase, w, x))
        predicted = np.array([amplitude_estimate(f, w, float(xi)) for xi in x])
        box_error = float(np.max(np.abs(g - predicted)))
        header.append("abs_g")
        columns.append(g)

    report = ChftReport(
        signal=config.signal,
        count=f.count,
        seed=config.seed,
        correlation=correlation,
        sup_f=float(np.max(np.abs(f.samples))),
        convergence=points,
        monotone=all(a.sup_error > b.sup_error for a, b in pairwise(points)),
        cutoff_k=config.cutoff_k,
        box_sup_amplitude_error=box_error,
    )
    logger.info(
        "cli.chft.completed",
        signal=config.signal,
        count=f.count,
        monotone=report.monotone,
        final_error=points[-1].sup_error,
    )

    curves = _curves_path(config)
    if curves is None:
        logger.info("cli.chft.curves_skipped", reason="no --curves or --output")
    else:
        atomic_write_text(curves, render_table(header, np.column_stack(columns).tolist()))
        logger.info("cli.chft.curves_written", path=str(curves), columns=header)
    _emit(report, config)
    return report


def run_progressive_sim(config: RunConfig) -> ProgressiveReport:
    """Send a hologram in packets over a lossy channel and render after each arrival.

    Packets pass through the wire codec, so every step also exercises the
    checksum and framing.
    """
    source = load_source(_input(config))
    h = encode_with_seed(source, config.seed)
    packets = partition(h, config.packets)
    delivered = simulate_channel(
        packets,
        ChannelConfig(loss_rate=config.loss_rate, reorder=config.reorder, seed=config.seed),
    )

    state = ReceiverState(h.source_shape, len(packets))
    steps = []
    result: RenderResult | None = None
    for sent in delivered:
        accumulate(state, decode_packet(encode_packet(sent)))
        result = render(state)
        quality = _quality(source, result.image)
        steps.append(
            ProgressStep(
                packet_id=sent.packet_id,
                coverage=result.coverage,
                rmse=quality.rmse,
                psnr_db=quality.psnr_db,
            )
        )

    if config.recovered is not None and result is not None:
        save_amplitude(result.amplitude, config.recovered)

    report = ProgressiveReport(
        shape=list(h.source_shape),
        packets=len(packets),
        loss_rate=config.loss_rate,
        reorder=config.reorder,
        seed=config.seed,
        delivered=[p.packet_id for p in delivered],
        steps=steps,
    )
    _emit(report, config)
    return report


def run_identity(config: RunConfig) -> IdentityReport:
    """Print the identity table; also write the report when --output is set."""
    report = run_identity_suite(config.seed)
    sys.stdout.write(format_table(report))
    if config.output is not None:
        write_report(report, config.output, config.format)
    return report


COMMANDS: dict[Command, Callable[[RunConfig], BaseModel | None]] = {
    Command.ENCODE: run_encode,
    Command.RECOVER: run_recover,
    Command.CROP_RECOVER: run_crop_recover,
    Command.STATS: run_stats,
    Command.CHFT_DEMO: run_chft_demo,
    Command.PROGRESSIVE_SIM: run_progressive_sim,
    Command.IDENTITY_SUITE: run_identity,
}


def run(config: RunConfig) -> int:
    """Run one command and return its exit status.

    Errors are logged with their traceback and summarized on stderr. A
    failing identity suite exits with the integrity status.
    """
    with bound_command(str(config.command)):
        logger.info("cli.command.started", seed=config.seed)
        try:
            report = COMMANDS[config.command](config)
        except (HoloFourierError, OSError, ValidationError) as e:
            code = exit_code_for(e)
            logger.error("cli.command.failed", error=str(e), exit_code=code, exc_info=True)
            sys.stderr.write(f"holofourier {config.command}: {e}\n")
            return code

        if isinstance(report, IdentityReport) and not report.passed:
            logger.error("cli.command.failed", exit_code=EXIT_INTEGRITY)
            return EXIT_INTEGRITY
        logger.info("cli.command.completed")
        return EXIT_OK
