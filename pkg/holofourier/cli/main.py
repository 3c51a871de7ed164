"""``holofourier`` command-line entry point."""

import argparse
import sys
import uuid
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from holofourier.chft.signals import SIGNALS
from holofourier.cli.commands import EXIT_USAGE, run
from holofourier.cli.models import Command, ReportFormat, RunConfig
from holofourier.core.config import get_settings
from holofourier.core.logging import get_logger, set_run_id, setup_logging
from holofourier.shared.exceptions import ConfigError, InvalidArgumentError

logger = get_logger(__name__)

_HELP = {
    Command.ENCODE: "encode a PGM image or CSV signal into a hologram file",
    Command.RECOVER: "recover the amplitude from a hologram file, optionally through a window",
    Command.CROP_RECOVER: "score windowed recovery against the source and a plain-crop baseline",
    Command.STATS: "windowed energy of a constant source over many phase seeds",
    Command.CHFT_DEMO: "convergence of the sampled continuous transform",
    Command.PROGRESSIVE_SIM: "packetize a hologram, send it over a lossy channel, render progressively",
    Command.IDENTITY_SUITE: "run the battery of transform identities and print a pass/fail table",
}


def _add_window(p: argparse.ArgumentParser) -> None:
    p.add_argument("--window-start", type=int, nargs="+", default=[], metavar="A",
                   help="window start per axis (one value applies to every axis)")
    p.add_argument("--window-len", type=int, nargs="+", default=[], metavar="L",
                   help="window length per axis (default: the whole axis)")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per Command."""
    parser = argparse.ArgumentParser(
        prog="holofourier",
        description="Holographic Fourier representations of signals and images.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="seed every random draw derives from (default: DEFAULT_SEED)")
    common.add_argument("--output", type=Path, default=None, help="artifact or report path")
    common.add_argument("--format", type=ReportFormat, choices=list(ReportFormat),
                        default=ReportFormat.JSON, help="report format")

    sub = {
        command: subparsers.add_parser(command.value, parents=[common], help=_HELP[command])
        for command in Command
    }

    for command in (Command.ENCODE, Command.RECOVER, Command.CROP_RECOVER, Command.PROGRESSIVE_SIM):
        sub[command].add_argument("--input", type=Path, required=True,
                                  help="PGM image, CSV signal or hologram file")
    for command in (Command.RECOVER, Command.CROP_RECOVER, Command.STATS):
        _add_window(sub[command])
    for command in (Command.CROP_RECOVER, Command.PROGRESSIVE_SIM):
        sub[command].add_argument("--recovered", type=Path, default=None,
                                  help="also write the recovered amplitude (.pgm or .csv)")

    sub[Command.ENCODE].add_argument("--embed-phase", action="store_true",
                                     help="store the phase raster instead of the seed")

    stats = sub[Command.STATS]
    stats.add_argument("--size", type=int, default=None, help="signal length M (default 256)")
    stats.add_argument("--amplitude", type=float, default=1.0, help="constant source amplitude")
    stats.add_argument("--trials", type=int, default=200, help="phase realizations")

    chft = sub[Command.CHFT_DEMO]
    chft.add_argument("--size", type=int, default=None, help="sample count N (default 512)")
    chft.add_argument("--signal", choices=sorted(SIGNALS), default="raised-cosine")
    chft.add_argument("--reg-n", type=float, action="append", default=None, metavar="N",
                      help="regularization index (repeatable; default 4 8 16 32)")
    chft.add_argument("--cutoff-k", type=float, default=None,
                      help="also reconstruct through a box filter with this cutoff")
    chft.add_argument("--curves", type=Path, default=None,
                      help="sampled-curve CSV (default: <output stem>.curves.csv)")

    sim = sub[Command.PROGRESSIVE_SIM]
    sim.add_argument("--packets", type=int, default=8, help="number of packets")
    sim.add_argument("--loss-rate", type=float, default=0.0, help="drop probability")
    sim.add_argument("--reorder", action="store_true", help="shuffle delivered packets")

    return parser


def config_from_args(args: argparse.Namespace, default_seed: int) -> RunConfig:
    """Build a RunConfig from parsed arguments.

    Raises:
        InvalidArgumentError: If a value breaks a command precondition
        ValidationError: If a value has the wrong type
    """
    values: dict[str, Any] = {
        key: value for key, value in vars(args).items() if value is not None
    }
    values["seed"] = default_seed if args.seed is None else args.seed
    values["window_start"] = tuple(values.get("window_start", ()))
    values["window_len"] = tuple(values.get("window_len", ()))
    if "reg_n" in values:
        values["reg_n"] = tuple(values["reg_n"])
    return RunConfig(**values)


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, configure logging and run one command.

    Returns:
        Process exit status (0 ok, 2 usage, 3 I/O, 4 integrity)
    """
    args = build_parser().parse_args(argv)

    try:
        settings = get_settings()
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(log_level=settings.log_level)
    set_run_id(uuid.uuid4().hex)

    try:
        config = config_from_args(args, settings.default_seed)
    except (InvalidArgumentError, ValidationError) as e:
        logger.error("cli.config.invalid", error=str(e))
        print(f"holofourier {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
