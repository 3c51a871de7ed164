"""Structured logging setup using structlog with run IDs.

Log lines are JSON objects on stderr; stdout carries command output only.
"""

import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any

import numpy as np
import structlog
from structlog.types import EventDict, WrappedLogger

# Ties together every log line of one CLI invocation
run_id_var: ContextVar[str] = ContextVar("run_id", default="")


def add_run_id(_logger: WrappedLogger, _method_name: str, event_dict: EventDict) -> EventDict:
    """Add run ID to log event if set."""
    run_id = run_id_var.get()
    if run_id:
        event_dict["run_id"] = run_id
    return event_dict


def _plain(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, tuple | list):
        return [_plain(v) for v in value]
    return value


def numpy_to_builtin(_logger: WrappedLogger, _method_name: str, event_dict: EventDict) -> EventDict:
    """Convert numpy scalars and arrays to builtins so the JSON renderer accepts them.

    Complex values become [re, im] pairs.
    """
    for key, value in event_dict.items():
        value = _plain(value)
        if isinstance(value, complex):
            value = [value.real, value.imag]
        event_dict[key] = value
    return event_dict


def setup_logging(log_level: str = "INFO") -> None:
    """Configure structured logging for the library and CLI.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    level = getattr(logging, log_level.upper())
    logging.basicConfig(format="%(message)s", level=level, stream=sys.stderr)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            add_run_id,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.format_exc_info,
            numpy_to_builtin,
            structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        # tests reconfigure between cases
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> structlog.BoundLogger:
    """Get a structured logger instance.

    Args:
        name: Logger name (typically __name__)

    Returns:
        Configured structlog logger
    """
    return structlog.get_logger(name)  # type: ignore[no-any-return]


def set_run_id(run_id: str) -> None:
    """Set the run ID for the current context."""
    run_id_var.set(run_id)


def get_run_id() -> str:
    """Run ID of the current context, or empty string if not set."""
    return run_id_var.get()


@contextmanager
def bound_command(command: str) -> Iterator[None]:
    """Attach ``command=<name>`` to every log line emitted inside the block."""
    with structlog.contextvars.bound_contextvars(command=command):
        yield
