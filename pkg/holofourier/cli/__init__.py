"""Command-line surface: file formats, commands and reports."""

from holofourier.cli.image_io import load_image, load_signal, save_image, save_signal
from holofourier.cli.models import Command, ReportFormat, RunConfig

__all__ = [
    "Command",
    "ReportFormat",
    "RunConfig",
    "load_image",
    "load_signal",
    "save_image",
    "save_signal",
]
