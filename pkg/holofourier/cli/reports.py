"""Report serialization for CLI commands.

JSON reports come straight from the pydantic models. CSV reports are
derived from the same JSON document, so both formats carry the same
numbers and infinite PSNR appears as "Infinity" in either.
"""

import csv
import io
import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from holofourier.cli.models import ReportFormat
from holofourier.core.config import get_settings
from holofourier.core.files import atomic_write_text
from holofourier.core.logging import get_logger

logger = get_logger(__name__)


def render_json(report: BaseModel) -> str:
    """JSON text of a report, indented per ``Settings.report_indent``."""
    indent = get_settings().report_indent or None
    return report.model_dump_json(indent=indent) + "\n"


def _flatten(prefix: str, value: Any, out: list[tuple[str, Any]]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(f"{prefix}.{key}" if prefix else key, item, out)
    elif isinstance(value, list) and not any(isinstance(v, dict | list) for v in value):
        out.append((prefix, " ".join(str(v) for v in value)))
    elif isinstance(value, list):
        for i, item in enumerate(value):
            _flatten(f"{prefix}.{i}", item, out)
    else:
        out.append((prefix, value))


def render_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """CSV text with a header row; floats keep their shortest repr."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([repr(v) if isinstance(v, float) else v for v in row] for row in rows)
    return buf.getvalue()


def render_csv(report: BaseModel) -> str:
    """CSV text of a report.

    A report with a single list of records (steps, checks) becomes one row
    per record, unless its class sets ``csv_records = False``. Anything else
    becomes ``field,value`` rows with dotted names for nested fields.
    """
    document: dict[str, Any] = json.loads(report.model_dump_json())
    tables = [
        key
        for key, value in document.items()
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value)
    ]
    if not getattr(type(report), "csv_records", True):
        tables = []
    if len(tables) == 1:
        records: list[dict[str, Any]] = document[tables[0]]
        header = list(records[0])
        return render_table(header, [[record.get(col) for col in header] for record in records])

    pairs: list[tuple[str, Any]] = []
    _flatten("", document, pairs)
    return render_table(["field", "value"], pairs)


def format_report(report: BaseModel, fmt: ReportFormat) -> str:
    """Serialize a report in the requested format."""
    if fmt is ReportFormat.CSV:
        return render_csv(report)
    return render_json(report)


def write_report(report: BaseModel, path: Path, fmt: ReportFormat = ReportFormat.JSON) -> Path:
    """Write a report atomically.

    Raises:
        StorageError: If the file cannot be written
    """
    target = atomic_write_text(path, format_report(report, fmt))
    logger.info("cli.report.written", path=str(target), format=str(fmt), report=type(report).__name__)
    return target
