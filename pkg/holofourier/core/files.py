"""Atomic artifact writes (temp file + rename)."""

import contextlib
import uuid
from pathlib import Path

from holofourier.core.logging import get_logger
from holofourier.shared.exceptions import StorageError

logger = get_logger(__name__)


def atomic_write_bytes(path: str | Path, data: bytes) -> Path:
    """Write bytes to ``path`` atomically.

    Each call writes its own uniquely named temp sibling, removed again if
    the write or rename fails.

    Args:
        path: Destination file; parent directories are created
        data: File contents

    Returns:
        The destination path

    Raises:
        StorageError: If the file cannot be written
    """
    target = Path(path)
    temp_path = target.with_name(f".{target.name}.{uuid.uuid4().hex}.tmp")
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        temp_path.write_bytes(data)
        temp_path.replace(target)
    except OSError as e:
        with contextlib.suppress(OSError):
            temp_path.unlink(missing_ok=True)
        logger.error("files.write.failed", path=str(target), error=str(e), exc_info=True)
        raise StorageError(f"Failed to write {target}: {e}") from e
    logger.debug("files.write.completed", path=str(target), size=len(data))
    return target


def atomic_write_text(path: str | Path, text: str) -> Path:
    """Write UTF-8 text to ``path`` atomically."""
    return atomic_write_bytes(path, text.encode("utf-8"))


def read_bytes(path: str | Path) -> bytes:
    """Read a whole file.

    Raises:
        StorageError: If the file cannot be read
    """
    source = Path(path)
    try:
        return source.read_bytes()
    except OSError as e:
        logger.error("files.read.failed", path=str(source), error=str(e))
        raise StorageError(f"Failed to read {source}: {e}") from e
