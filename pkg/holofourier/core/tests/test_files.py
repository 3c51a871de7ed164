"""Tests for holofourier.core.files module."""

from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest

from holofourier.core.files import atomic_write_bytes, atomic_write_text, read_bytes
from holofourier.shared.exceptions import StorageError


def test_atomic_write_creates_parents(tmp_path: Path) -> None:
    """Test that missing parent directories are created."""
    target = atomic_write_bytes(tmp_path / "a" / "b" / "x.bin", b"\x00\x01")
    assert target.read_bytes() == b"\x00\x01"


def test_atomic_write_replaces_and_leaves_no_temp(tmp_path: Path) -> None:
    """Test that rewriting replaces the content without a leftover temp file."""
    path = tmp_path / "report.json"
    atomic_write_text(path, "old")
    atomic_write_text(path, "new")
    assert path.read_text() == "new"
    assert [p.name for p in tmp_path.iterdir()] == ["report.json"]


def test_write_failure_raises_storage_error(tmp_path: Path) -> None:
    """Test that a failed rename raises StorageError and removes the temp file."""
    (tmp_path / "taken").mkdir()
    with pytest.raises(StorageError, match="Failed to write"):
        atomic_write_bytes(tmp_path / "taken", b"x")
    assert [p.name for p in tmp_path.iterdir()] == ["taken"]


def test_concurrent_writers_to_one_target(tmp_path: Path) -> None:
    """Test that parallel writers never clash and leave one complete file."""
    path = tmp_path / "shared.bin"
    payloads = [bytes([i]) * 4096 for i in range(16)]

    with ThreadPoolExecutor(max_workers=8) as executor:
        list(executor.map(lambda data: atomic_write_bytes(path, data), payloads))

    assert path.read_bytes() in payloads
    assert [p.name for p in tmp_path.iterdir()] == ["shared.bin"]


def test_read_missing_file(tmp_path: Path) -> None:
    """Test that reading a missing file raises StorageError."""
    with pytest.raises(StorageError, match="Failed to read"):
        read_bytes(tmp_path / "absent")
