"""Tests for configuration, logging and file helpers."""
