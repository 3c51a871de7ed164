"""Shared exceptions and array helpers."""
