"""Tests for holofourier.cli.identity_suite."""

import numpy as np
import pytest

from holofourier.cli.identity_suite import (
    CHECKS,
    format_table,
    geometric_sum_identity,
    run_identity_suite,
    window_linearity,
)
from holofourier.cli.models import IdentityCheck, IdentityReport


class TestIdentitySuite:
    """Tests for the identity battery."""

    @pytest.mark.slow
    def test_all_identities_pass(self) -> None:
        """Test that every identity holds for seed 0."""
        report = run_identity_suite(0)
        failed = [c.name for c in report.checks if not c.passed]
        assert failed == []
        assert report.passed
        assert len(report.checks) == len(CHECKS)

    def test_geometric_sum_within_tolerance(self, rng: np.random.Generator) -> None:
        """Test the closed-form geometric sum against 1000 direct sums."""
        assert geometric_sum_identity(rng) < 1e-11

    def test_window_linearity_within_tolerance(self, rng: np.random.Generator) -> None:
        """Test that disjoint window recoveries add up to the union's recovery."""
        assert window_linearity(rng) < 1e-12

    def test_table_marks_failures(self) -> None:
        """Test that a failing check shows FAIL and the overall verdict."""
        report = IdentityReport(
            seed=0,
            checks=[
                IdentityCheck(name="ok", max_error=0.0, tolerance=1e-10, passed=True),
                IdentityCheck(name="broken", max_error=1.0, tolerance=1e-10, passed=False),
            ],
            passed=False,
        )
        table = format_table(report)
        assert "ok" in table.splitlines()[1]
        assert table.splitlines()[2].endswith("FAIL")
        assert table.endswith("overall: FAIL\n")
