"""Unit tests for verification reports and block reduction."""

import json
import math

import numpy as np
import pytest

from twistlab.core.errors import PreconditionError
from twistlab.core.sampling import BLOCK_SIZE
from twistlab.verify.report import ResidualStats, VerificationReport, reduce_blocks


def make_report(max_residual, tol=1e-6):
    return VerificationReport("demo", 100, 0, 1e-5, max_residual, 0.5 * max_residual, tol)


class TestVerificationReport:
    """Test pass semantics and serialization."""

    def test_passes_at_tolerance(self):
        """Test max_residual == tol passes."""
        assert make_report(1e-6).passed

    def test_fails_above_tolerance(self):
        assert not make_report(2e-6).passed

    def test_nan_fails(self):
        """Test a NaN residual never passes."""
        assert not make_report(math.nan).passed

    def test_key_order(self):
        """Test the serialized key order is stable."""
        assert list(make_report(1e-7).to_dict()) == [
            "name",
            "samples",
            "seed",
            "step",
            "max_residual",
            "mean_residual",
            "tol",
            "pass",
        ]

    def test_nan_serializes_as_null(self):
        """Test non-finite residuals become null in strict JSON."""
        payload = make_report(math.inf).to_dict()
        assert payload["max_residual"] is None
        assert payload["pass"] is False
        json.dumps(payload, allow_nan=False)


class TestResidualStats:
    """Test partial reductions."""

    def test_of_array(self):
        stats = ResidualStats.of(np.array([1.0, 3.0, 2.0]))
        assert stats == ResidualStats(3.0, 6.0, 3)
        assert stats.mean == 2.0

    def test_empty(self):
        """Test an empty stream reduces to zero samples."""
        stats = ResidualStats.of(np.empty(0))
        assert stats.count == 0
        assert stats.mean == 0.0

    def test_merge(self):
        merged = ResidualStats(1.0, 2.0, 2).merge(ResidualStats(5.0, 5.0, 1))
        assert merged == ResidualStats(5.0, 7.0, 3)

    @pytest.mark.parametrize("order", [(0, 1), (1, 0)])
    def test_merge_keeps_nan(self, order):
        """Test a NaN maximum survives merging from either side."""
        parts = [ResidualStats(1.0, 1.0, 1), ResidualStats(math.nan, math.nan, 1)]
        merged = parts[order[0]].merge(parts[order[1]])
        assert math.isnan(merged.maximum)

    def test_report_fields(self):
        report = ResidualStats(4.0, 6.0, 3).report("demo", 7, None, 5.0)
        assert report.samples == 3
        assert report.mean_residual == 2.0
        assert report.step is None
        assert report.passed


class TestReduceBlocks:
    """Test the block-wise reduction."""

    @staticmethod
    def evaluate(block, count):
        return np.full(count, float(block)) + np.arange(count) * 1e-3

    def test_counts_every_sample(self):
        stats = reduce_blocks(2500, self.evaluate)
        assert stats.count == 2500
        assert stats.maximum == pytest.approx(2.0 + (2500 - 2 * BLOCK_SIZE - 1) * 1e-3)

    @pytest.mark.parametrize("workers", [2, 3, 8])
    def test_worker_count_is_invisible(self, workers):
        """Test threaded reduction matches the serial one bit for bit."""
        assert reduce_blocks(5000, self.evaluate, workers) == reduce_blocks(5000, self.evaluate)

    def test_nan_block_fails(self):
        """Test a block of NaN residuals cannot produce a passing report."""
        stats = reduce_blocks(10, lambda block, count: np.full(count, np.nan))
        report = stats.report("nan", 0, None, 1e-6)
        assert math.isnan(report.max_residual)
        assert not report.passed
        assert report.to_dict()["max_residual"] is None

    def test_nan_in_later_block_fails(self):
        """Test NaN residuals after finite blocks still fail the report."""

        def evaluate(block, count):
            return np.full(count, np.nan if block == 2 else 1e-9)

        for workers in (1, 3):
            report = reduce_blocks(3000, evaluate, workers).report("nan", 0, None, 1e-6)
            assert not report.passed

    def test_requires_a_sample(self):
        with pytest.raises(PreconditionError) as exc_info:
            reduce_blocks(0, self.evaluate)
        assert exc_info.value.code == "V003"
