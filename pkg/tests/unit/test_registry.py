"""Unit tests for the check, map and family registries."""

import math

import numpy as np
import pytest

from twistlab.cli import suite
from twistlab.cli.registry import (
    FAMILIES,
    MAPS,
    Check,
    all_checks,
    get_check,
    get_family,
    get_map,
)
from twistlab.core.config import SuiteConfig
from twistlab.core.errors import RegistryError, ResolutionError
from twistlab.maps.twist import tau
from twistlab.topology.degree import HomologyMatrix
from twistlab.verify.report import VerificationReport


class TestChecks:
    """Test the check registry."""

    def test_core_suite_registered(self):
        names = [check.name for check in all_checks()]
        assert len(names) >= 14
        assert len(names) == len(set(names))
        for name in ("tau-symplectic", "moment-map", "homology-action", "h-winding"):
            assert name in names

    def test_every_check_documents_its_claim(self):
        for check in all_checks():
            assert check.description
            assert check.claim
            assert check.tol >= 0.0

    def test_lookup(self):
        assert get_check("tau-symplectic").name == "tau-symplectic"

    def test_unknown_name_suggests(self):
        """Test a misspelt name raises with a did-you-mean hint."""
        with pytest.raises(RegistryError) as exc_info:
            get_check("tau-symplectc")
        assert exc_info.value.code == "X002"
        assert "tau-symplectic" in exc_info.value.suggestion


class TestCheckRun:
    """Test tolerance resolution and error capture."""

    @staticmethod
    def echo(config, tol):
        return VerificationReport("echo", config.samples, config.seed, None, 0.0, 0.0, tol)

    def test_override_tolerance(self):
        check = Check("echo", "", "", 1e-6, self.echo)
        assert check.run(SuiteConfig(tol=1e-3)).tol == 1e-3

    def test_default_tolerance(self):
        check = Check("echo", "", "", 1e-6, self.echo)
        assert check.run(SuiteConfig()).tol == 1e-6

    def test_fixed_tolerance_ignores_override(self):
        """Test negative controls keep their own tolerance."""
        check = Check("echo", "", "", 1.0, self.echo, fixed_tol=True)
        assert check.run(SuiteConfig(tol=1e-12)).tol == 1.0

    def test_numerical_error_becomes_failing_report(self):
        def broken(config, tol):
            raise ResolutionError("T001", "not close to an integer")

        report = Check("broken", "", "", 0.0, broken).run(SuiteConfig(samples=10))
        assert math.isnan(report.max_residual)
        assert not report.passed
        assert report.samples == 10


class TestMapsAndFamilies:
    """Test named maps and families."""

    def test_get_map(self):
        assert get_map("tau") is tau
        assert set(MAPS) >= {"id", "swap", "tau"}

    def test_get_family(self):
        assert get_family("h") is FAMILIES["h"]

    def test_named_maps_are_global(self):
        """Test no named map is undefined on the antidiagonal."""
        assert "rho" not in MAPS
        with pytest.raises(RegistryError):
            get_map("rho")

    @pytest.mark.parametrize("lookup", [get_map, get_family])
    def test_unknown(self, lookup):
        with pytest.raises(RegistryError):
            lookup("twisty")


class TestSuiteChecks:
    """Test individual registered checks."""

    def test_wrong_homology_fails_under_any_tolerance(self, monkeypatch):
        """Test a wrong matrix cannot pass by raising --tol."""

        def identity_matrix(f, nodes):
            return HomologyMatrix(((1, 0), (0, 1)))

        monkeypatch.setattr(suite, "homology_matrix", identity_matrix)
        report = get_check("homology-action").run(SuiteConfig(tol=1e6))
        assert math.isinf(report.max_residual)
        assert not report.passed

    def test_homology_residual(self):
        """Test a matching matrix reports its rounding error."""
        swap = np.array([[0, 1], [1, 0]])
        assert suite._homology_residual(HomologyMatrix(((0, 1), (1, 0)), 1e-4), swap) == 1e-4
        assert math.isinf(suite._homology_residual(HomologyMatrix(((1, 0), (0, 1))), swap))

    def test_h_winding_uses_every_rotation_point(self):
        """Test the winding of h is checked at all 20 diagonal points."""
        report = get_check("h-winding").run(SuiteConfig(samples=64))
        assert report.samples == suite.ROTATION_POINTS == 20
        assert report.passed
