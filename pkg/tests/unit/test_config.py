"""Unit tests for suite configuration."""

from pathlib import Path

import pytest

from twistlab.core.config import SuiteConfig, build_config, load_env_overrides
from twistlab.core.errors import ConfigError


class TestDefaults:
    """Test the default configuration."""

    def test_default_values(self):
        """Test documented defaults."""
        config = build_config({}, {})
        assert config.samples == 10_000
        assert config.seed == 0
        assert config.fd_step == 1e-5
        assert config.tol is None
        assert config.quad_nodes == 256
        assert config.format == "json"
        assert config.output is None

    def test_tolerance_fallback(self):
        """Test that a check keeps its own tolerance unless overridden."""
        assert SuiteConfig().tolerance(1e-6) == 1e-6
        assert SuiteConfig(tol=1e-3).tolerance(1e-6) == 1e-3


class TestLayering:
    """Test defaults < environment < flags."""

    def test_environment_overrides_defaults(self):
        """Test TWISTLAB_* variables are read and parsed."""
        config = build_config({}, {"TWISTLAB_SAMPLES": "2000", "TWISTLAB_TOL": "1e-4"})
        assert config.samples == 2000
        assert config.tol == 1e-4

    def test_flags_override_environment(self):
        """Test a flag beats the environment."""
        config = build_config({"samples": 500}, {"TWISTLAB_SAMPLES": "2000"})
        assert config.samples == 500

    def test_unset_flags_are_ignored(self):
        """Test None flag values leave the environment in place."""
        config = build_config({"samples": None, "verbose": True}, {"TWISTLAB_SAMPLES": "2000"})
        assert config.samples == 2000

    def test_path_and_bool_parsing(self):
        """Test non-numeric environment values."""
        overrides = load_env_overrides({"TWISTLAB_OUTPUT": "out.json", "TWISTLAB_TIMING": "yes"})
        assert overrides == {"output": Path("out.json"), "timing": True}

    def test_unparseable_environment(self):
        """Test a malformed value raises ConfigError."""
        with pytest.raises(ConfigError) as exc_info:
            load_env_overrides({"TWISTLAB_SEED": "seven"})
        assert exc_info.value.code == "X001"
        assert "TWISTLAB_SEED" in exc_info.value.message


class TestValidation:
    """Test configuration invariants."""

    @pytest.mark.parametrize(
        "flags",
        [
            {"samples": 0},
            {"fd_step": 0.0},
            {"fd_step": 0.1},
            {"tol": 0.0},
            {"quad_nodes": 16},
            {"loop_samples": 4},
            {"workers": 0},
            {"format": "xml"},
        ],
    )
    def test_invalid_values(self, flags):
        """Test each invariant violation raises ConfigError."""
        with pytest.raises(ConfigError):
            build_config(flags, {})

    def test_boundary_values_accepted(self):
        """Test the edges of the valid ranges."""
        config = build_config({"samples": 1, "fd_step": 1e-2, "quad_nodes": 32}, {})
        assert config.samples == 1
