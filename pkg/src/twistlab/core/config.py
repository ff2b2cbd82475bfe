"""Suite configuration for twistlab.

Configuration comes from three layers, later ones winning:
defaults -> environment (``TWISTLAB_*``) -> command-line flags.
There is no configuration file; the suite has only a handful of knobs.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Mapping
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

from twistlab.core.errors import ConfigError

ENV_PREFIX = "TWISTLAB_"

VALID_FORMATS = ("json", "csv")


@dataclass(frozen=True)
class SuiteConfig:
    """Knobs shared by every check and command."""

    samples: int = 10_000
    seed: int = 0
    fd_step: float = 1e-5
    tol: float | None = None  # None: each check keeps its own tolerance
    quad_nodes: int = 256
    loop_samples: int = 64
    workers: int = 1
    output: Path | None = None  # None: stdout
    format: str = "json"  # "json" or "csv"
    trace: Path | None = None
    timing: bool = False

    def validate(self) -> SuiteConfig:
        """Check the configuration invariants.

        Returns:
            self, for chaining

        Raises:
            ConfigError: on the first violated invariant
        """
        if self.samples < 1:
            raise ConfigError("X001", f"samples must be >= 1, got {self.samples}")
        if not 0.0 < self.fd_step <= 1e-2:
            raise ConfigError("X001", f"fd_step must lie in (0, 1e-2], got {self.fd_step}")
        if self.tol is not None and not self.tol > 0.0:
            raise ConfigError("X001", f"tol must be > 0, got {self.tol}")
        if self.quad_nodes < 32:
            raise ConfigError(
                "X001", f"quad_nodes must be >= 32, got {self.quad_nodes}", "Use --quad-nodes 256"
            )
        if self.loop_samples < 8:
            raise ConfigError("X001", f"loop_samples must be >= 8, got {self.loop_samples}")
        if self.workers < 1:
            raise ConfigError("X001", f"workers must be >= 1, got {self.workers}")
        if self.format not in VALID_FORMATS:
            raise ConfigError(
                "X001",
                f"format must be one of {', '.join(VALID_FORMATS)}, got '{self.format}'",
            )
        return self

    def tolerance(self, default: float) -> float:
        """The tolerance a check should use given its own default."""
        return default if self.tol is None else self.tol


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


_PARSERS: dict[str, Callable[[str], Any]] = {
    "samples": int,
    "seed": int,
    "fd_step": float,
    "tol": float,
    "quad_nodes": int,
    "loop_samples": int,
    "workers": int,
    "output": Path,
    "format": str,
    "trace": Path,
    "timing": _parse_bool,
}


def load_env_overrides(environ: Mapping[str, str] | None = None) -> dict[str, Any]:
    """
    Read ``TWISTLAB_*`` environment variables.

    Args:
        environ: Mapping to read from (default: os.environ)

    Returns:
        Dictionary of SuiteConfig field overrides

    Raises:
        ConfigError: if a variable cannot be parsed

    Example:
        TWISTLAB_SAMPLES=2000 TWISTLAB_SEED=7 twistlab verify-all
    """
    if environ is None:
        environ = os.environ

    overrides: dict[str, Any] = {}
    for name, parse in _PARSERS.items():
        key = ENV_PREFIX + name.upper()
        if key not in environ:
            continue
        raw = environ[key]
        try:
            overrides[name] = parse(raw)
        except ValueError as exc:
            raise ConfigError("X001", f"cannot parse {key}={raw!r}: {exc}")
    return overrides


def build_config(
    flags: Mapping[str, Any] | None = None, environ: Mapping[str, str] | None = None
) -> SuiteConfig:
    """
    Layer defaults, environment and flags into a validated SuiteConfig.

    Args:
        flags: Flag values; entries that are None are treated as unset
        environ: Environment mapping (default: os.environ)

    Returns:
        Validated configuration
    """
    known = {f.name for f in fields(SuiteConfig)}
    values = load_env_overrides(environ)
    for name, value in (flags or {}).items():
        if name in known and value is not None:
            values[name] = value
    return replace(SuiteConfig(), **values).validate()
