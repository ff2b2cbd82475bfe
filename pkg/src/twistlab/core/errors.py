"""Exception hierarchy for twistlab.

Every error carries a catalog code (see :mod:`twistlab.core.error_codes`)
and an optional remediation hint.
"""

from __future__ import annotations

from twistlab.core.error_codes import format_diagnostic_with_code

__all__ = [
    "TwistLabError",
    "DomainError",
    "PreconditionError",
    "ResolutionError",
    "ConstructionError",
    "ConfigError",
    "RegistryError",
]


class TwistLabError(Exception):
    """Base class for all twistlab errors."""

    def __init__(self, code: str, message: str, suggestion: str | None = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.suggestion = suggestion

    def __str__(self) -> str:
        return format_diagnostic_with_code("error", self.code, self.message, self.suggestion)


class DomainError(TwistLabError):
    """An operation was evaluated outside its domain."""


class PreconditionError(TwistLabError):
    """A documented precondition of an operation does not hold."""


class ResolutionError(TwistLabError):
    """Quadrature or loop sampling is too coarse for the requested answer."""


class ConstructionError(TwistLabError):
    """A one-time build step failed its residual gate."""


class ConfigError(TwistLabError):
    """Invalid suite configuration or environment override."""


class RegistryError(TwistLabError):
    """Unknown check, map or family name."""
