"""Static registries: checks, named maps and named map families.

Checks register themselves with :func:`register` in ``twistlab.cli.suite``;
the registration order is the report order.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import partial

from twistlab.core.config import SuiteConfig
from twistlab.core.errors import RegistryError, TwistLabError
from twistlab.core.suggestions import suggest_did_you_mean
from twistlab.maps.twist import (
    ProductMap,
    compose,
    homotopy_h,
    identity,
    loop_lambda,
    rho,
    swap_iota,
    tau,
    tau_inv,
)
from twistlab.topology.winding import MapFamily
from twistlab.verify.report import VerificationReport

logger = logging.getLogger(__name__)

__all__ = [
    "Check",
    "register",
    "get_check",
    "all_checks",
    "MAPS",
    "FAMILIES",
    "get_map",
    "get_family",
]

Runner = Callable[[SuiteConfig, float], VerificationReport]


@dataclass(frozen=True)
class Check:
    """One registered check: what it verifies and how to run it."""

    name: str
    description: str
    claim: str  # the mathematical statement the check certifies
    tol: float  # default tolerance, replaced by SuiteConfig.tol when given
    runner: Runner
    fixed_tol: bool = False  # controls and integer checks ignore SuiteConfig.tol

    def run(self, config: SuiteConfig) -> VerificationReport:
        """Run the check. A numerical error becomes a failing report with a NaN residual."""
        tol = self.tol if self.fixed_tol else config.tolerance(self.tol)
        try:
            return self.runner(config, tol)
        except TwistLabError as error:
            logger.error("%s: %s", self.name, error)
            return VerificationReport(
                self.name, config.samples, config.seed, config.fd_step, math.nan, math.nan, tol
            )


_CHECKS: dict[str, Check] = {}


def register(
    name: str, description: str, claim: str, tol: float, fixed_tol: bool = False
) -> Callable[[Runner], Runner]:
    """Decorator adding a runner to the check registry under ``name``."""

    def decorator(runner: Runner) -> Runner:
        if name in _CHECKS:
            raise ValueError(f"check '{name}' registered twice")
        _CHECKS[name] = Check(name, description, claim, tol, runner, fixed_tol)
        return runner

    return decorator


def _unknown(kind: str, name: str, known: list[str]) -> RegistryError:
    hint = suggest_did_you_mean(name, known) or f"Valid names: {', '.join(known)}"
    return RegistryError("X002", f"unknown {kind} '{name}'", hint)


def all_checks() -> list[Check]:
    """Every registered check in registry order."""
    import twistlab.cli.suite  # noqa: F401  (registers the checks)

    return list(_CHECKS.values())


def get_check(name: str) -> Check:
    """Look up a check by name.

    Raises:
        RegistryError: for unknown names, with a did-you-mean hint
    """
    checks = {check.name: check for check in all_checks()}
    if name not in checks:
        raise _unknown("check", name, list(checks))
    return checks[name]


# only maps defined on all of S² x S²; rho at a fixed angle has no limit on the antidiagonal
MAPS: dict[str, ProductMap] = {
    "id": identity,
    "swap": swap_iota,
    "tau": tau,
    "tau-inv": tau_inv,
    "tau-squared": compose(tau, tau),
    "h-half": partial(homotopy_h, 0.5),
    "lambda-quarter": partial(loop_lambda, 0.25),
}


def _identity_family(t: float) -> ProductMap:
    return identity


FAMILIES: dict[str, MapFamily] = {
    "h": lambda s: partial(homotopy_h, s),
    "lambda": lambda t: partial(loop_lambda, t),
    "identity": _identity_family,
    # the diagonal rotation by 2 pi t, fixing the diagonal pointwise
    "rho": lambda t: partial(rho, 2.0 * math.pi * t),
}


def get_map(name: str) -> ProductMap:
    if name not in MAPS:
        raise _unknown("map", name, list(MAPS))
    return MAPS[name]


def get_family(name: str) -> MapFamily:
    if name not in FAMILIES:
        raise _unknown("family", name, list(FAMILIES))
    return FAMILIES[name]
