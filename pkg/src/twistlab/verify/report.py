"""Verification reports and their deterministic block-wise reduction."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from twistlab.core.errors import PreconditionError
from twistlab.core.geometry import Array
from twistlab.core.sampling import block_ranges

logger = logging.getLogger(__name__)

__all__ = ["VerificationReport", "ResidualStats", "reduce_blocks"]


def _finite_or_none(value: float) -> float | None:
    return value if math.isfinite(value) else None


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check. ``passed`` holds iff max_residual <= tol."""

    name: str
    samples: int
    seed: int
    step: float | None
    max_residual: float
    mean_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tol)

    def to_dict(self) -> dict[str, Any]:
        """Stable JSON shape; key order is part of the format."""
        return {
            "name": self.name,
            "samples": self.samples,
            "seed": self.seed,
            "step": self.step,
            "max_residual": _finite_or_none(self.max_residual),
            "mean_residual": _finite_or_none(self.mean_residual),
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ResidualStats:
    """Partial reduction (max, sum, count) of a residual stream."""

    maximum: float = 0.0
    total: float = 0.0
    count: int = 0

    @classmethod
    def of(cls, residuals: Array) -> ResidualStats:
        residuals = np.asarray(residuals, dtype=np.float64).reshape(-1)
        if residuals.size == 0:
            return cls()
        return cls(float(np.max(residuals)), float(np.sum(residuals)), int(residuals.size))

    def merge(self, other: ResidualStats) -> ResidualStats:
        # np.max propagates NaN, the builtin max does not
        maximum = float(np.max([self.maximum, other.maximum]))
        return ResidualStats(maximum, self.total + other.total, self.count + other.count)

    @property
    def mean(self) -> float:
        return self.total / self.count if self.count else 0.0

    def report(self, name: str, seed: int, step: float | None, tol: float) -> VerificationReport:
        return VerificationReport(
            name=name,
            samples=self.count,
            seed=seed,
            step=step,
            max_residual=self.maximum,
            mean_residual=self.mean,
            tol=tol,
        )


def reduce_blocks(
    n_samples: int,
    evaluate: Callable[[int, int], Array],
    workers: int = 1,
) -> ResidualStats:
    """Evaluate ``evaluate(block, count)`` over the sample blocks and merge in block order.

    Raises:
        PreconditionError: if n_samples < 1
    """
    if n_samples < 1:
        raise PreconditionError("V003", f"need at least one sample, got {n_samples}")
    blocks = [(block, count) for block, _, count in block_ranges(n_samples)]

    def run(item: tuple[int, int]) -> ResidualStats:
        return ResidualStats.of(evaluate(*item))

    partials: Iterable[ResidualStats]
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(run, blocks))
    else:
        partials = [run(item) for item in blocks]

    stats = ResidualStats()
    for partial in partials:
        stats = stats.merge(partial)
    logger.debug("reduced %d blocks, %d residuals", len(blocks), stats.count)
    return stats

