"""Winding numbers of loops of positive-determinant 2 x 2 matrices."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import numpy.typing as npt

from twistlab.core.errors import DomainError, ResolutionError
from twistlab.core.geometry import Array, SpherePoint
from twistlab.maps.twist import ProductMap
from twistlab.topology.trace import write_trace
from twistlab.verify.checks import normal_action

logger = logging.getLogger(__name__)

__all__ = [
    "MatrixLoop",
    "MapFamily",
    "polar_angle",
    "winding_number",
    "normal_loop_winding",
]

ENDPOINT_TOLERANCE = 1e-6
MAX_ANGLE_STEP = 0.5 * math.pi

MapFamily = Callable[[float], ProductMap]


def polar_angle(matrices: npt.ArrayLike) -> Array:
    """Angle of the rotation factor Q in M = Q S (S symmetric positive definite).

    For det M > 0, Q is proportional to M + adj(M)^T, whose angle is
    atan2(c - b, a + d) for M = [[a, b], [c, d]].
    """
    m = np.asarray(matrices, dtype=np.float64)
    return np.arctan2(m[..., 1, 0] - m[..., 0, 1], m[..., 0, 0] + m[..., 1, 1])


@dataclass(frozen=True, eq=False)
class MatrixLoop:
    """Sampled closed path t_k -> M_k, k = 0..N, with M_0 = M_N."""

    times: Array
    matrices: Array  # (N + 1, 2, 2)

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=np.float64)
        matrices = np.asarray(self.matrices, dtype=np.float64)
        if matrices.ndim != 3 or matrices.shape[1:] != (2, 2) or len(times) != len(matrices):
            raise DomainError("T004", f"expected (N+1, 2, 2) samples, got {matrices.shape}")
        if len(matrices) < 2:
            raise DomainError("T004", "a loop needs at least two samples")
        det = np.linalg.det(matrices)
        if np.any(det <= 0.0):
            raise DomainError(
                "T004",
                f"determinant must stay positive (min {float(np.min(det)):.3e})",
            )
        gap = float(np.max(np.abs(matrices[-1] - matrices[0])))
        if gap > ENDPOINT_TOLERANCE:
            raise DomainError("T004", f"loop is not closed (endpoint gap {gap:.3e})")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "matrices", matrices)

    @classmethod
    def sample(cls, path: Callable[[float], Array], n_samples: int) -> MatrixLoop:
        times = np.linspace(0.0, 1.0, n_samples + 1)
        return cls(times, np.stack([path(float(t)) for t in times]))

    def reversed(self) -> MatrixLoop:
        return MatrixLoop(1.0 - self.times[::-1], self.matrices[::-1])


def winding_number(loop: MatrixLoop, trace: Path | None = None) -> int:
    """Number of full turns of the rotation factor along the loop.

    Raises:
        ResolutionError: if consecutive polar angles differ by pi/2 or more
    """
    angles = polar_angle(loop.matrices)
    steps = np.diff(angles)
    steps = (steps + math.pi) % (2.0 * math.pi) - math.pi
    if trace is not None:
        unwrapped = angles[0] + np.concatenate([[0.0], np.cumsum(steps)])
        write_trace(
            trace,
            ["index", "t", "angle"],
            ((k, float(t), float(a)) for k, (t, a) in enumerate(zip(loop.times, unwrapped))),
        )
    if np.any(np.abs(steps) >= MAX_ANGLE_STEP):
        worst = int(np.argmax(np.abs(steps)))
        raise ResolutionError(
            "T003",
            f"polar angle jumps by {float(steps[worst]):.3f} rad between samples "
            f"{worst} and {worst + 1}",
            "Raise the number of loop samples",
        )
    turns = float(np.sum(steps)) / (2.0 * math.pi)
    logger.debug("loop of %d samples turns %.9f times", len(angles), turns)
    return round(turns)


def normal_loop_winding(
    family: MapFamily,
    x: SpherePoint,
    n_samples: int = 64,
    step: float = 1e-5,
    trace: Path | None = None,
) -> int:
    """Winding of s -> normal_action(family(s), x) over s in [0, 1]."""

    def path(t: float) -> Array:
        return normal_action(family(t), x, step).matrix

    return winding_number(MatrixLoop.sample(path, n_samples), trace)
