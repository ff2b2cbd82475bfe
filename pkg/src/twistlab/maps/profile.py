"""Smooth radial profiles with exact plateaus."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from twistlab.core.geometry import Array

__all__ = ["RadialProfile", "smooth_step", "R_PROFILE", "profile_r"]


def _flat(u: Array) -> Array:
    """exp(-1/u) for u > 0, exactly 0 otherwise."""
    positive = u > 0.0
    safe = np.where(positive, u, 1.0)
    return np.where(positive, np.exp(-1.0 / safe), 0.0)


def smooth_step(u: npt.ArrayLike) -> Array:
    """C-infinity step: exactly 0 for u <= 0, exactly 1 for u >= 1.

    B(u) = g(u) / (g(u) + g(1 - u)) with g(u) = exp(-1/u); B(u) + B(1-u) = 1.
    """
    u = np.asarray(u, dtype=np.float64)
    left = _flat(u)
    right = _flat(1.0 - u)
    return left / (left + right)


@dataclass(frozen=True)
class RadialProfile:
    """Smooth function equal to ``inner_value`` left of ``inner_edge`` and
    ``outer_value`` right of ``outer_edge``, bump-interpolated in between."""

    inner_value: float
    outer_value: float
    inner_edge: float
    outer_edge: float

    def __post_init__(self) -> None:
        if not self.inner_edge < self.outer_edge:
            raise ValueError("inner_edge must be smaller than outer_edge")

    def __call__(self, t: npt.ArrayLike) -> Array:
        t = np.asarray(t, dtype=np.float64)
        u = (t - self.inner_edge) / (self.outer_edge - self.inner_edge)
        # written around the outer plateau so both plateaus are exact
        return self.outer_value + (self.inner_value - self.outer_value) * smooth_step(1.0 - u)

    def mirror(self, t: npt.ArrayLike) -> Array:
        """Value at the point reflected through the midpoint of the ramp."""
        t = np.asarray(t, dtype=np.float64)
        return self(self.inner_edge + self.outer_edge - t)


# the twist profile: -pi for t <= 1/2, 0 for t >= 1
R_PROFILE = RadialProfile(inner_value=-math.pi, outer_value=0.0, inner_edge=0.5, outer_edge=1.0)


def profile_r(t: npt.ArrayLike) -> Array:
    """The cutoff r: exactly -pi on (-inf, 1/2], exactly 0 on [1, inf)."""
    return R_PROFILE(t)
