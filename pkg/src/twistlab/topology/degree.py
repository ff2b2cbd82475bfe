"""Mapping degrees of maps S² -> S² and the induced action on H₂(S² x S²).

The degree of g is (1/4pi) times the integral of g*sigma over S². In polar
coordinates P(theta, phi) the integrand is <g, d_theta g x d_phi g>, taken
with Gauss-Legendre nodes in theta, the trapezoid rule in phi (exact for
trigonometric polynomials of the periodic variable) and central
differences for the partial derivatives.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from twistlab.core.errors import ResolutionError
from twistlab.core.geometry import Array, ProductPoint, SpherePoint, dot, rotate
from twistlab.maps.twist import ProductMap, antidiagonal
from twistlab.topology.trace import write_trace

logger = logging.getLogger(__name__)

__all__ = [
    "SphereMap",
    "Basepoints",
    "DEFAULT_BASEPOINTS",
    "HomologyMatrix",
    "degree_integral",
    "mapping_degree",
    "homology_matrix",
    "sphere_class",
    "intersection_number",
    "antidiagonal_orientation",
]

SphereMap = Callable[[SpherePoint], SpherePoint]

ROUNDING_TOLERANCE = 0.05
PARAMETER_STEP = 1e-5


@dataclass(frozen=True)
class Basepoints:
    """Slice basepoints: A₁ is carried by w -> (w, y0), A₂ by w -> (x0, w)."""

    x0: tuple[float, float, float]
    y0: tuple[float, float, float]

    def rotated(self, axis: Sequence[float], angle: float) -> Basepoints:
        return Basepoints(
            tuple(rotate(axis, angle, self.x0).tolist()),  # type: ignore[arg-type]
            tuple(rotate(axis, angle, self.y0).tolist()),  # type: ignore[arg-type]
        )


_PRIMARY = Basepoints(x0=(1.0, 0.0, 0.0), y0=(0.0, 0.0, 1.0))
# second set: the first turned by 0.7 rad about (1, 1, 1)
DEFAULT_BASEPOINTS = (_PRIMARY, _PRIMARY.rotated((1.0, 1.0, 1.0), 0.7))


@dataclass(frozen=True)
class HomologyMatrix:
    """Integer action on H₂ in the basis (A₁, A₂); column j is the image of A_j."""

    entries: tuple[tuple[int, int], tuple[int, int]]
    rounding_error: float = 0.0

    @classmethod
    def from_array(cls, values: Array, rounding_error: float = 0.0) -> HomologyMatrix:
        rows = np.rint(values).astype(int).tolist()
        return cls(((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1])), rounding_error)

    def as_array(self) -> Array:
        return np.array(self.entries, dtype=np.int64)

    def __matmul__(self, other: HomologyMatrix) -> HomologyMatrix:
        return HomologyMatrix.from_array(self.as_array() @ other.as_array())

    def __str__(self) -> str:
        (a, b), (c, d) = self.entries
        return f"[[{a},{b}],[{c},{d}]]"


def _parameterization(nodes: int) -> tuple[Array, Array, Array]:
    t, weights = np.polynomial.legendre.leggauss(nodes)
    theta = 0.5 * math.pi * (t + 1.0)
    theta_weights = 0.5 * math.pi * weights
    phi = 2.0 * math.pi * np.arange(nodes) / nodes
    return theta, theta_weights, phi


def _sphere(theta: Array, phi: Array) -> SpherePoint:
    return SpherePoint(
        np.stack(
            [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1
        )
    )


def degree_integral(g: SphereMap, nodes: int = 256, trace: Path | None = None) -> float:
    """(1/4pi) * integral of g*sigma by product quadrature on a nodes x nodes grid."""
    theta, theta_weights, phi = _parameterization(nodes)
    grid_theta, grid_phi = np.meshgrid(theta, phi, indexing="ij")
    h = PARAMETER_STEP

    value = g(_sphere(grid_theta, grid_phi)).coords
    d_theta = (
        g(_sphere(grid_theta + h, grid_phi)).coords - g(_sphere(grid_theta - h, grid_phi)).coords
    ) / (2.0 * h)
    d_phi = (
        g(_sphere(grid_theta, grid_phi + h)).coords - g(_sphere(grid_theta, grid_phi - h)).coords
    ) / (2.0 * h)

    density = dot(value, np.cross(d_theta, d_phi))
    # rows: one polar node each, already summed over the azimuth
    rows = density.sum(axis=1) * (2.0 * math.pi / nodes) * theta_weights
    if trace is not None:
        write_trace(trace, ["index", "value"], ((i, float(v)) for i, v in enumerate(rows)))
    return float(rows.sum() / (4.0 * math.pi))


def mapping_degree(g: SphereMap, nodes: int = 256, trace: Path | None = None) -> int:
    """Degree of g, rounded from the quadrature value.

    Raises:
        ResolutionError: if the quadrature value is not within 0.05 of an integer
    """
    raw = degree_integral(g, nodes, trace)
    degree = round(raw)
    if abs(raw - degree) > ROUNDING_TOLERANCE:
        raise ResolutionError(
            "T001",
            f"quadrature value {raw:.6f} is not close to an integer",
            f"Raise the quadrature resolution (currently {nodes} nodes)",
        )
    return degree


def _slices(f: ProductMap, base: Basepoints) -> list[list[SphereMap]]:
    x0 = SpherePoint(np.array(base.x0))
    y0 = SpherePoint(np.array(base.y0))

    def first(w: SpherePoint) -> ProductPoint:
        return f(ProductPoint(w, SpherePoint(np.broadcast_to(y0.coords, w.coords.shape))))

    def second(w: SpherePoint) -> ProductPoint:
        return f(ProductPoint(SpherePoint(np.broadcast_to(x0.coords, w.coords.shape)), w))

    # entry [i][j] = pr_i o f o incl_j
    return [
        [lambda w: first(w).x, lambda w: second(w).x],
        [lambda w: first(w).y, lambda w: second(w).y],
    ]


def homology_matrix(
    f: ProductMap,
    basepoints: Sequence[Basepoints] = DEFAULT_BASEPOINTS,
    nodes: int = 256,
    trace: Path | None = None,
) -> HomologyMatrix:
    """Action of f on H₂(S² x S²) from the degrees of its projected slices.

    Raises:
        ResolutionError: if a degree is not near an integer, or if the
            basepoint sets disagree
    """
    results = []
    trace_rows: list[tuple[int, int, int, int, float]] = []
    worst = 0.0
    for base in basepoints:
        slices = _slices(f, base)
        raw = np.array([[degree_integral(slices[i][j], nodes) for j in range(2)] for i in range(2)])
        for i in range(2):
            for j in range(2):
                trace_rows.append((len(trace_rows), len(results), i, j, float(raw[i, j])))
        error = float(np.max(np.abs(raw - np.rint(raw))))
        if error > ROUNDING_TOLERANCE:
            raise ResolutionError(
                "T001",
                f"slice degrees {raw.tolist()} are not close to integers",
                f"Raise the quadrature resolution (currently {nodes} nodes)",
            )
        worst = max(worst, error)
        results.append(HomologyMatrix.from_array(raw))
        logger.debug("homology at basepoints %s: %s (rounding %.2e)", base, results[-1], error)

    if trace is not None:
        write_trace(trace, ["index", "basepoints", "row", "column", "value"], trace_rows)

    first = results[0]
    for other in results[1:]:
        if other.entries != first.entries:
            raise ResolutionError(
                "T002",
                f"basepoint sets disagree: {first} vs {other}",
                "The map may not be smooth, or the resolution is too low",
            )
    return HomologyMatrix(first.entries, worst)


def sphere_class(
    embedding: Callable[[SpherePoint], ProductPoint], nodes: int = 256
) -> tuple[int, int]:
    """Class (m1, m2) = m1 A₁ + m2 A₂ of an embedded sphere."""
    return (
        mapping_degree(lambda w: embedding(w).x, nodes),
        mapping_degree(lambda w: embedding(w).y, nodes),
    )


def intersection_number(c1: Sequence[int], c2: Sequence[int]) -> int:
    """Intersection form of S² x S²: A₁.A₁ = A₂.A₂ = 0, A₁.A₂ = 1."""
    return int(c1[0] * c2[1] + c1[1] * c2[0])


def antidiagonal_orientation(f: ProductMap, nodes: int = 256) -> int:
    """Degree of w -> pr₁ f(w, -w): +1 if f preserves the orientation of the antidiagonal."""
    return mapping_degree(lambda w: f(antidiagonal(w)).x, nodes)
