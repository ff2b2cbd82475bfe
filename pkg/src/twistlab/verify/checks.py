"""Symplectic checks built on the differential engine.

Sampling follows :mod:`twistlab.core.sampling`: every report is a pure
function of (map, n_samples, seed, step), whatever the worker count.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from twistlab.compactify.cotangent import cotangent_block
from twistlab.core.errors import DomainError, PreconditionError
from twistlab.core.geometry import (
    Array,
    ProductPoint,
    SpherePoint,
    dot,
    retract,
    tangent_frame,
)
from twistlab.core.sampling import block_ranges, sample_block
from twistlab.maps.twist import ProductMap, axis_length, mu, rho
from twistlab.verify.charts import ProductChart, chart_at
from twistlab.verify.differential import linearize, pullback_residual
from twistlab.verify.report import ResidualStats, VerificationReport, reduce_blocks

logger = logging.getLogger(__name__)

__all__ = [
    "LinearMap2x2",
    "rotation_matrix",
    "symplectic_report",
    "eta_symplectic_report",
    "hamiltonian_residual",
    "moment_map_report",
    "normal_action",
    "lagrangian_residual",
    "fit_pullback_constant",
    "squeeze_second_factor",
    "FIXED_POINT_TOLERANCE",
    "MOMENT_MAP_FLOOR",
    "DIAGONAL_FLOOR",
]

FIXED_POINT_TOLERANCE = 1e-8
# the rotation axis x + y is ill-conditioned below this length
MOMENT_MAP_FLOOR = 0.1
# D phi grows like 1/|x - y| near the deleted diagonal
DIAGONAL_FLOOR = 0.05


@dataclass(frozen=True, eq=False)
class LinearMap2x2:
    """A (batch of) 2 x 2 matrices between two framed planes."""

    matrix: Array
    source_frame: Array | None = None  # (..., 2, 3) or (..., 2, 6)
    target_frame: Array | None = None
    det: Array = field(init=False)

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=np.float64)
        if matrix.shape[-2:] != (2, 2):
            raise DomainError("T004", f"expected (..., 2, 2) matrices, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise DomainError("T004", "matrix entries must be finite")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(
            self,
            "det",
            matrix[..., 0, 0] * matrix[..., 1, 1] - matrix[..., 0, 1] * matrix[..., 1, 0],
        )

    def deviation_from(self, other: Array) -> Array:
        """Entrywise max deviation from ``other`` per matrix."""
        return np.max(np.abs(self.matrix - np.asarray(other)), axis=(-2, -1))


def rotation_matrix(angle: Any) -> Array:
    """Counter-clockwise rotation matrices for the given angles."""
    angle = np.asarray(angle, dtype=np.float64)
    c, s = np.cos(angle), np.sin(angle)
    return np.stack([np.stack([c, -s], axis=-1), np.stack([s, c], axis=-1)], axis=-2)


# ============================================================================
# Symplecticity
# ============================================================================


def symplectic_report(
    fn: ProductMap,
    n_samples: int = 10_000,
    seed: int = 0,
    step: float = 1e-5,
    tol: float = 1e-6,
    name: str = "symplectic",
    workers: int = 1,
    min_axis_length: float = 0.0,
) -> VerificationReport:
    """Max and mean omega-pullback residual over random points and unit tangent pairs.

    Points with |x + y| <= min_axis_length are skipped; maps built on the
    circle action lose finite-difference accuracy near the antidiagonal.
    """

    def evaluate(block: int, count: int) -> Array:
        sample = sample_block(seed, block, count)
        keep = axis_length(sample.point) > min_axis_length
        if not np.any(keep):
            return np.empty(0)
        return pullback_residual(
            fn, sample.point[keep], sample.a_coords[keep], sample.b_coords[keep], step
        )

    return reduce_blocks(n_samples, evaluate, workers).report(name, seed, step, tol)


def eta_symplectic_report(
    fn: Callable[[Any], Any],
    n_samples: int = 10_000,
    seed: int = 0,
    step: float = 1e-5,
    tol: float = 1e-5,
    name: str = "eta-symplectic",
    workers: int = 1,
) -> VerificationReport:
    """As :func:`symplectic_report`, for maps of int(T) against eta."""

    def evaluate(block: int, count: int) -> Array:
        point, a, b = cotangent_block(seed, block, count)
        return pullback_residual(fn, point, a, b, step)

    return reduce_blocks(n_samples, evaluate, workers).report(name, seed, step, tol)


def squeeze_second_factor(p: ProductPoint) -> ProductPoint:
    """(x, y) -> (x, normalize(y + e3/2)): smooth, not area preserving."""
    y = p.y.coords + np.array([0.0, 0.0, 0.5])
    return ProductPoint(p.x, SpherePoint(y))


# ============================================================================
# Moment map
# ============================================================================


def hamiltonian_residual(p: ProductPoint, step: float = 1e-5, convention: float = 1.0) -> Array:
    """Row-wise max over frame vectors v of |omega(v, X) - convention * d mu(v)|.

    X is the generator d/dt rho(t, p) at t = 0. The identity holds with
    convention = +1, i.e. i_X omega = -d mu for mu = -|x + y|; flipping the
    convention leaves a residual of about 2 |d mu|.

    Raises:
        DomainError: if some point lies on the antidiagonal
    """
    if np.any(axis_length(p) <= 0.0):
        raise DomainError("M001", "the circle action has no generator on the antidiagonal")
    chart = ProductChart(p)
    generator = (
        chart.coordinates(rho(step, chart.base)) - chart.coordinates(rho(-step, chart.base))
    ) / (2.0 * step)

    worst = np.zeros(chart.x.shape[:-1])
    for k in range(4):
        v = np.zeros(chart.x.shape[:-1] + (4,))
        v[..., k] = 1.0
        shift = step * v
        d_mu = (mu(chart.point(shift)) - mu(chart.point(-shift))) / (2.0 * step)
        residual = np.abs(chart.form(v, generator) - convention * d_mu)
        worst = np.maximum(worst, residual)
    return worst


def moment_map_report(
    n_samples: int = 10_000,
    seed: int = 0,
    step: float = 1e-5,
    tol: float = 1e-6,
    convention: float = 1.0,
    name: str = "moment-map",
    workers: int = 1,
) -> VerificationReport:
    """:func:`hamiltonian_residual` over random points with |x + y| above the floor."""

    def evaluate(block: int, count: int) -> Array:
        point = sample_block(seed, block, count).point
        keep = axis_length(point) > MOMENT_MAP_FLOOR
        if not np.any(keep):
            return np.empty(0)
        return hamiltonian_residual(point[keep], step, convention)

    return reduce_blocks(n_samples, evaluate, workers).report(name, seed, step, tol)


# ============================================================================
# Normal bundle of the diagonal
# ============================================================================


def normal_action(fn: ProductMap, x: SpherePoint, step: float = 1e-5) -> LinearMap2x2:
    """Action of D fn on the normal space of the diagonal at (x, x).

    The normal space is represented by n_i = (e_i, -e_i)/sqrt(2) for the
    tangent frame (e1, e2) at x, and the matrix is N_ij = <n_i, D fn n_j>.

    Raises:
        PreconditionError: if fn moves (x, x) by more than 1e-8
    """
    p = ProductPoint(x, x)
    image = fn(p)
    moved = np.maximum(
        np.max(np.abs(image.x.coords - x.coords), axis=-1),
        np.max(np.abs(image.y.coords - x.coords), axis=-1),
    )
    if np.any(moved > FIXED_POINT_TOLERANCE):
        raise PreconditionError(
            "V001",
            f"map does not fix the diagonal point (moved by {float(np.max(moved)):.3e})",
        )
    jacobian = linearize(fn, p, step).matrix
    normal = np.array([[1.0, 0.0, -1.0, 0.0], [0.0, 1.0, 0.0, -1.0]]) / math.sqrt(2.0)
    matrix = np.einsum("ik,...kl,jl->...ij", normal, jacobian, normal)
    frame = tangent_frame(x).matrix()
    return LinearMap2x2(matrix, frame, frame)


# ============================================================================
# Lagrangian embeddings and the compactification scale
# ============================================================================


def lagrangian_residual(
    embedding: Callable[[SpherePoint], Any],
    n_samples: int = 1024,
    seed: int = 0,
    step: float = 1e-5,
) -> float:
    """Max |form(T1, T2)| over the tangent planes of an embedded sphere.

    T1, T2 are the images of the tangent frame at random w under the
    embedding, taken by central differences in the target chart.
    """
    worst = 0.0
    for block, _, count in block_ranges(n_samples):
        w = sample_block(seed, block, count).point.x
        frame = tangent_frame(w).matrix()
        target = chart_at(embedding(w))
        vectors = []
        for k in range(2):
            shift = step * frame[..., k, :]
            plus = target.coordinates(embedding(retract(w, shift)))
            minus = target.coordinates(embedding(retract(w, -shift)))
            vectors.append((plus - minus) / (2.0 * step))
        worst = max(worst, float(np.max(np.abs(target.form(vectors[0], vectors[1])))))
    return worst


def fit_pullback_constant(
    fn: Callable[[ProductPoint], Any],
    n_samples: int = 10_000,
    seed: int = 0,
    step: float = 1e-5,
    tol: float = 1e-4,
    name: str = "compactify-pullback",
) -> tuple[float, VerificationReport]:
    """Least-squares c with fn* eta = c omega, and the relative residual report.

    The residual is |eta(D fn a, D fn b) - c omega(a, b)| / (1 + |omega(a, b)|)
    over random points with |x - y| above the diagonal floor.
    """
    pulled_parts, base_parts = [], []
    for block, _, count in block_ranges(n_samples):
        sample = sample_block(seed, block, count)
        gap = np.linalg.norm(sample.point.x.coords - sample.point.y.coords, axis=-1)
        keep = gap > DIAGONAL_FLOOR
        point = sample.point[keep]
        a, b = sample.a_coords[keep], sample.b_coords[keep]
        lin = linearize(fn, point, step)
        pulled_parts.append(lin.target.form(lin.push(a), lin.push(b)))
        base_parts.append(lin.source.form(a, b))

    pulled = np.concatenate(pulled_parts)
    base = np.concatenate(base_parts)
    constant = float(dot(pulled, base) / dot(base, base))
    residual = np.abs(pulled - constant * base) / (1.0 + np.abs(base))
    logger.debug("fitted pullback constant %.12f over %d samples", constant, len(base))
    return constant, ResidualStats.of(residual).report(name, seed, step, tol)
