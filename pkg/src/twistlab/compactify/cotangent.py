"""The cotangent bundle of S² in its embedded model.

T*S² = {(u, p) : |u| = 1, <u, p> = 0} inside R³ x R³. A tangent vector at
(u, p) is a pair (du, dp) with <u, du> = 0 and <u, dp> + <du, p> = 0. The
canonical 1-form is lambda(du, dp) = <p, du> and

    eta(A, B) = <A.dp, B.du> - <B.dp, A.du>

is its exterior derivative (eta = d lambda). With this sign,
eta((e, 0), (0, e)) = -1 for a unit tangent e.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

from twistlab.core.errors import DomainError
from twistlab.core.geometry import Array, SpherePoint, dot, tangent_frame
from twistlab.core.sampling import BLOCK_SIZE, block_ranges, gaussian_block

logger = logging.getLogger(__name__)

__all__ = [
    "CotangentPoint",
    "CotangentTangent",
    "CotangentFrame",
    "cotangent_frame",
    "eta",
    "eta_closedness_residual",
    "cotangent_block",
    "sample_cotangent",
]

ORTHOGONALITY_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class CotangentPoint:
    """A point of the open unit-disc bundle int(T)."""

    base: SpherePoint
    covector: Array

    def __post_init__(self) -> None:
        covector = np.broadcast_to(
            np.asarray(self.covector, dtype=np.float64), self.base.coords.shape
        ).copy()
        normal = np.abs(dot(covector, self.base.coords))
        if np.any(normal > ORTHOGONALITY_TOLERANCE):
            raise DomainError(
                "C003",
                f"covector is not orthogonal to its base point (|<p, u>| = {float(np.max(normal)):.3e})",
            )
        if np.any(np.linalg.norm(covector, axis=-1) >= 1.0):
            raise DomainError("C002", "covector must have length < 1")
        covector.flags.writeable = False
        object.__setattr__(self, "covector", covector)

    @classmethod
    def from_arrays(cls, base: Array, covector: Array) -> CotangentPoint:
        return cls(SpherePoint(base), covector)

    @property
    def batch_shape(self) -> tuple[int, ...]:
        return self.base.batch_shape

    @property
    def norm(self) -> Array:
        return np.linalg.norm(self.covector, axis=-1)

    def __getitem__(self, index) -> CotangentPoint:
        return CotangentPoint(self.base[index], self.covector[index])


@dataclass(frozen=True, eq=False)
class CotangentTangent:
    """Tangent vector (du, dp) of T*S² in the embedded model."""

    du: Array
    dp: Array


@dataclass(frozen=True, eq=False)
class CotangentFrame:
    """Basis of the tangent space at (u, p), built on the sphere frame (e1, e2) at u:

    (e1, -<p,e1> u), (e2, -<p,e2> u), (0, e1), (0, e2)
    """

    point: CotangentPoint
    e: Array  # (..., 2, 3)

    def tangent(self, coords: Array) -> CotangentTangent:
        """Tangent vector with the given frame coordinates (..., 4)."""
        u = self.point.base.coords
        p = self.point.covector
        du = np.einsum("...k,...ki->...i", coords[..., 0:2], self.e)
        dp = np.einsum("...k,...ki->...i", coords[..., 2:4], self.e)
        dp = dp - dot(p, du)[..., None] * u
        return CotangentTangent(du, dp)

    def components(self, t: CotangentTangent) -> Array:
        """Frame coordinates (..., 4) of a tangent vector."""
        du = np.einsum("...ki,...i->...k", self.e, t.du)
        dp = np.einsum("...ki,...i->...k", self.e, t.dp)
        return np.concatenate([du, dp], axis=-1)

    def retract(self, coords: Array) -> CotangentPoint:
        """Chart map around the frame's point; its differential at 0 is the frame."""
        u = self.point.base.coords
        step = self.tangent(coords)
        moved = u + step.du
        new_base = moved / np.linalg.norm(moved, axis=-1, keepdims=True)
        lifted = self.point.covector + step.dp
        covector = lifted - dot(lifted, new_base)[..., None] * new_base
        return CotangentPoint(SpherePoint(new_base), covector)

    def coordinates(self, other: CotangentPoint) -> Array:
        """Exact inverse of :meth:`retract` for nearby points."""
        u = self.point.base.coords
        p = self.point.covector
        u2 = other.base.coords
        p2 = other.covector
        cosine = dot(u2, u)[..., None]
        du = u2 / cosine - u
        kappa = -(dot(p, du)[..., None] + dot(p2, u)[..., None]) / cosine
        dp = p2 - p + kappa * u2
        return np.concatenate(
            [
                np.einsum("...ki,...i->...k", self.e, du),
                np.einsum("...ki,...i->...k", self.e, dp),
            ],
            axis=-1,
        )


def cotangent_frame(q: CotangentPoint) -> CotangentFrame:
    return CotangentFrame(q, tangent_frame(q.base).matrix())


def cotangent_block(
    seed: int, block: int, count: int = BLOCK_SIZE, max_norm: float = 0.99
) -> tuple[CotangentPoint, Array, Array]:
    """Seeded points of int(T) with two unit tangent vectors in frame coordinates.

    Uses the block scheme of :mod:`twistlab.core.sampling` with fifteen
    Gaussian columns: base (3), covector direction (3), radius (1), a (4),
    b (4). Covectors are uniform in each disc fibre up to ``max_norm``.
    """
    g = gaussian_block(seed, block, columns=15)[:count]
    base = g[:, 0:3] / np.linalg.norm(g[:, 0:3], axis=-1, keepdims=True)
    direction = g[:, 3:6] - dot(g[:, 3:6], base)[:, None] * base
    direction /= np.linalg.norm(direction, axis=-1, keepdims=True)
    radius = max_norm * np.sqrt(ndtr(g[:, 6]))
    point = CotangentPoint.from_arrays(base, radius[:, None] * direction)
    a = g[:, 7:11] / np.linalg.norm(g[:, 7:11], axis=-1, keepdims=True)
    b = g[:, 11:15] / np.linalg.norm(g[:, 11:15], axis=-1, keepdims=True)
    return point, a, b


def sample_cotangent(seed: int, n_samples: int, max_norm: float = 0.99) -> CotangentPoint:
    """The first ``n_samples`` points of the seeded cotangent stream, as one batch."""
    bases, covectors = [], []
    for block, _, count in block_ranges(n_samples):
        point, _, _ = cotangent_block(seed, block, count, max_norm)
        bases.append(point.base.coords)
        covectors.append(point.covector)
    return CotangentPoint.from_arrays(np.concatenate(bases), np.concatenate(covectors))


def eta(q: CotangentPoint, a: CotangentTangent, b: CotangentTangent) -> Array:
    """Canonical symplectic form d(lambda_can) at q.

    Raises:
        DomainError: if a or b is not tangent to T*S² at q
    """
    u = q.base.coords
    p = q.covector
    for t in (a, b):
        base_error = np.abs(dot(t.du, u))
        fibre_error = np.abs(dot(t.dp, u) + dot(t.du, p))
        scale = 1.0 + np.linalg.norm(t.du, axis=-1) + np.linalg.norm(t.dp, axis=-1)
        if np.any(np.maximum(base_error, fibre_error) > ORTHOGONALITY_TOLERANCE * scale):
            raise DomainError("C003", "vector is not tangent to T*S² at the given point")
    return dot(a.dp, b.du) - dot(b.dp, a.du)


def _chart_form(frame: CotangentFrame, c: Array, step: float) -> Array:
    """Components eta(d_j, d_k) of eta in the chart ``frame.retract`` at coords c.

    Coordinate vectors are obtained by central differences in the ambient
    model, which is linear, so eta applies to them directly.
    """
    vectors = []
    for j in range(4):
        shift = np.zeros_like(c)
        shift[..., j] = step
        plus = frame.retract(c + shift)
        minus = frame.retract(c - shift)
        vectors.append(
            CotangentTangent(
                (plus.base.coords - minus.base.coords) / (2 * step),
                (plus.covector - minus.covector) / (2 * step),
            )
        )
    components = np.zeros(c.shape[:-1] + (4, 4))
    for j in range(4):
        for k in range(4):
            # ambient differences are tangent only to O(step²); evaluate without the check
            a, b = vectors[j], vectors[k]
            components[..., j, k] = dot(a.dp, b.du) - dot(b.dp, a.du)
    return components


def eta_closedness_residual(
    n_samples: int = 256, seed: int = 0, inner_step: float = 1e-4, outer_step: float = 1e-3
) -> float:
    """Max |d eta| over random points and all coordinate 3-frames.

    d eta(d_i, d_j, d_k) = d_i eta_jk - d_j eta_ik + d_k eta_ij, computed with
    nested central differences in the retraction chart around random points
    of int(T).
    """
    # covectors stay clear of the boundary so chart samples remain inside the disc
    points = sample_cotangent(seed, n_samples, max_norm=0.9)
    frame = cotangent_frame(points)

    origin = np.zeros((n_samples, 4))
    derivatives = []
    for i in range(4):
        shift = np.zeros_like(origin)
        shift[:, i] = outer_step
        plus = _chart_form(frame, origin + shift, inner_step)
        minus = _chart_form(frame, origin - shift, inner_step)
        derivatives.append((plus - minus) / (2 * outer_step))

    worst = 0.0
    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(j + 1, 4):
                d = derivatives[i][:, j, k] - derivatives[j][:, i, k] + derivatives[k][:, i, j]
                worst = max(worst, float(np.max(np.abs(d))))
    logger.debug("eta closedness residual %.3e over %d points", worst, n_samples)
    return worst
