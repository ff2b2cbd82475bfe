"""Exact-formula geometry of S², its rotations and the split symplectic form.

All values are batched: a ``SpherePoint`` holds coordinates of shape (3,) or
(N, 3) and every operation broadcasts over the leading axis. Values are
immutable; their arrays are marked read-only on construction.

Conventions (fixed once, everything downstream depends on them):

* orientation of S² is given by the outward normal, so the area form is
  ``sigma_x(u, v) = <x, u x v>`` with total area 4*pi;
* the form on S² x S² is the split sum ``omega = sigma + sigma``;
* frames come from the coordinate axis on which |x_k| is smallest (ties go
  to the lower index). The frame jumps where the minimizing index changes,
  i.e. on the great-circle arcs |x_i| = |x_j| <= |x_k|. This locus has
  measure zero and frames are only used as charts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from twistlab.core.errors import DomainError

__all__ = [
    "Array",
    "SpherePoint",
    "TangentVector",
    "ProductPoint",
    "ProductTangent",
    "OrientedFrame",
    "dot",
    "rotate",
    "area_form",
    "omega",
    "retract",
    "tangent_frame",
]

Array = npt.NDArray[np.float64]

UNIT_TOLERANCE = 1e-14
TANGENCY_TOLERANCE = 1e-10
BASE_MATCH_TOLERANCE = 1e-12


def dot(a: Array, b: Array) -> Array:
    """Row-wise inner product over the last axis."""
    return np.einsum("...i,...i->...", a, b)


def _frozen(values: Array) -> Array:
    values.flags.writeable = False
    return values


def _unit_rows(coords: Array) -> Array:
    norms = np.linalg.norm(coords, axis=-1, keepdims=True)
    if np.any(norms == 0.0) or not np.all(np.isfinite(norms)):
        raise DomainError("G004", "cannot place a zero or non-finite vector on S²")
    # rows that are already unit pass through bit for bit
    scale = np.where(np.abs(norms - 1.0) > UNIT_TOLERANCE, norms, 1.0)
    return coords / scale


# ============================================================================
# Domain Types
# ============================================================================


@dataclass(frozen=True, eq=False)
class SpherePoint:
    """A point (or a batch of points) on the unit sphere."""

    coords: Array

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords, dtype=np.float64)
        if coords.shape[-1:] != (3,):
            raise DomainError("G004", f"sphere coordinates need a trailing axis of 3, got {coords.shape}")
        object.__setattr__(self, "coords", _frozen(_unit_rows(coords)))

    @property
    def batch_shape(self) -> tuple[int, ...]:
        return self.coords.shape[:-1]

    def __len__(self) -> int:
        if not self.batch_shape:
            raise TypeError("a single SpherePoint has no length")
        return self.batch_shape[0]

    def __getitem__(self, index) -> SpherePoint:
        return SpherePoint(self.coords[index])

    def __neg__(self) -> SpherePoint:
        return SpherePoint(-self.coords)


@dataclass(frozen=True, eq=False)
class TangentVector:
    """A vector tangent to S² at ``base``."""

    base: SpherePoint
    vec: Array

    def __post_init__(self) -> None:
        vec = np.broadcast_to(np.asarray(self.vec, dtype=np.float64), self.base.coords.shape)
        normal = np.abs(dot(vec, self.base.coords))
        scale = 1.0 + np.linalg.norm(vec, axis=-1)
        if np.any(normal > TANGENCY_TOLERANCE * scale):
            raise DomainError(
                "G003",
                f"vector is not tangent at its base point (|<vec, x>| = {float(np.max(normal)):.3e})",
            )
        object.__setattr__(self, "vec", _frozen(np.array(vec)))

    def __getitem__(self, index) -> TangentVector:
        return TangentVector(self.base[index], self.vec[index])


@dataclass(frozen=True, eq=False)
class ProductPoint:
    """A point of S² x S²."""

    x: SpherePoint
    y: SpherePoint

    @classmethod
    def from_arrays(cls, x: Array, y: Array) -> ProductPoint:
        return cls(SpherePoint(x), SpherePoint(y))

    @property
    def batch_shape(self) -> tuple[int, ...]:
        return np.broadcast_shapes(self.x.batch_shape, self.y.batch_shape)

    def __getitem__(self, index) -> ProductPoint:
        return ProductPoint(self.x[index], self.y[index])


@dataclass(frozen=True, eq=False)
class ProductTangent:
    """A tangent vector of S² x S² at (u.base, v.base)."""

    u: TangentVector
    v: TangentVector

    @classmethod
    def at(cls, p: ProductPoint, u: Array, v: Array) -> ProductTangent:
        return cls(TangentVector(p.x, u), TangentVector(p.y, v))

    def __getitem__(self, index) -> ProductTangent:
        return ProductTangent(self.u[index], self.v[index])


@dataclass(frozen=True, eq=False)
class OrientedFrame:
    """Oriented orthonormal frame (e1, e2) of the tangent plane at a point."""

    e1: TangentVector
    e2: TangentVector

    def __post_init__(self) -> None:
        _require_same_base(self.e1.base, self.e2.base)
        a, b = self.e1.vec, self.e2.vec
        gram_error = np.max(
            np.abs(np.stack([dot(a, a) - 1.0, dot(b, b) - 1.0, dot(a, b)], axis=-1))
        )
        if gram_error > TANGENCY_TOLERANCE:
            raise DomainError("G003", f"frame is not orthonormal (error {gram_error:.3e})")
        if np.any(dot(self.e1.base.coords, np.cross(a, b)) <= 0.0):
            raise DomainError("G003", "frame is not positively oriented")

    @property
    def base(self) -> SpherePoint:
        return self.e1.base

    def matrix(self) -> Array:
        """Frame vectors stacked as rows, shape (..., 2, 3)."""
        return np.stack([self.e1.vec, self.e2.vec], axis=-2)


# ============================================================================
# Operations
# ============================================================================


def _require_same_base(a: SpherePoint, b: SpherePoint) -> None:
    if a is b:
        return
    if a.coords.shape != b.coords.shape or not np.allclose(
        a.coords, b.coords, rtol=0.0, atol=BASE_MATCH_TOLERANCE
    ):
        raise DomainError("G002", "tangent vectors are based at different points")


def rotate(axis: npt.ArrayLike, angle: npt.ArrayLike, v: npt.ArrayLike) -> Array:
    """Rotate ``v`` about ``axis/|axis|`` by ``angle`` (Rodrigues' formula).

    Args:
        axis: Nonzero rotation axis, shape (..., 3)
        angle: Angle in radians, scalar or shape (...)
        v: Vectors to rotate, shape (..., 3)

    Returns:
        Rotated vectors; |v| and <v, axis> are preserved

    Raises:
        DomainError: if any axis is zero
    """
    axis = np.asarray(axis, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    angle = np.asarray(angle, dtype=np.float64)

    length = np.linalg.norm(axis, axis=-1, keepdims=True)
    if np.any(length == 0.0):
        raise DomainError("G001", "rotation axis is zero")
    k = axis / length

    c = np.cos(angle)[..., None]
    s = np.sin(angle)[..., None]
    kv = dot(k, v)[..., None]
    return v * c + np.cross(k, v) * s + k * kv * (1.0 - c)


def area_form(x: SpherePoint, u: TangentVector, v: TangentVector) -> Array:
    """Standard area form ``sigma_x(u, v) = <x, u x v>`` on S²."""
    _require_same_base(x, u.base)
    _require_same_base(x, v.base)
    return dot(x.coords, np.cross(u.vec, v.vec))


def omega(p: ProductPoint, a: ProductTangent, b: ProductTangent) -> Array:
    """Split symplectic form on S² x S² (equal areas on both factors)."""
    return area_form(p.x, a.u, b.u) + area_form(p.y, a.v, b.v)


def retract(x: SpherePoint, w: npt.ArrayLike) -> SpherePoint:
    """Chart map ``w -> normalize(x + w)`` for w tangent at x.

    Agrees with the exponential map to first order; ``retract(x, 0) == x``.
    """
    w = np.asarray(w, dtype=np.float64)
    normal = np.abs(dot(w, x.coords))
    if np.any(normal > TANGENCY_TOLERANCE * (1.0 + np.linalg.norm(w, axis=-1))):
        raise DomainError("G003", "retraction needs a tangent displacement")
    return SpherePoint(x.coords + w)


def tangent_frame(x: SpherePoint) -> OrientedFrame:
    """Deterministic oriented orthonormal frame at ``x``.

    e1 is the unit projection of the coordinate axis on which |x_k| is
    smallest, e2 = x x e1. At the north pole this gives e1 = (1,0,0),
    e2 = (0,1,0). No equivariance under rotations is promised.
    """
    coords = x.coords
    index = np.argmin(np.abs(coords), axis=-1)
    axis = np.eye(3)[index]
    e1 = axis - dot(axis, coords)[..., None] * coords
    e1 = e1 / np.linalg.norm(e1, axis=-1, keepdims=True)
    e2 = np.cross(coords, e1)
    return OrientedFrame(TangentVector(x, e1), TangentVector(x, e2))
