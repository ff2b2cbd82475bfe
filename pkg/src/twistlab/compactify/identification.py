"""Identification of int(T) with the complement of the diagonal in S² x S².

    phi(x, y) = (b, f(s) * (b x (x + y))),  b = (x - y)/|x - y|,  s = |x + y|

Since <x + y, x - y> = 0 the covector is orthogonal to b and has length
s * f(s). The antidiagonal (s = 0) lands on the zero section with base x;
the deleted diagonal (s -> 2) is pushed to the boundary |p| = 1.
"""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt

from twistlab.compactify.cotangent import CotangentPoint, sample_cotangent
from twistlab.compactify.profile_f import CompactifyProfile, default_profile
from twistlab.core.errors import DomainError
from twistlab.core.geometry import ProductPoint, SpherePoint, rotate
from twistlab.core.sampling import sample_points
from twistlab.maps.twist import IDENTITY_RADIUS, tau

logger = logging.getLogger(__name__)

__all__ = [
    "phi",
    "phi_inv",
    "conjugated_twist",
    "identity_threshold",
    "boundary_decay",
    "equivariance_residual",
]

DIAGONAL_TOLERANCE = 1e-12


def phi(p: ProductPoint, profile: CompactifyProfile | None = None) -> CotangentPoint:
    """Send (x, y) off the diagonal to a point of int(T).

    Raises:
        DomainError: if some x == y
    """
    profile = profile or default_profile()
    x, y = np.broadcast_arrays(p.x.coords, p.y.coords)
    difference = x - y
    gap = np.linalg.norm(difference, axis=-1, keepdims=True)
    if np.any(gap <= DIAGONAL_TOLERANCE):
        raise DomainError(
            "C001",
            "phi is undefined on the diagonal {(x, x)}",
            "The diagonal is the deleted boundary of the disc bundle",
        )
    base = difference / gap
    axis = x + y
    s = np.linalg.norm(axis, axis=-1)
    covector = profile(s)[..., None] * np.cross(base, axis)
    return CotangentPoint(SpherePoint(base), covector)


def phi_inv(q: CotangentPoint, profile: CompactifyProfile | None = None) -> ProductPoint:
    """Inverse of :func:`phi`.

    s is recovered from |p| = s f(s) by bisection; then x + y = -(u x p)/f(s)
    and x - y = sqrt(4 - s²) u.

    Raises:
        DomainError: if some |p| >= 1
    """
    profile = profile or default_profile()
    u = q.base.coords
    p = q.covector
    s = profile.inverse_norm(q.norm)
    axis = -np.cross(u, p) / profile(s)[..., None]
    gap = np.sqrt(np.maximum(4.0 - s * s, 0.0))[..., None]
    return ProductPoint.from_arrays(0.5 * (axis + gap * u), 0.5 * (axis - gap * u))


def identity_threshold(profile: CompactifyProfile | None = None) -> float:
    """Covector length of the image of {|x + y| = 1}; the twist is trivial beyond it."""
    profile = profile or default_profile()
    return float(profile.norm(IDENTITY_RADIUS))


def conjugated_twist(q: CotangentPoint, profile: CompactifyProfile | None = None) -> CotangentPoint:
    """The model Dehn twist phi o tau o phi_inv on int(T).

    Rows outside the twist's support are returned unchanged; the zero
    section is mapped antipodally.
    """
    profile = profile or default_profile()
    base = np.array(np.broadcast_to(q.base.coords, q.covector.shape))
    covector = np.array(q.covector)
    moving = profile.inverse_norm(q.norm) < IDENTITY_RADIUS
    if np.any(moving):
        inner = CotangentPoint(SpherePoint(base[moving]), covector[moving])
        image = phi(tau(phi_inv(inner, profile)), profile)
        base[moving] = image.base.coords
        covector[moving] = image.covector
    return CotangentPoint(SpherePoint(base), covector)


def boundary_decay(
    radii: npt.ArrayLike,
    n_samples: int = 1024,
    seed: int = 0,
    profile: CompactifyProfile | None = None,
) -> list[tuple[float, float]]:
    """Max displacement of the conjugated twist at each covector length.

    Returns:
        (radius, max |conjugated_twist(q) - q|) per requested radius, with
        the displacement measured in the ambient R³ x R³
    """
    profile = profile or default_profile()
    sample = sample_cotangent(seed, n_samples)
    directions = sample.covector / np.linalg.norm(sample.covector, axis=-1, keepdims=True)
    rows = []
    for radius in np.asarray(radii, dtype=np.float64).reshape(-1):
        q = CotangentPoint(sample.base, radius * directions)
        image = conjugated_twist(q, profile)
        displacement = np.sqrt(
            np.sum((image.base.coords - q.base.coords) ** 2, axis=-1)
            + np.sum((image.covector - q.covector) ** 2, axis=-1)
        )
        rows.append((float(radius), float(np.max(displacement))))
        logger.debug("boundary decay at |p| = %.4f: %.3e", radius, rows[-1][1])
    return rows


def equivariance_residual(
    n_samples: int = 1024, seed: int = 0, profile: CompactifyProfile | None = None
) -> float:
    """Max deviation of phi(R x, R y) from (R u, R p) over random rotations R."""
    profile = profile or default_profile()
    points = sample_points(seed, n_samples)
    rotations = sample_points(seed + 1, n_samples)
    axis, angle = rotations.x.coords, np.pi * rotations.y.coords[:, 2]
    keep = np.linalg.norm(points.x.coords - points.y.coords, axis=-1) > 1e-6
    x, y = points.x.coords[keep], points.y.coords[keep]
    axis, angle = axis[keep], angle[keep]

    moved = phi(ProductPoint.from_arrays(rotate(axis, angle, x), rotate(axis, angle, y)), profile)
    image = phi(ProductPoint.from_arrays(x, y), profile)
    base_error = np.abs(moved.base.coords - rotate(axis, angle, image.base.coords))
    covector_error = np.abs(moved.covector - rotate(axis, angle, image.covector))
    return float(max(np.max(base_error), np.max(covector_error)))
