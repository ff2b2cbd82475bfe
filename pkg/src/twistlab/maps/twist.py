"""The explicit maps on S² x S²: circle action, moment map, Dehn twist,
the homotopy from the squared twist to the identity, the swap and the loop.

Every map takes and returns ``ProductPoint`` batches. Branches are chosen
row by row from ``s = |x + y|``; rows that land on a plateau of the twist
profile (identity or swap) are copied through bit for bit.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
import numpy.typing as npt

from twistlab.core.errors import DomainError
from twistlab.core.geometry import Array, ProductPoint, SpherePoint, rotate
from twistlab.maps.profile import profile_r

__all__ = [
    "ProductMap",
    "SWAP_RADIUS",
    "IDENTITY_RADIUS",
    "identity",
    "compose",
    "diagonal",
    "antidiagonal",
    "axis_length",
    "rho",
    "mu",
    "tau",
    "tau_inv",
    "homotopy_h",
    "swap_iota",
    "loop_lambda",
]

ProductMap = Callable[[ProductPoint], ProductPoint]

SWAP_RADIUS = 0.5
IDENTITY_RADIUS = 1.0
ANTIDIAGONAL_TOLERANCE = 1e-15


def _arrays(p: ProductPoint) -> tuple[Array, Array, tuple[int, ...]]:
    x, y = np.broadcast_arrays(p.x.coords, p.y.coords)
    shape = x.shape[:-1]
    return x.reshape(-1, 3), y.reshape(-1, 3), shape


def _pack(x: Array, y: Array, shape: tuple[int, ...]) -> ProductPoint:
    return ProductPoint(SpherePoint(x.reshape(shape + (3,))), SpherePoint(y.reshape(shape + (3,))))


def _rotate_rows(x: Array, y: Array, rows: Array, angle: Array) -> tuple[Array, Array]:
    """Rotate the selected rows of both factors about x + y."""
    out_x, out_y = x.copy(), y.copy()
    if np.any(rows):
        axis = x[rows] + y[rows]
        out_x[rows] = rotate(axis, angle, x[rows])
        out_y[rows] = rotate(axis, angle, y[rows])
    return out_x, out_y


def _per_row(values: npt.ArrayLike, count: int) -> Array:
    return np.broadcast_to(np.asarray(values, dtype=np.float64).reshape(-1), (count,))


def identity(p: ProductPoint) -> ProductPoint:
    return p


def compose(*maps: ProductMap) -> ProductMap:
    """Composition ``maps[0] o maps[1] o ...`` (rightmost applied first)."""

    def composed(p: ProductPoint) -> ProductPoint:
        for f in reversed(maps):
            p = f(p)
        return p

    return composed


def diagonal(x: SpherePoint) -> ProductPoint:
    return ProductPoint(x, x)


def antidiagonal(x: SpherePoint) -> ProductPoint:
    return ProductPoint(x, -x)


def axis_length(p: ProductPoint) -> Array:
    """|x + y|, the radial coordinate every branch is decided on."""
    return np.linalg.norm(p.x.coords + p.y.coords, axis=-1)


def mu(p: ProductPoint) -> Array:
    """Moment map of the circle action: -|x + y|, with values in [-2, 0]."""
    return -axis_length(p)


def rho(t: npt.ArrayLike, p: ProductPoint) -> ProductPoint:
    """Circle action: rotate both factors about x + y by angle ``t``.

    Raises:
        DomainError: if any point lies on the antidiagonal
    """
    x, y, shape = _arrays(p)
    s = np.linalg.norm(x + y, axis=-1)
    if np.any(s <= ANTIDIAGONAL_TOLERANCE):
        raise DomainError("M001", "rho is undefined on the antidiagonal {(x, -x)}")
    rows = np.ones(len(x), dtype=bool)
    out_x, out_y = _rotate_rows(x, y, rows, _per_row(t, len(x)))
    return _pack(out_x, out_y, shape)


def _twist(p: ProductPoint, direction: float) -> ProductPoint:
    x, y, shape = _arrays(p)
    s = np.linalg.norm(x + y, axis=-1)
    swap = s <= SWAP_RADIUS
    moving = ~swap & (s < IDENTITY_RADIUS)

    out_x, out_y = _rotate_rows(x, y, moving, direction * profile_r(s[moving]))
    out_x[swap] = y[swap]
    out_y[swap] = x[swap]
    return _pack(out_x, out_y, shape)


def tau(p: ProductPoint) -> ProductPoint:
    """The generalized Dehn twist.

    Swap on ``|x+y| <= 1/2``; rotation by ``r(|x+y|)`` about x + y otherwise.
    The identity on ``|x+y| >= 1`` since r vanishes there.
    """
    return _twist(p, 1.0)


def tau_inv(p: ProductPoint) -> ProductPoint:
    """Inverse twist: swap on ``|x+y| <= 1/2``, rotation by ``-r`` otherwise."""
    return _twist(p, -1.0)


def homotopy_h(s: float, p: ProductPoint) -> ProductPoint:
    """Path from the identity (s = 0) to tau squared (s = 1).

    Identity on ``|x+y| <= 1/2``; rotation by ``2s(pi + r(|x+y|))`` otherwise.

    Raises:
        DomainError: if s is outside [0, 1]
    """
    if not 0.0 <= s <= 1.0:
        raise DomainError("M002", f"homotopy parameter must lie in [0, 1], got {s}")
    x, y, shape = _arrays(p)
    radius = np.linalg.norm(x + y, axis=-1)
    moving = radius > SWAP_RADIUS
    angle = 2.0 * s * (math.pi + profile_r(radius[moving]))
    out_x, out_y = _rotate_rows(x, y, moving, angle)
    return _pack(out_x, out_y, shape)


def swap_iota(p: ProductPoint) -> ProductPoint:
    """The involution exchanging the two factors."""
    return ProductPoint(p.y, p.x)


def loop_lambda(t: float, p: ProductPoint) -> ProductPoint:
    """Loop of diffeomorphisms fixing the diagonal: rotate x about y by 2*pi*t."""
    x, y, shape = _arrays(p)
    out_x = rotate(y, 2.0 * math.pi * t, x)
    return _pack(out_x, y, shape)
