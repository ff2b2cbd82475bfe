"""Retraction charts used to differentiate maps numerically.

A chart is centred at a (batched) point and identifies a neighbourhood
with R⁴ through an oriented orthonormal frame. Its differential at the
origin is the frame itself, so Jacobians taken between two charts are
differentials expressed in frame coordinates.

Each chart also carries the symplectic form of its manifold evaluated in
those coordinates: omega on S² x S², eta on T*S².
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from functools import singledispatch
from typing import Any

import numpy as np

from twistlab.compactify.cotangent import CotangentFrame, CotangentPoint, cotangent_frame, eta
from twistlab.core.geometry import (
    Array,
    ProductPoint,
    ProductTangent,
    SpherePoint,
    dot,
    omega,
    tangent_frame,
)

__all__ = ["Chart", "ProductChart", "CotangentChart", "chart_at"]


class Chart(ABC):
    """Local coordinates (..., 4) around a batch of centre points."""

    @abstractmethod
    def point(self, coords: Array) -> Any:
        """Point with the given coordinates; ``point(0)`` is the centre."""

    @abstractmethod
    def coordinates(self, point: Any) -> Array:
        """Inverse of :meth:`point` for points near the centre."""

    @abstractmethod
    def form(self, a: Array, b: Array) -> Array:
        """Symplectic form at the centre on tangent vectors given in coordinates."""


def _sphere_coordinates(centre: Array, frame: Array, q: Array) -> Array:
    # w = q/<q, x> - x inverts normalize(x + w) for w tangent at x
    w = q / dot(q, centre)[..., None] - centre
    return np.einsum("...ki,...i->...k", frame, w)


class ProductChart(Chart):
    """Chart (c0, c1, c2, c3) -> (normalize(x + c0 e1 + c1 e2), normalize(y + c2 f1 + c3 f2))."""

    def __init__(self, centre: ProductPoint) -> None:
        self.centre = centre
        self.x, self.y = np.broadcast_arrays(centre.x.coords, centre.y.coords)
        self.base = ProductPoint.from_arrays(self.x, self.y)
        self.fx = tangent_frame(SpherePoint(self.x)).matrix()
        self.fy = tangent_frame(SpherePoint(self.y)).matrix()

    def point(self, coords: Array) -> ProductPoint:
        u = np.einsum("...k,...ki->...i", coords[..., 0:2], self.fx)
        v = np.einsum("...k,...ki->...i", coords[..., 2:4], self.fy)
        return ProductPoint.from_arrays(self.x + u, self.y + v)

    def coordinates(self, point: ProductPoint) -> Array:
        return np.concatenate(
            [
                _sphere_coordinates(self.x, self.fx, point.x.coords),
                _sphere_coordinates(self.y, self.fy, point.y.coords),
            ],
            axis=-1,
        )

    def tangent(self, coords: Array) -> ProductTangent:
        u = np.einsum("...k,...ki->...i", coords[..., 0:2], self.fx)
        v = np.einsum("...k,...ki->...i", coords[..., 2:4], self.fy)
        return ProductTangent.at(self.base, u, v)

    def form(self, a: Array, b: Array) -> Array:
        return omega(self.base, self.tangent(a), self.tangent(b))


class CotangentChart(Chart):
    """The retraction chart of :class:`CotangentFrame`."""

    def __init__(self, centre: CotangentPoint) -> None:
        self.centre = centre
        self.frame: CotangentFrame = cotangent_frame(centre)

    def point(self, coords: Array) -> CotangentPoint:
        return self.frame.retract(coords)

    def coordinates(self, point: CotangentPoint) -> Array:
        return self.frame.coordinates(point)

    def form(self, a: Array, b: Array) -> Array:
        return eta(self.centre, self.frame.tangent(a), self.frame.tangent(b))


@singledispatch
def chart_at(point: Any) -> Chart:
    """The chart centred at ``point``, chosen by the manifold it lives on."""
    raise TypeError(f"no chart for {type(point).__name__}")


@chart_at.register
def _(point: ProductPoint) -> Chart:
    return ProductChart(point)


@chart_at.register
def _(point: CotangentPoint) -> Chart:
    return CotangentChart(point)
