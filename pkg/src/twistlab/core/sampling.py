"""Deterministic seeded sampling on S² and S² x S².

Samples are drawn in fixed blocks. Block ``k`` of seed ``s`` comes from
``default_rng(SeedSequence([s, k]))`` and sample ``i`` is row ``i % BLOCK_SIZE``
of block ``i // BLOCK_SIZE``, so the value of a sample depends on (seed, i)
only and never on how blocks are scheduled across workers.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from twistlab.core.geometry import Array, ProductPoint, ProductTangent, SpherePoint, tangent_frame

logger = logging.getLogger(__name__)

__all__ = [
    "BLOCK_SIZE",
    "SampleBlock",
    "block_ranges",
    "gaussian_block",
    "sample_block",
    "sample_at_axis_length",
    "sample_points",
    "sample_sphere",
    "uniform_sphere",
]

BLOCK_SIZE = 1024

# gaussian columns per sample: x(3), y(3), a(4), b(4)
_COLUMNS = 14


def block_ranges(n_samples: int) -> Iterator[tuple[int, int, int]]:
    """Yield (block index, start, count) covering ``n_samples`` indices."""
    for block in range((n_samples + BLOCK_SIZE - 1) // BLOCK_SIZE):
        start = block * BLOCK_SIZE
        yield block, start, min(BLOCK_SIZE, n_samples - start)


def gaussian_block(seed: int, block: int, columns: int = _COLUMNS) -> Array:
    """Standard normal draws for one full block, shape (BLOCK_SIZE, columns)."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, block]))
    return rng.standard_normal((BLOCK_SIZE, columns))


def uniform_sphere(gaussians: Array) -> SpherePoint:
    """Uniform points on S² from Gaussian triples (trailing axis 3)."""
    return SpherePoint(gaussians)


def _unit_coordinates(gaussians: Array) -> Array:
    return gaussians / np.linalg.norm(gaussians, axis=-1, keepdims=True)


@dataclass(frozen=True, eq=False)
class SampleBlock:
    """Random points of S² x S² with two random unit tangent vectors each."""

    start: int
    point: ProductPoint
    a: ProductTangent
    b: ProductTangent
    a_coords: Array  # frame coordinates, shape (count, 4)
    b_coords: Array

    @property
    def count(self) -> int:
        return self.a_coords.shape[0]


def _tangent_from_coords(p: ProductPoint, coords: Array) -> ProductTangent:
    fx = tangent_frame(p.x).matrix()
    fy = tangent_frame(p.y).matrix()
    u = np.einsum("...k,...ki->...i", coords[..., 0:2], fx)
    v = np.einsum("...k,...ki->...i", coords[..., 2:4], fy)
    return ProductTangent.at(p, u, v)


def sample_block(seed: int, block: int, count: int = BLOCK_SIZE) -> SampleBlock:
    """Points and unit tangent pairs for the first ``count`` rows of a block."""
    g = gaussian_block(seed, block)[:count]
    point = ProductPoint(uniform_sphere(g[:, 0:3]), uniform_sphere(g[:, 3:6]))
    a_coords = _unit_coordinates(g[:, 6:10])
    b_coords = _unit_coordinates(g[:, 10:14])
    logger.debug("sampled block %d (seed %d, %d rows)", block, seed, count)
    return SampleBlock(
        start=block * BLOCK_SIZE,
        point=point,
        a=_tangent_from_coords(point, a_coords),
        b=_tangent_from_coords(point, b_coords),
        a_coords=a_coords,
        b_coords=b_coords,
    )


def sample_points(seed: int, n_samples: int) -> ProductPoint:
    """The first ``n_samples`` points of the seeded stream, as one batch."""
    xs, ys = [], []
    for block, _, count in block_ranges(n_samples):
        g = gaussian_block(seed, block)[:count]
        xs.append(g[:, 0:3])
        ys.append(g[:, 3:6])
    return ProductPoint.from_arrays(np.concatenate(xs), np.concatenate(ys))


def sample_sphere(seed: int, n_samples: int) -> SpherePoint:
    """The first ``n_samples`` first-factor points of the seeded stream."""
    return sample_points(seed, n_samples).x


def sample_at_axis_length(seed: int, n_samples: int, radius: float) -> ProductPoint:
    """Seeded points (x, y) with |x + y| = radius, for radius in [0, 2].

    x is uniform; y is x turned by the angle a with 2 + 2 cos(a) = radius²
    towards a uniform tangent direction at x.
    """
    if not 0.0 <= radius <= 2.0:
        raise ValueError(f"|x + y| ranges over [0, 2], got {radius}")
    cosine = 0.5 * radius * radius - 1.0
    sine = np.sqrt(max(0.0, 1.0 - cosine * cosine))
    xs, ys = [], []
    for block, _, count in block_ranges(n_samples):
        g = gaussian_block(seed, block)[:count]
        x = _unit_coordinates(g[:, 0:3])
        direction = g[:, 3:6] - np.einsum("ij,ij->i", g[:, 3:6], x)[:, None] * x
        direction = _unit_coordinates(direction)
        xs.append(x)
        ys.append(cosine * x + sine * direction)
    return ProductPoint.from_arrays(np.concatenate(xs), np.concatenate(ys))
