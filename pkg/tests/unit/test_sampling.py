"""Unit tests for deterministic block sampling."""

import numpy as np
import pytest

from twistlab.core.sampling import (
    BLOCK_SIZE,
    block_ranges,
    sample_at_axis_length,
    sample_block,
    sample_points,
    sample_sphere,
)
from twistlab.maps.twist import axis_length


class TestBlockRanges:
    """Test the block partition of sample indices."""

    def test_partial_last_block(self):
        """Test that the last block holds the remainder."""
        ranges = list(block_ranges(2 * BLOCK_SIZE + 5))
        assert ranges == [(0, 0, BLOCK_SIZE), (1, BLOCK_SIZE, BLOCK_SIZE), (2, 2 * BLOCK_SIZE, 5)]

    def test_empty(self):
        """Test zero samples yield no blocks."""
        assert list(block_ranges(0)) == []


class TestDeterminism:
    """Test that samples depend on (seed, index) only."""

    def test_same_seed_same_points(self):
        """Test repeatability."""
        a = sample_points(seed=11, n_samples=300)
        b = sample_points(seed=11, n_samples=300)
        assert np.array_equal(a.x.coords, b.x.coords)
        assert np.array_equal(a.y.coords, b.y.coords)

    def test_prefix_property(self):
        """Test that a shorter stream is a prefix of a longer one across block edges."""
        short = sample_points(seed=5, n_samples=1500)
        long = sample_points(seed=5, n_samples=2500)
        assert np.array_equal(long.x.coords[:1500], short.x.coords)

    def test_seeds_differ(self):
        """Test that different seeds give different points."""
        a = sample_sphere(seed=0, n_samples=10)
        b = sample_sphere(seed=1, n_samples=10)
        assert not np.array_equal(a.coords, b.coords)

    def test_block_rows_match_stream(self):
        """Test that block k, row i is sample k * BLOCK_SIZE + i."""
        stream = sample_points(seed=2, n_samples=BLOCK_SIZE + 10)
        block = sample_block(seed=2, block=1, count=10)
        assert np.array_equal(block.point.x.coords, stream.x.coords[BLOCK_SIZE:])


class TestSampleBlock:
    """Test random tangent pairs."""

    def test_tangent_coordinates_are_unit(self):
        """Test the 4-dimensional frame coordinates have unit length."""
        block = sample_block(seed=0, block=0, count=64)
        np.testing.assert_allclose(np.linalg.norm(block.a_coords, axis=-1), 1.0, atol=1e-14)
        np.testing.assert_allclose(np.linalg.norm(block.b_coords, axis=-1), 1.0, atol=1e-14)
        assert block.count == 64

    def test_tangent_vectors_are_tangent(self):
        """Test the ambient vectors are orthogonal to their base points."""
        block = sample_block(seed=0, block=0, count=64)
        normal = np.einsum("ij,ij->i", block.a.u.vec, block.point.x.coords)
        assert np.max(np.abs(normal)) < 1e-12


class TestAxisLengthSampling:
    """Test points on a prescribed level set of |x + y|."""

    @pytest.mark.parametrize("radius", [0.0, 0.5, 1.0, 1.9])
    def test_level_set(self, radius):
        """Test every sample has the requested |x + y|."""
        points = sample_at_axis_length(seed=0, n_samples=200, radius=radius)
        np.testing.assert_allclose(axis_length(points), radius, atol=1e-12)

    def test_out_of_range(self):
        """Test that |x + y| > 2 is rejected."""
        with pytest.raises(ValueError):
            sample_at_axis_length(seed=0, n_samples=10, radius=2.5)
