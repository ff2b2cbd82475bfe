"""Unit tests for the identification of int(T) with the complement of the diagonal."""

import numpy as np
import pytest

from twistlab.compactify.cotangent import CotangentPoint, sample_cotangent
from twistlab.compactify.identification import (
    boundary_decay,
    conjugated_twist,
    equivariance_residual,
    identity_threshold,
    phi,
    phi_inv,
)
from twistlab.core.errors import DomainError
from twistlab.core.geometry import ProductPoint, SpherePoint
from twistlab.core.sampling import sample_points, sample_sphere
from twistlab.maps.twist import antidiagonal, axis_length, diagonal


@pytest.fixture(scope="module")
def points():
    p = sample_points(seed=8, n_samples=1000)
    gap = np.linalg.norm(p.x.coords - p.y.coords, axis=-1)
    return p[gap > 1e-3]


class TestPhi:
    """Test the forward identification."""

    def test_undefined_on_diagonal(self):
        """Test the deleted diagonal is rejected."""
        x = sample_sphere(seed=0, n_samples=4)
        with pytest.raises(DomainError) as exc_info:
            phi(diagonal(x))
        assert exc_info.value.code == "C001"

    def test_antidiagonal_to_zero_section(self):
        """Test phi(x, -x) = (x, 0)."""
        x = sample_sphere(seed=0, n_samples=50)
        image = phi(antidiagonal(x))
        np.testing.assert_allclose(image.base.coords, x.coords, atol=1e-15)
        assert np.max(np.abs(image.covector)) == 0.0

    def test_covector_length(self, points):
        """Test |p| = s f(s) = s / 2."""
        image = phi(points)
        np.testing.assert_allclose(image.norm, 0.5 * axis_length(points), atol=1e-12)

    def test_equator_example(self):
        """Test phi(e1, e2) on the worked example."""
        p = ProductPoint.from_arrays(np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))
        image = phi(p)
        b = np.array([1.0, -1.0, 0.0]) / np.sqrt(2.0)
        np.testing.assert_allclose(image.base.coords, b, atol=1e-15)
        # b x (x + y) = (0, 0, sqrt 2), scaled by 1/2
        np.testing.assert_allclose(image.covector, [0.0, 0.0, np.sqrt(2.0) / 2.0], atol=1e-12)


class TestPhiInverse:
    """Test the inverse identification."""

    def test_round_trip_from_product(self, points):
        """Test phi_inv o phi = id."""
        back = phi_inv(phi(points))
        np.testing.assert_allclose(back.x.coords, points.x.coords, atol=1e-9)
        np.testing.assert_allclose(back.y.coords, points.y.coords, atol=1e-9)

    def test_round_trip_from_bundle(self):
        """Test phi o phi_inv = id."""
        q = sample_cotangent(seed=3, n_samples=1000)
        forward = phi(phi_inv(q))
        np.testing.assert_allclose(forward.base.coords, q.base.coords, atol=1e-9)
        np.testing.assert_allclose(forward.covector, q.covector, atol=1e-9)

    def test_zero_section_to_antidiagonal(self):
        """Test phi_inv(u, 0) = (u, -u)."""
        x = sample_sphere(seed=1, n_samples=20)
        back = phi_inv(CotangentPoint(x, np.zeros_like(x.coords)))
        np.testing.assert_allclose(back.x.coords, x.coords, atol=1e-12)
        np.testing.assert_allclose(back.y.coords, -x.coords, atol=1e-12)


class TestConjugatedTwist:
    """Test the model twist on int(T)."""

    def test_threshold(self):
        """Test the image of |x + y| = 1 has covector length 1/2."""
        assert identity_threshold() == pytest.approx(0.5, abs=1e-9)

    def test_identity_beyond_threshold(self):
        """Test rows with |p| >= threshold are unchanged bit for bit."""
        q = sample_cotangent(seed=2, n_samples=2000)
        outer = q[q.norm >= identity_threshold()]
        image = conjugated_twist(outer)
        assert np.array_equal(image.base.coords, outer.base.coords)
        assert np.array_equal(image.covector, outer.covector)

    def test_antipodal_on_zero_section(self):
        """Test (u, 0) -> (-u, 0)."""
        x = sample_sphere(seed=1, n_samples=20)
        image = conjugated_twist(CotangentPoint(x, np.zeros_like(x.coords)))
        np.testing.assert_allclose(image.base.coords, -x.coords, atol=1e-12)
        np.testing.assert_allclose(image.covector, 0.0, atol=1e-12)

    def test_boundary_decay(self):
        """Test the displacement vanishes from the threshold outward."""
        rows = boundary_decay([0.1, 0.75, 0.95], n_samples=256)
        assert [radius for radius, _ in rows] == [0.1, 0.75, 0.95]
        assert rows[0][1] > 0.1
        assert rows[1][1] == 0.0
        assert rows[2][1] == 0.0


class TestEquivariance:
    """Test compatibility with the diagonal rotation action."""

    def test_equivariant(self):
        """Test phi(Rx, Ry) = R phi(x, y)."""
        assert equivariance_residual(n_samples=500, seed=0) < 1e-10

    def test_direction_is_quarter_turn(self, points):
        """Test the covector is orthogonal to both b and x + y."""
        image = phi(points)
        axis = points.x.coords + points.y.coords
        assert np.max(np.abs(np.einsum("ij,ij->i", image.covector, axis))) < 1e-12
        assert isinstance(image.base, SpherePoint)
