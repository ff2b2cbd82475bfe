"""Unit tests for the circle action, the twist, the homotopy and the loop."""

import math

import numpy as np
import pytest

from twistlab.core.errors import DomainError
from twistlab.core.geometry import ProductPoint, SpherePoint
from twistlab.core.sampling import sample_at_axis_length, sample_points, sample_sphere
from twistlab.maps.twist import (
    antidiagonal,
    axis_length,
    compose,
    diagonal,
    homotopy_h,
    identity,
    loop_lambda,
    mu,
    rho,
    swap_iota,
    tau,
    tau_inv,
)


def deviation(p, q):
    return max(
        float(np.max(np.abs(p.x.coords - q.x.coords))),
        float(np.max(np.abs(p.y.coords - q.y.coords))),
    )


@pytest.fixture(scope="module")
def points():
    return sample_points(seed=3, n_samples=2000)


class TestRho:
    """Test the circle action and its moment map."""

    def test_preserves_axis_length(self, points):
        """Test that |x + y| and mu are invariant."""
        moved = rho(1.3, points)
        np.testing.assert_allclose(axis_length(moved), axis_length(points), atol=1e-12)
        np.testing.assert_allclose(mu(moved), mu(points), atol=1e-12)

    def test_group_law(self, points):
        """Test rho(a) o rho(b) = rho(a + b)."""
        assert deviation(rho(0.4, rho(0.9, points)), rho(1.3, points)) < 1e-12

    def test_full_turn_is_identity(self, points):
        """Test rho(2 pi) = id."""
        assert deviation(rho(2.0 * math.pi, points), points) < 1e-12

    def test_half_turn_is_swap(self, points):
        """Test rho(pi) exchanges the factors."""
        assert deviation(rho(math.pi, points), swap_iota(points)) < 1e-12

    def test_undefined_on_antidiagonal(self):
        """Test that the action refuses the antidiagonal."""
        with pytest.raises(DomainError) as exc_info:
            rho(0.5, antidiagonal(SpherePoint(np.array([0.0, 0.0, 1.0]))))
        assert exc_info.value.code == "M001"

    def test_moment_map_range(self, points):
        """Test mu takes values in [-2, 0]."""
        values = mu(points)
        assert np.all(values <= 0.0)
        assert np.all(values >= -2.0)


class TestTau:
    """Test the generalized Dehn twist."""

    def test_swap_on_inner_region_bit_for_bit(self, points):
        """Test tau = swap exactly where |x + y| <= 1/2."""
        inner = axis_length(points) <= 0.5
        assert np.any(inner)
        image = tau(points[inner])
        assert np.array_equal(image.x.coords, points[inner].y.coords)
        assert np.array_equal(image.y.coords, points[inner].x.coords)

    def test_identity_on_outer_region_bit_for_bit(self, points):
        """Test tau = id exactly where |x + y| >= 1."""
        outer = axis_length(points) >= 1.0
        assert np.any(outer)
        image = tau(points[outer])
        assert np.array_equal(image.x.coords, points[outer].x.coords)
        assert np.array_equal(image.y.coords, points[outer].y.coords)

    def test_seam_agrees_with_swap(self):
        """Test continuity at |x + y| = 1/2."""
        seam = sample_at_axis_length(seed=0, n_samples=256, radius=0.5)
        assert deviation(tau(seam), swap_iota(seam)) < 1e-12
        assert deviation(rho(-math.pi, seam), swap_iota(seam)) < 1e-12

    def test_inverse(self, points):
        """Test tau_inv o tau = tau o tau_inv = id."""
        assert deviation(tau_inv(tau(points)), points) < 1e-12
        assert deviation(tau(tau_inv(points)), points) < 1e-12

    def test_fixes_diagonal(self):
        """Test tau(x, x) = (x, x)."""
        x = sample_sphere(seed=1, n_samples=100)
        assert deviation(tau(diagonal(x)), diagonal(x)) == 0.0

    def test_antipodal_on_antidiagonal(self):
        """Test tau(x, -x) = (-x, x)."""
        x = sample_sphere(seed=1, n_samples=100)
        image = tau(antidiagonal(x))
        np.testing.assert_array_equal(image.x.coords, -x.coords)

    def test_single_point(self):
        """Test unbatched input keeps its shape."""
        p = ProductPoint.from_arrays(np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))
        assert tau(p).x.coords.shape == (3,)

    def test_preserves_moment_map(self, points):
        """Test that the twist preserves |x + y|."""
        np.testing.assert_allclose(axis_length(tau(points)), axis_length(points), atol=1e-12)


class TestHomotopy:
    """Test the path from the identity to tau squared."""

    def test_starts_at_identity(self, points):
        """Test h_0 = id."""
        assert deviation(homotopy_h(0.0, points), points) < 1e-15

    def test_ends_at_tau_squared(self, points):
        """Test h_1 = tau o tau."""
        assert deviation(homotopy_h(1.0, points), tau(tau(points))) < 1e-9

    def test_identity_on_inner_region(self, points):
        """Test h_s = id on |x + y| <= 1/2 for every s."""
        inner = points[axis_length(points) <= 0.5]
        assert np.array_equal(homotopy_h(0.37, inner).x.coords, inner.x.coords)

    @pytest.mark.parametrize("s", [-0.1, 1.5])
    def test_parameter_out_of_range(self, points, s):
        """Test that s outside [0, 1] raises."""
        with pytest.raises(DomainError) as exc_info:
            homotopy_h(s, points)
        assert exc_info.value.code == "M002"


class TestSwapAndLoop:
    """Test the swap involution and the loop lambda."""

    def test_swap_is_involution(self, points):
        """Test swap o swap = id."""
        assert deviation(swap_iota(swap_iota(points)), points) == 0.0

    @pytest.mark.parametrize("t", [0.0, 1.0])
    def test_loop_endpoints(self, points, t):
        """Test lambda_0 = lambda_1 = id."""
        assert deviation(loop_lambda(t, points), points) < 1e-12

    def test_loop_fixes_diagonal(self):
        """Test lambda_t(x, x) = (x, x)."""
        x = sample_sphere(seed=2, n_samples=100)
        assert deviation(loop_lambda(0.3, diagonal(x)), diagonal(x)) < 1e-12

    def test_loop_keeps_second_factor(self, points):
        """Test lambda_t leaves y alone."""
        assert np.array_equal(loop_lambda(0.3, points).y.coords, points.y.coords)


class TestCompose:
    """Test map composition."""

    def test_rightmost_applied_first(self, points):
        """Test compose(f, g)(p) = f(g(p))."""
        composed = compose(tau, swap_iota)
        assert deviation(composed(points), tau(swap_iota(points))) == 0.0

    def test_identity(self, points):
        """Test the identity map returns its argument."""
        assert identity(points) is points
