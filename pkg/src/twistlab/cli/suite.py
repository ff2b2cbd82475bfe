"""The registered verification checks.

Each runner turns a SuiteConfig and a tolerance into one VerificationReport.
Exact or integer-valued checks report the observed deviation with a
tolerance of zero. Negative controls report threshold / observed defect
against a tolerance of one, so a control passes when the defect is at
least the threshold.
"""

from __future__ import annotations

import logging
import math
from functools import partial

import numpy as np

from twistlab.cli.registry import register
from twistlab.compactify.cotangent import CotangentPoint, eta_closedness_residual, sample_cotangent
from twistlab.compactify.identification import (
    boundary_decay,
    conjugated_twist,
    equivariance_residual,
    identity_threshold,
    phi,
    phi_inv,
)
from twistlab.compactify.profile_f import default_profile
from twistlab.core.config import SuiteConfig
from twistlab.core.geometry import ProductPoint, SpherePoint
from twistlab.core.sampling import sample_at_axis_length, sample_points, sample_sphere
from twistlab.maps.profile import profile_r
from twistlab.maps.twist import (
    antidiagonal,
    axis_length,
    compose,
    diagonal,
    homotopy_h,
    identity,
    loop_lambda,
    rho,
    swap_iota,
    tau,
)
from twistlab.topology.degree import (
    HomologyMatrix,
    antidiagonal_orientation,
    degree_integral,
    homology_matrix,
    intersection_number,
    sphere_class,
)
from twistlab.topology.winding import normal_loop_winding
from twistlab.verify.checks import (
    MOMENT_MAP_FLOOR,
    eta_symplectic_report,
    fit_pullback_constant,
    lagrangian_residual,
    moment_map_report,
    normal_action,
    rotation_matrix,
    squeeze_second_factor,
    symplectic_report,
)
from twistlab.verify.report import ResidualStats, VerificationReport

logger = logging.getLogger(__name__)

DIAGONAL_POINTS = 100
ROTATION_POINTS = 20
HOMOTOPY_TIMES = tuple(k / 10 for k in range(11))
ROTATION_TIMES = (0.25, 0.5, 0.75)
CONVERGENCE_STEPS = (2e-3, 1e-3)
SWAP = np.array([[0, 1], [1, 0]])


def _deviation(p: ProductPoint, q: ProductPoint) -> np.ndarray:
    return np.maximum(
        np.max(np.abs(p.x.coords - q.x.coords), axis=-1),
        np.max(np.abs(p.y.coords - q.y.coords), axis=-1),
    )


def _cotangent_deviation(p: CotangentPoint, q: CotangentPoint) -> np.ndarray:
    return np.maximum(
        np.max(np.abs(p.base.coords - q.base.coords), axis=-1),
        np.max(np.abs(p.covector - q.covector), axis=-1),
    )


def _exact(name: str, residuals, config: SuiteConfig, tol: float, step=None) -> VerificationReport:
    return ResidualStats.of(np.asarray(residuals, dtype=np.float64)).report(
        name, config.seed, step, tol
    )


def _control(
    name: str, defect: float, threshold: float, samples: int, config: SuiteConfig, tol: float
) -> VerificationReport:
    ratio = math.inf if defect <= 0.0 else threshold / defect
    logger.debug("control %s: defect %.3e against threshold %.1e", name, defect, threshold)
    return VerificationReport(name, samples, config.seed, config.fd_step, ratio, ratio, tol)


def _diagonal_sample(config: SuiteConfig, count: int) -> SpherePoint:
    return sample_sphere(config.seed, min(config.samples, count))


# ============================================================================
# The twist
# ============================================================================


@register(
    "tau-symplectic",
    "omega-pullback residual of the twist on random points",
    "the twist is a symplectomorphism",
    1e-6,
)
def _tau_symplectic(config: SuiteConfig, tol: float) -> VerificationReport:
    return symplectic_report(
        tau, config.samples, config.seed, config.fd_step, tol, "tau-symplectic", config.workers
    )


@register(
    "tau-supports",
    "swap on |x+y| <= 1/2 and identity on |x+y| >= 1, bit for bit; seam agreement",
    "the twist profile is -pi up to 1/2 and 0 from 1 on",
    1e-12,
)
def _tau_supports(config: SuiteConfig, tol: float) -> VerificationReport:
    p = sample_points(config.seed, config.samples)
    image = tau(p)
    s = axis_length(p)
    inner, outer = s <= 0.5, s >= 1.0
    residuals = [
        _deviation(image[inner], swap_iota(p[inner])),
        _deviation(image[outer], p[outer]),
    ]
    # the rotation branch evaluated on the seam must agree with the swap
    seam = sample_at_axis_length(config.seed, min(config.samples, 1024), 0.5)
    residuals.append(_deviation(rho(profile_r(0.5), seam), swap_iota(seam)))
    residuals.append(_deviation(tau(seam), swap_iota(seam)))
    return _exact("tau-supports", np.concatenate(residuals), config, tol)


@register(
    "tau-fixes-diagonal",
    "the twist fixes (x, x)",
    "the twist restricts to the identity on the diagonal",
    1e-12,
)
def _tau_fixes_diagonal(config: SuiteConfig, tol: float) -> VerificationReport:
    x = _diagonal_sample(config, DIAGONAL_POINTS)
    return _exact("tau-fixes-diagonal", _deviation(tau(diagonal(x)), diagonal(x)), config, tol)


@register(
    "tau-normal-trivial",
    "normal action of the twist along the diagonal is the identity",
    "the twist acts trivially on the normal bundle of the diagonal",
    1e-6,
)
def _tau_normal_trivial(config: SuiteConfig, tol: float) -> VerificationReport:
    x = _diagonal_sample(config, DIAGONAL_POINTS)
    action = normal_action(tau, x, config.fd_step)
    return _exact(
        "tau-normal-trivial", action.deviation_from(np.eye(2)), config, tol, config.fd_step
    )


@register(
    "moment-map",
    "omega(v, X) = d mu(v) for the circle action, |x+y| > 0.1",
    "mu(x, y) = -|x + y| is a moment map for the rotation about x + y",
    1e-6,
)
def _moment_map(config: SuiteConfig, tol: float) -> VerificationReport:
    return moment_map_report(
        config.samples, config.seed, config.fd_step, tol, name="moment-map", workers=config.workers
    )


@register(
    "moment-map-sign",
    "the opposite sign convention is rejected (negative control)",
    "the moment-map identity fixes the sign of mu",
    1.0,
    fixed_tol=True,
)
def _moment_map_sign(config: SuiteConfig, tol: float) -> VerificationReport:
    samples = min(config.samples, 1024)
    flipped = moment_map_report(samples, config.seed, config.fd_step, convention=-1.0)
    return _control("moment-map-sign", flipped.max_residual, 0.1, samples, config, tol)


@register(
    "rotation-symplectic",
    "omega-pullback residual of the circle action at angle 0.7, |x+y| > 0.1",
    "the circle action is symplectic",
    1e-6,
)
def _rotation_symplectic(config: SuiteConfig, tol: float) -> VerificationReport:
    return symplectic_report(
        partial(rho, 0.7),
        config.samples,
        config.seed,
        config.fd_step,
        tol,
        "rotation-symplectic",
        config.workers,
        min_axis_length=MOMENT_MAP_FLOOR,
    )


@register(
    "swap-symplectic",
    "omega-pullback residual of the factor swap",
    "the swap preserves the split form",
    1e-8,
)
def _swap_symplectic(config: SuiteConfig, tol: float) -> VerificationReport:
    return symplectic_report(
        swap_iota, config.samples, config.seed, config.fd_step, tol, "swap-symplectic"
    )


@register(
    "squeeze-nonsymplectic",
    "a map squeezing the second factor is rejected (negative control)",
    "the pullback check detects non-symplectic maps",
    1.0,
    fixed_tol=True,
)
def _squeeze_nonsymplectic(config: SuiteConfig, tol: float) -> VerificationReport:
    samples = min(config.samples, 1024)
    report = symplectic_report(squeeze_second_factor, samples, config.seed, config.fd_step)
    return _control("squeeze-nonsymplectic", report.max_residual, 0.1, samples, config, tol)


# ============================================================================
# The homotopy from the squared twist to the identity
# ============================================================================


@register(
    "h-start-identity",
    "h_0 is the identity",
    "the path starts at the identity",
    1e-12,
)
def _h_start(config: SuiteConfig, tol: float) -> VerificationReport:
    p = sample_points(config.seed, config.samples)
    return _exact("h-start-identity", _deviation(homotopy_h(0.0, p), p), config, tol)


@register(
    "h-end-tau-squared",
    "h_1 equals the squared twist",
    "the path ends at the squared twist",
    1e-9,
)
def _h_end(config: SuiteConfig, tol: float) -> VerificationReport:
    p = sample_points(config.seed, config.samples)
    return _exact("h-end-tau-squared", _deviation(homotopy_h(1.0, p), tau(tau(p))), config, tol)


@register(
    "h-symplectic",
    "omega-pullback residual of h_s for s = 0, 0.1, ..., 1",
    "the path stays among symplectomorphisms",
    1e-6,
)
def _h_symplectic(config: SuiteConfig, tol: float) -> VerificationReport:
    stats = ResidualStats()
    for s in HOMOTOPY_TIMES:
        report = symplectic_report(
            partial(homotopy_h, s), config.samples, config.seed, config.fd_step, tol,
            workers=config.workers,
        )
        logger.debug("h_%.1f: max residual %.3e", s, report.max_residual)
        stats = stats.merge(
            ResidualStats(report.max_residual, report.mean_residual * report.samples, report.samples)
        )
    return stats.report("h-symplectic", config.seed, config.fd_step, tol)


@register(
    "h-normal-rotation",
    "normal action of h_s is the rotation by 2 pi s, s in {1/4, 1/2, 3/4}",
    "the derivative of h_s along the diagonal rotates the normal bundle by 2 pi s",
    1e-5,
)
def _h_normal_rotation(config: SuiteConfig, tol: float) -> VerificationReport:
    x = _diagonal_sample(config, ROTATION_POINTS)
    residuals = []
    for s in ROTATION_TIMES:
        action = normal_action(partial(homotopy_h, s), x, config.fd_step)
        residuals.append(action.deviation_from(rotation_matrix(2.0 * math.pi * s)))
    return _exact("h-normal-rotation", np.concatenate(residuals), config, tol, config.fd_step)


@register(
    "h-winding",
    "winding of the normal action along h is 1",
    "the normal loop of h generates the fundamental group of the gauge group",
    0.0,
    fixed_tol=True,
)
def _h_winding(config: SuiteConfig, tol: float) -> VerificationReport:
    x = _diagonal_sample(config, ROTATION_POINTS)
    residuals = [
        abs(
            normal_loop_winding(
                lambda s: partial(homotopy_h, s), x[k], config.loop_samples, config.fd_step
            )
            - 1
        )
        for k in range(len(x))
    ]
    return _exact("h-winding", residuals, config, tol, config.fd_step)


# ============================================================================
# Homology
# ============================================================================


def _homology(f, config: SuiteConfig) -> HomologyMatrix:
    return homology_matrix(f, nodes=config.quad_nodes)


def _homology_residual(matrix: HomologyMatrix, expected: np.ndarray) -> float:
    """Rounding error of a correct matrix; a wrong matrix fails under any tolerance."""
    return matrix.rounding_error if np.array_equal(matrix.as_array(), expected) else math.inf


@register(
    "homology-action",
    "homology matrices of id, swap and the twist",
    "the twist acts on H2 as the swap, nontrivially",
    0.01,
)
def _homology_action(config: SuiteConfig, tol: float) -> VerificationReport:
    expected = {"id": np.eye(2, dtype=int), "swap": SWAP, "tau": SWAP}
    maps = {"id": identity, "swap": swap_iota, "tau": tau}
    residuals = []
    for name, f in maps.items():
        matrix = _homology(f, config)
        logger.debug("homology of %s: %s (rounding %.2e)", name, matrix, matrix.rounding_error)
        residuals.append(_homology_residual(matrix, expected[name]))
    return _exact("homology-action", residuals, config, tol)


@register(
    "homology-composition",
    "matrix(f o g) = matrix(f) matrix(g) over id, swap and the twist",
    "the homology action is multiplicative",
    0.0,
    fixed_tol=True,
)
def _homology_composition(config: SuiteConfig, tol: float) -> VerificationReport:
    maps = {"id": identity, "swap": swap_iota, "tau": tau}
    single = {name: _homology(f, config) for name, f in maps.items()}
    mismatches = []
    for f_name, f in maps.items():
        for g_name, g in maps.items():
            composed = _homology(compose(f, g), config)
            product = single[f_name] @ single[g_name]
            mismatches.append(0.0 if composed.entries == product.entries else 1.0)
    return _exact("homology-composition", mismatches, config, tol)


@register(
    "area-total",
    "total area of S² by the degree quadrature",
    "the area form has total area 4 pi",
    1e-8,
)
def _area_total(config: SuiteConfig, tol: float) -> VerificationReport:
    area = 4.0 * math.pi * degree_integral(lambda w: w, config.quad_nodes)
    return _exact("area-total", [abs(area - 4.0 * math.pi)], config, tol)


@register(
    "diagonal-class",
    "classes of the diagonal and antidiagonal and their intersections",
    "the diagonal is A1 + A2, the antidiagonal A1 - A2 with self-intersection -2",
    0.0,
    fixed_tol=True,
)
def _diagonal_class(config: SuiteConfig, tol: float) -> VerificationReport:
    delta = sphere_class(diagonal, config.quad_nodes)
    anti = sphere_class(antidiagonal, config.quad_nodes)
    mismatches = [
        delta != (1, 1),
        anti != (1, -1),
        intersection_number(delta, (1, 0)) != 1,
        intersection_number(delta, (0, 1)) != 1,
        intersection_number(anti, anti) != -2,
    ]
    return _exact("diagonal-class", [float(m) for m in mismatches], config, tol)


@register(
    "antidiagonal-orientation",
    "the twist maps the antidiagonal to itself reversing orientation",
    "the twist acts as -1 on the class of the antidiagonal",
    0.0,
    fixed_tol=True,
)
def _antidiagonal_orientation(config: SuiteConfig, tol: float) -> VerificationReport:
    orientation = antidiagonal_orientation(tau, config.quad_nodes)
    image = sphere_class(lambda w: tau(antidiagonal(w)), config.quad_nodes)
    mismatches = [float(orientation != -1), float(image != (-1, 1))]
    return _exact("antidiagonal-orientation", mismatches, config, tol)


@register(
    "antidiagonal-lagrangian",
    "omega vanishes on the tangent planes of the antidiagonal",
    "the antidiagonal is a Lagrangian sphere",
    1e-8,
)
def _antidiagonal_lagrangian(config: SuiteConfig, tol: float) -> VerificationReport:
    residual = lagrangian_residual(
        antidiagonal, min(config.samples, 1024), config.seed, config.fd_step
    )
    return _exact("antidiagonal-lagrangian", [residual], config, tol, config.fd_step)


# ============================================================================
# The loop of diffeomorphisms fixing the diagonal
# ============================================================================


@register(
    "lambda-endpoints",
    "lambda_0 = lambda_1 = id, and every lambda_t fixes the diagonal",
    "lambda is a loop based at the identity fixing the diagonal",
    1e-12,
)
def _lambda_endpoints(config: SuiteConfig, tol: float) -> VerificationReport:
    p = sample_points(config.seed, config.samples)
    x = _diagonal_sample(config, DIAGONAL_POINTS)
    residuals = [_deviation(loop_lambda(0.0, p), p), _deviation(loop_lambda(1.0, p), p)]
    for t in (0.25, 0.5, 0.75):
        residuals.append(_deviation(loop_lambda(t, diagonal(x)), diagonal(x)))
    return _exact("lambda-endpoints", np.concatenate(residuals), config, tol)


@register(
    "lambda-winding",
    "the normal loop of lambda winds once (+1 with the outward orientation)",
    "the normal action of lambda generates the fundamental group",
    0.0,
    fixed_tol=True,
)
def _lambda_winding(config: SuiteConfig, tol: float) -> VerificationReport:
    x = _diagonal_sample(config, ROTATION_POINTS)[0]
    winding = normal_loop_winding(
        lambda t: partial(loop_lambda, t), x, config.loop_samples, config.fd_step
    )
    return _exact("lambda-winding", [abs(abs(winding) - 1)], config, tol, config.fd_step)


@register(
    "lambda-nonsymplectic",
    "lambda_1/4 fails the symplectic check (negative control)",
    "lambda is a loop of diffeomorphisms, not of symplectomorphisms",
    1.0,
    fixed_tol=True,
)
def _lambda_nonsymplectic(config: SuiteConfig, tol: float) -> VerificationReport:
    report = symplectic_report(
        partial(loop_lambda, 0.25), config.samples, config.seed, config.fd_step,
        workers=config.workers,
    )
    return _control("lambda-nonsymplectic", report.max_residual, 1e-6, report.samples, config, tol)


# ============================================================================
# The disc-bundle model
# ============================================================================


@register(
    "compactify-profile",
    "s f(s) reaches 1 at the deleted diagonal and increases strictly",
    "the diagonal is pushed to the boundary of the disc bundle",
    1e-3,
)
def _compactify_profile(config: SuiteConfig, tol: float) -> VerificationReport:
    profile = default_profile()
    boundary = abs(float(profile.norm(2.0 - 1e-4)) - 1.0)
    increasing = bool(np.all(np.diff(profile.s * profile.f) > 0.0))
    return _exact("compactify-profile", [boundary if increasing else math.inf], config, tol)


@register(
    "compactify-pullback",
    "relative residual of phi* eta against c omega for the fitted c",
    "the disc bundle is symplectically the complement of the diagonal, up to scale",
    1e-4,
)
def _compactify_pullback(config: SuiteConfig, tol: float) -> VerificationReport:
    constant, report = fit_pullback_constant(
        phi, config.samples, config.seed, config.fd_step, tol, "compactify-pullback"
    )
    logger.info("fitted compactification constant c = %.12f", constant)
    return report


@register(
    "compactify-zero-section",
    "phi(x, -x) = (x, 0)",
    "the antidiagonal corresponds to the zero section",
    1e-12,
)
def _compactify_zero_section(config: SuiteConfig, tol: float) -> VerificationReport:
    x = sample_sphere(config.seed, config.samples)
    image = phi(antidiagonal(x))
    residuals = np.maximum(
        np.max(np.abs(image.base.coords - x.coords), axis=-1),
        np.max(np.abs(image.covector), axis=-1),
    )
    return _exact("compactify-zero-section", residuals, config, tol)


@register(
    "compactify-roundtrip",
    "phi o phi_inv and phi_inv o phi are the identity",
    "phi is a bijection onto the open disc bundle",
    1e-9,
)
def _compactify_roundtrip(config: SuiteConfig, tol: float) -> VerificationReport:
    p = sample_points(config.seed, config.samples)
    p = p[np.linalg.norm(p.x.coords - p.y.coords, axis=-1) > 1e-6]
    q = sample_cotangent(config.seed, config.samples)
    residuals = np.concatenate(
        [_deviation(phi_inv(phi(p)), p), _cotangent_deviation(phi(phi_inv(q)), q)]
    )
    return _exact("compactify-roundtrip", residuals, config, tol)


@register(
    "compactify-equivariance",
    "phi commutes with the diagonal rotation action",
    "the identification is SO(3)-equivariant",
    1e-10,
)
def _compactify_equivariance(config: SuiteConfig, tol: float) -> VerificationReport:
    residual = equivariance_residual(min(config.samples, 4096), config.seed)
    return _exact("compactify-equivariance", [residual], config, tol)


@register(
    "conjugated-twist-support",
    "the model twist is the identity beyond the image of |x+y| = 1 and antipodal on the zero section",
    "the model twist is supported near the zero section",
    1e-9,
)
def _conjugated_twist_support(config: SuiteConfig, tol: float) -> VerificationReport:
    threshold = identity_threshold()
    q = sample_cotangent(config.seed, config.samples)
    outer = q[q.norm >= threshold]
    x = sample_sphere(config.seed, config.samples)
    zero = CotangentPoint(x, np.zeros_like(x.coords))
    antipodal = CotangentPoint(-x, np.zeros_like(x.coords))
    residuals = np.concatenate(
        [
            _cotangent_deviation(conjugated_twist(outer), outer),
            _cotangent_deviation(conjugated_twist(zero), antipodal),
        ]
    )
    return _exact("conjugated-twist-support", residuals, config, tol)


@register(
    "conjugated-twist-boundary",
    "displacement of the model twist at covector lengths approaching 1",
    "the model twist is trivial near the boundary of the disc bundle",
    1e-9,
)
def _conjugated_twist_boundary(config: SuiteConfig, tol: float) -> VerificationReport:
    radii = [identity_threshold(), 0.75, 0.9, 0.99]
    rows = boundary_decay(radii, min(config.samples, 1024), config.seed)
    return _exact("conjugated-twist-boundary", [d for _, d in rows], config, tol)


@register(
    "conjugated-twist-symplectic",
    "eta-pullback residual of the model twist",
    "the model twist preserves the canonical form",
    1e-5,
)
def _conjugated_twist_symplectic(config: SuiteConfig, tol: float) -> VerificationReport:
    return eta_symplectic_report(
        conjugated_twist,
        config.samples,
        config.seed,
        config.fd_step,
        tol,
        "conjugated-twist-symplectic",
        config.workers,
    )


@register(
    "eta-closed",
    "finite-difference exterior derivative of eta on coordinate 3-frames",
    "the canonical form is closed",
    1e-5,
)
def _eta_closed(config: SuiteConfig, tol: float) -> VerificationReport:
    residual = eta_closedness_residual(min(config.samples, 256), config.seed)
    return _exact("eta-closed", [residual], config, tol)


@register(
    "zero-section-lagrangian",
    "eta vanishes on the tangent planes of the zero section",
    "the zero section is Lagrangian",
    1e-8,
)
def _zero_section_lagrangian(config: SuiteConfig, tol: float) -> VerificationReport:
    def zero_section(w: SpherePoint) -> CotangentPoint:
        return CotangentPoint(w, np.zeros_like(w.coords))

    residual = lagrangian_residual(
        zero_section, min(config.samples, 1024), config.seed, config.fd_step
    )
    return _exact("zero-section-lagrangian", [residual], config, tol, config.fd_step)


# ============================================================================
# The method itself
# ============================================================================


@register(
    "fd-convergence",
    "halving the step divides the twist's pullback residual by 3 to 5",
    "the central-difference stencil is second order",
    0.0,
    fixed_tol=True,
)
def _fd_convergence(config: SuiteConfig, tol: float) -> VerificationReport:
    coarse, fine = (
        symplectic_report(tau, config.samples, config.seed, step, workers=config.workers)
        for step in CONVERGENCE_STEPS
    )
    ratio = coarse.max_residual / fine.max_residual if fine.max_residual > 0.0 else math.inf
    logger.debug("convergence ratio %.4f", ratio)
    return _exact("fd-convergence", [max(0.0, 3.0 - ratio, ratio - 5.0)], config, tol)


@register(
    "report-determinism",
    "a report is identical across repeated runs and worker counts",
    "seeded sampling makes every report reproducible",
    0.0,
    fixed_tol=True,
)
def _report_determinism(config: SuiteConfig, tol: float) -> VerificationReport:
    samples = min(config.samples, 4096)
    runs = [
        symplectic_report(tau, samples, config.seed, config.fd_step, workers=workers).to_dict()
        for workers in (1, 1, 4)
    ]
    differing = sum(run != runs[0] for run in runs[1:])
    return _exact("report-determinism", [float(differing)], config, tol)
