"""Numerical differential geometry: differentials, pullbacks and reports."""

from twistlab.verify.charts import Chart, CotangentChart, ProductChart, chart_at
from twistlab.verify.checks import (
    LinearMap2x2,
    eta_symplectic_report,
    fit_pullback_constant,
    hamiltonian_residual,
    lagrangian_residual,
    moment_map_report,
    normal_action,
    rotation_matrix,
    squeeze_second_factor,
    symplectic_report,
)
from twistlab.verify.differential import Linearization, differential, linearize, pullback_residual
from twistlab.verify.report import ResidualStats, VerificationReport, reduce_blocks

__all__ = [
    "Chart",
    "ProductChart",
    "CotangentChart",
    "chart_at",
    "Linearization",
    "linearize",
    "differential",
    "pullback_residual",
    "VerificationReport",
    "ResidualStats",
    "reduce_blocks",
    "LinearMap2x2",
    "rotation_matrix",
    "symplectic_report",
    "eta_symplectic_report",
    "hamiltonian_residual",
    "moment_map_report",
    "normal_action",
    "lagrangian_residual",
    "fit_pullback_constant",
    "squeeze_second_factor",
]
