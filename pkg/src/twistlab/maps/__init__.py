"""Explicit maps on S² x S² and the twist profile."""

from twistlab.maps.profile import R_PROFILE, RadialProfile, profile_r, smooth_step
from twistlab.maps.twist import (
    ProductMap,
    antidiagonal,
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

__all__ = [
    "RadialProfile",
    "R_PROFILE",
    "profile_r",
    "smooth_step",
    "ProductMap",
    "identity",
    "compose",
    "diagonal",
    "antidiagonal",
    "rho",
    "mu",
    "tau",
    "tau_inv",
    "homotopy_h",
    "swap_iota",
    "loop_lambda",
]
