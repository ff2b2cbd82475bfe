"""twistlab: numerical verification of the generalized Dehn twist on S² x S².

Explicit maps (the twist, its generating circle action, the homotopy from
its square to the identity, a loop of diffeomorphisms fixing the diagonal),
the disc-bundle model of the complement of the diagonal, and a seeded
finite-difference and quadrature engine that checks their claimed
properties.
"""

__version__ = "0.1.0"
__author__ = "twistlab contributors"

from twistlab.core.errors import TwistLabError
from twistlab.core.geometry import ProductPoint, ProductTangent, SpherePoint, TangentVector
from twistlab.maps.twist import homotopy_h, loop_lambda, rho, swap_iota, tau, tau_inv
from twistlab.verify.report import VerificationReport

__all__ = [
    "__version__",
    "SpherePoint",
    "TangentVector",
    "ProductPoint",
    "ProductTangent",
    "TwistLabError",
    "VerificationReport",
    "rho",
    "tau",
    "tau_inv",
    "homotopy_h",
    "swap_iota",
    "loop_lambda",
]
