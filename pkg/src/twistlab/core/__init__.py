"""Core twistlab infrastructure.

Sphere geometry, the error hierarchy, configuration and seeded sampling.
"""

from twistlab.core.errors import (
    ConfigError,
    ConstructionError,
    DomainError,
    PreconditionError,
    RegistryError,
    ResolutionError,
    TwistLabError,
)
from twistlab.core.geometry import (
    OrientedFrame,
    ProductPoint,
    ProductTangent,
    SpherePoint,
    TangentVector,
    area_form,
    omega,
    retract,
    rotate,
    tangent_frame,
)

__all__ = [
    "SpherePoint",
    "TangentVector",
    "ProductPoint",
    "ProductTangent",
    "OrientedFrame",
    "rotate",
    "area_form",
    "omega",
    "retract",
    "tangent_frame",
    "TwistLabError",
    "DomainError",
    "PreconditionError",
    "ResolutionError",
    "ConstructionError",
    "ConfigError",
    "RegistryError",
]
