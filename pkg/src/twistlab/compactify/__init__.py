"""The disc-bundle model of S² x S² minus the diagonal."""

from twistlab.compactify.cotangent import (
    CotangentFrame,
    CotangentPoint,
    CotangentTangent,
    cotangent_block,
    cotangent_frame,
    eta,
    eta_closedness_residual,
    sample_cotangent,
)
from twistlab.compactify.identification import (
    boundary_decay,
    conjugated_twist,
    equivariance_residual,
    identity_threshold,
    phi,
    phi_inv,
)
from twistlab.compactify.profile_f import (
    CompactifyProfile,
    default_profile,
    export_profile_csv,
    import_profile_csv,
    solve_profile_f,
)

__all__ = [
    "CotangentPoint",
    "CotangentTangent",
    "CotangentFrame",
    "cotangent_frame",
    "eta",
    "eta_closedness_residual",
    "cotangent_block",
    "sample_cotangent",
    "CompactifyProfile",
    "solve_profile_f",
    "default_profile",
    "export_profile_csv",
    "import_profile_csv",
    "phi",
    "phi_inv",
    "conjugated_twist",
    "identity_threshold",
    "boundary_decay",
    "equivariance_residual",
]
