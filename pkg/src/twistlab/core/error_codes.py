"""Error codes for twistlab.

Error code format: LXXX
- L = area letter
- XXX = Three-digit number

Categories:
- G001-G099: Sphere geometry errors
- M001-M099: Map domain errors
- C001-C099: Compactification errors
- V001-V099: Verification precondition errors
- T001-T099: Topology (degree / winding) errors
- X001-X099: Configuration and registry errors
"""

from dataclasses import dataclass


@dataclass
class ErrorCode:
    """Error code definition."""

    code: str
    category: str
    description: str
    explanation: str | None = None


# ============================================================================
# Error Code Catalog
# ============================================================================

ERROR_CODES = {
    # Geometry Errors (G001-G099)
    "G001": ErrorCode(
        code="G001",
        category="geometry",
        description="Zero rotation axis",
        explanation="A rotation needs a nonzero axis; the angle is about axis/|axis|",
    ),
    "G002": ErrorCode(
        code="G002",
        category="geometry",
        description="Tangent vectors based at different points",
        explanation="Forms are evaluated on vectors tangent at one common base point",
    ),
    "G003": ErrorCode(
        code="G003",
        category="geometry",
        description="Vector is not tangent at its base point",
        explanation="A tangent vector at x must satisfy <vec, x> = 0 within 1e-10",
    ),
    "G004": ErrorCode(
        code="G004",
        category="geometry",
        description="Zero vector cannot be placed on the sphere",
    ),
    # Map Errors (M001-M099)
    "M001": ErrorCode(
        code="M001",
        category="maps",
        description="Circle action evaluated on the antidiagonal",
        explanation="rho rotates about x+y, which vanishes on {(x,-x)}",
    ),
    "M002": ErrorCode(
        code="M002",
        category="maps",
        description="Homotopy parameter outside [0, 1]",
    ),
    # Compactification Errors (C001-C099)
    "C001": ErrorCode(
        code="C001",
        category="compactify",
        description="Identification evaluated on the diagonal",
        explanation="The diagonal is deleted; it corresponds to the boundary |p| = 1",
    ),
    "C002": ErrorCode(
        code="C002",
        category="compactify",
        description="Covector outside the open unit-disc bundle",
        explanation="Points of int(T) have |covector| < 1",
    ),
    "C003": ErrorCode(
        code="C003",
        category="compactify",
        description="Covector not orthogonal to its base point",
    ),
    "C004": ErrorCode(
        code="C004",
        category="compactify",
        description="Profile construction residual above tolerance",
        explanation="The reduced pullback condition was not met by the integrated profile",
    ),
    "C005": ErrorCode(
        code="C005",
        category="compactify",
        description="Malformed profile table",
    ),
    # Verification Errors (V001-V099)
    "V001": ErrorCode(
        code="V001",
        category="verify",
        description="Map does not fix the diagonal point",
        explanation="The normal action is only defined for maps with map(x,x) = (x,x)",
    ),
    "V002": ErrorCode(
        code="V002",
        category="verify",
        description="Invalid finite-difference step",
    ),
    "V003": ErrorCode(
        code="V003",
        category="verify",
        description="Invalid sample count",
    ),
    # Topology Errors (T001-T099)
    "T001": ErrorCode(
        code="T001",
        category="topology",
        description="Quadrature value is not close to an integer",
        explanation="The degree integral must land within 0.05 of an integer",
    ),
    "T002": ErrorCode(
        code="T002",
        category="topology",
        description="Basepoint choices disagree",
        explanation="Homology columns must not depend on the slice basepoint",
    ),
    "T003": ErrorCode(
        code="T003",
        category="topology",
        description="Matrix loop is undersampled",
        explanation="Consecutive rotation angles must differ by less than pi/2",
    ),
    "T004": ErrorCode(
        code="T004",
        category="topology",
        description="Invalid matrix loop",
        explanation="Loops need det > 0 at every sample and equal endpoints",
    ),
    # Configuration and Registry Errors (X001-X099)
    "X001": ErrorCode(
        code="X001",
        category="config",
        description="Invalid suite configuration",
    ),
    "X002": ErrorCode(
        code="X002",
        category="config",
        description="Unknown registry name",
    ),
}


def get_error_code(code: str) -> ErrorCode | None:
    """Get error code definition."""
    return ERROR_CODES.get(code)


def format_diagnostic_with_code(
    severity: str, code: str, message: str, suggestion: str | None = None
) -> str:
    """Format a diagnostic message with error code."""
    parts = [f"[{severity.lower()}:{code}] {message}"]

    if suggestion:
        parts.append(f"  hint: {suggestion}")

    error_info = get_error_code(code)
    if error_info and error_info.explanation:
        parts.append(f"  note: {error_info.explanation}")

    return "\n".join(parts)


def list_error_codes(category: str | None = None) -> list[ErrorCode]:
    """List all error codes, optionally filtered by category."""
    codes = list(ERROR_CODES.values())

    if category:
        codes = [c for c in codes if c.category == category]

    return sorted(codes, key=lambda x: x.code)
