"""Radial profile of the compactification map.

The identification sends (x, y) to (b, f(s) * (b x (x + y))) with
b = (x - y)/|x - y| and s = |x + y|. Pulling eta back along this ansatz and
using the diagonal SO(3) symmetry, everything reduces to one orbit slice
parameterized by s. Two components survive:

* along the pairs where omega is nonzero: (s² f)' = 2 c s
* along the transverse pairs where omega vanishes: f' = 0

The first is integrated numerically for u = s² f from the regular start
u(0) = 0; c is fixed by the boundary condition s f(s) -> 1 as s -> 2 (the
covector reaches the unit circle at the deleted diagonal). The second is
the construction gate.
"""

from __future__ import annotations

import csv
import logging
import threading
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import numpy.typing as npt
from scipy.integrate import solve_ivp
from scipy.interpolate import PchipInterpolator

from twistlab.core.errors import ConstructionError, DomainError
from twistlab.core.geometry import Array

logger = logging.getLogger(__name__)

__all__ = [
    "CompactifyProfile",
    "TABLE_NODES",
    "solve_profile_f",
    "default_profile",
    "export_profile_csv",
    "import_profile_csv",
]

TABLE_NODES = 4096
S_MAX = 2.0
RESIDUAL_TOLERANCE = 1e-8
BISECTION_STEPS = 64

_SOLVER = "DOP853"
_RTOL = 1e-12
_ATOL = 1e-14


@dataclass(frozen=True, eq=False)
class CompactifyProfile:
    """Tabulated profile f on s in [0, 2] with monotone cubic interpolation."""

    s: Array
    f: Array
    constant: float  # c in phi* eta = c * omega
    parameters: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        s = np.asarray(self.s, dtype=np.float64)
        f = np.asarray(self.f, dtype=np.float64)
        if s.ndim != 1 or s.shape != f.shape or len(s) < 2:
            raise DomainError("C005", "profile table needs matching one-dimensional s and f columns")
        if np.any(np.diff(s) <= 0.0):
            raise DomainError("C005", "profile grid must be strictly increasing")
        if np.any(f <= 0.0):
            raise DomainError("C005", "profile values must be positive")
        if np.any(np.diff(s * f) <= 0.0):
            raise DomainError("C005", "s * f(s) must be strictly increasing")
        s.flags.writeable = False
        f.flags.writeable = False
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "_interpolant", PchipInterpolator(s, f, extrapolate=True))

    def __call__(self, s: npt.ArrayLike) -> Array:
        return self._interpolant(np.asarray(s, dtype=np.float64))  # type: ignore[attr-defined]

    def derivative(self, s: npt.ArrayLike) -> Array:
        return self._interpolant.derivative()(np.asarray(s, dtype=np.float64))  # type: ignore[attr-defined]

    def norm(self, s: npt.ArrayLike) -> Array:
        """Covector length s * f(s) at radius s."""
        s = np.asarray(s, dtype=np.float64)
        return s * self(s)

    def inverse_norm(self, m: npt.ArrayLike) -> Array:
        """Solve s * f(s) = m for s by bisection on the monotone table.

        Raises:
            DomainError: if some m lies outside [0, 1)
        """
        m = np.asarray(m, dtype=np.float64)
        if np.any(m < 0.0) or np.any(m >= 1.0):
            raise DomainError("C002", "covector length must lie in [0, 1)")
        table = self.s * self.f
        upper_index = np.clip(np.searchsorted(table, m, side="right"), 1, len(self.s) - 1)
        lo = self.s[upper_index - 1].copy()
        hi = self.s[upper_index].copy()
        for _ in range(BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            below = self.norm(mid) < m
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        return 0.5 * (lo + hi)


def _reduced_rhs(s: float, u: Array, constant: float) -> Array:
    return np.array([2.0 * constant * s])


def solve_profile_f(nodes: int = TABLE_NODES) -> CompactifyProfile:
    """Build the compactification profile.

    Returns:
        The tabulated profile with its scale constant

    Raises:
        ConstructionError: if the integration fails or the transverse
            residual exceeds the construction tolerance
    """
    grid = np.linspace(0.0, S_MAX, nodes)
    # the reduced equation is linear in c: integrate the unit solution, rescale
    solution = solve_ivp(
        _reduced_rhs,
        (0.0, S_MAX),
        [0.0],
        method=_SOLVER,
        t_eval=grid,
        args=(1.0,),
        rtol=_RTOL,
        atol=_ATOL,
    )
    if not solution.success:
        raise ConstructionError("C004", f"profile integration failed: {solution.message}")

    unit = solution.y[0]
    # s f(s) = u(s)/s -> 1 at s = 2
    constant = S_MAX / unit[-1]
    u = constant * unit

    f = np.empty_like(grid)
    f[1:] = u[1:] / grid[1:] ** 2
    # regular start: u ~ c s², so f(0) = u''(0)/2 = c
    f[0] = constant

    profile = CompactifyProfile(
        s=grid,
        f=f,
        constant=float(constant),
        parameters={
            "nodes": str(nodes),
            "solver": _SOLVER,
            "rtol": repr(_RTOL),
            "atol": repr(_ATOL),
            "interpolation": "pchip",
        },
    )

    derivative = profile.derivative(grid)
    transverse = float(np.max(np.abs(derivative)))
    along = float(np.max(np.abs(f + 0.5 * grid * derivative - constant)))
    residual = max(transverse, along)
    logger.debug(
        "profile built: c=%.15g, transverse residual %.3e, along residual %.3e",
        constant,
        transverse,
        along,
    )
    if residual > RESIDUAL_TOLERANCE:
        raise ConstructionError(
            "C004",
            f"profile residual {residual:.3e} exceeds {RESIDUAL_TOLERANCE:.0e}",
            "Check the solver tolerances",
        )
    return profile


_DEFAULT: CompactifyProfile | None = None
_DEFAULT_LOCK = threading.Lock()


def default_profile() -> CompactifyProfile:
    """The profile at default resolution, built once per process (thread-safe)."""
    global _DEFAULT
    if _DEFAULT is None:
        with _DEFAULT_LOCK:
            if _DEFAULT is None:
                _DEFAULT = solve_profile_f()
    return _DEFAULT


def export_profile_csv(profile: CompactifyProfile, path: Path) -> None:
    """Write the table as CSV: ``#`` header lines with build parameters, then s,f rows.

    Floats are written with ``repr`` so a re-import is bit-exact.
    """
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write("# twistlab compactification profile\n")
        handle.write(f"# constant={profile.constant!r}\n")
        for key in sorted(profile.parameters):
            handle.write(f"# {key}={profile.parameters[key]}\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["s", "f"])
        for s_value, f_value in zip(profile.s.tolist(), profile.f.tolist()):
            writer.writerow([repr(s_value), repr(f_value)])


def import_profile_csv(path: Path) -> CompactifyProfile:
    """Read a table written by :func:`export_profile_csv`.

    Raises:
        DomainError: if the file is not a valid profile table
    """
    parameters: dict[str, str] = {}
    constant: float | None = None
    s_values: list[float] = []
    f_values: list[float] = []
    with open(path, encoding="utf-8", newline="") as handle:
        rows = []
        for line in handle:
            if line.startswith("#"):
                entry = line[1:].strip()
                if "=" in entry:
                    key, value = entry.split("=", 1)
                    if key == "constant":
                        constant = float(value)
                    else:
                        parameters[key] = value
                continue
            rows.append(line)
    reader = csv.reader(rows)
    header = next(reader, None)
    if header != ["s", "f"]:
        raise DomainError("C005", f"expected header 's,f', got {header}")
    for row in reader:
        try:
            s_value, f_value = (float(item) for item in row)
        except ValueError:
            raise DomainError("C005", f"malformed profile row: {row}")
        s_values.append(s_value)
        f_values.append(f_value)
    if constant is None:
        raise DomainError("C005", "profile file has no constant header line")
    return CompactifyProfile(np.array(s_values), np.array(f_values), constant, parameters)
