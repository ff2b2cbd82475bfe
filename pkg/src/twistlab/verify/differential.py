"""Central-difference differentials between retraction charts."""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

import numpy as np

from twistlab.core.errors import PreconditionError
from twistlab.core.geometry import Array
from twistlab.verify.charts import Chart, chart_at

__all__ = ["Linearization", "linearize", "differential", "pullback_residual"]

# any map between the two modelled manifolds, batched
SmoothMap = Callable[[Any], Any]


class Linearization:
    """Jacobian of a map at a batch of points, with the charts it was taken in."""

    def __init__(self, matrix: Array, source: Chart, target: Chart) -> None:
        self.matrix = matrix  # (..., 4, 4), columns are images of source frame vectors
        self.source = source
        self.target = target

    def push(self, coords: Array) -> Array:
        """Image of tangent vectors given in source coordinates."""
        return np.einsum("...jk,...k->...j", self.matrix, coords)


def _check_step(step: float) -> None:
    if not step > 0.0:
        raise PreconditionError("V002", f"finite-difference step must be positive, got {step}")


def linearize(fn: SmoothMap, p: Any, step: float = 1e-5) -> Linearization:
    """Differentiate ``fn`` at ``p`` through charts centred at p and fn(p).

    Raises:
        PreconditionError: if step is not positive
    """
    _check_step(step)
    source = chart_at(p)
    target = chart_at(fn(p))
    shape = p.batch_shape + (4,)
    columns = []
    for k in range(4):
        shift = np.zeros(shape)
        shift[..., k] = step
        plus = target.coordinates(fn(source.point(shift)))
        minus = target.coordinates(fn(source.point(-shift)))
        columns.append((plus - minus) / (2.0 * step))
    return Linearization(np.stack(columns, axis=-1), source, target)


def differential(fn: SmoothMap, p: Any, step: float = 1e-5) -> Array:
    """4 x 4 Jacobian of ``fn`` at ``p`` in tangent-frame coordinates; error O(step²)."""
    return linearize(fn, p, step).matrix


def pullback_residual(
    fn: SmoothMap,
    p: Any,
    a: Array,
    b: Array,
    step: float = 1e-5,
    scale: float = 1.0,
) -> Array:
    """|form(fn(p); D fn a, D fn b) - scale * form(p; a, b)| row by row.

    The forms are those of the manifolds involved (omega on S² x S², eta
    on T*S²); ``a`` and ``b`` are tangent vectors at p in frame coordinates.
    """
    lin = linearize(fn, p, step)
    pulled = lin.target.form(lin.push(a), lin.push(b))
    return np.abs(pulled - scale * lin.source.form(a, b))
