"""Hypothesis strategies shared by the unit tests."""

import math

import numpy as np
from hypothesis import strategies as st

components = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)


@st.composite
def unit_vectors(draw):
    """Unit vectors in R³, kept away from the origin before normalizing."""
    v = np.array([draw(components), draw(components), draw(components)])
    if np.linalg.norm(v) < 1e-3:
        v = np.array([0.0, 0.0, 1.0])
    return v / np.linalg.norm(v)


angles = st.floats(min_value=-2.0 * math.pi, max_value=2.0 * math.pi, allow_nan=False)

profile_arguments = st.floats(min_value=-1.0, max_value=3.0, allow_nan=False)
