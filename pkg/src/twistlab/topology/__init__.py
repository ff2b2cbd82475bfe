"""Degrees, homology action and winding numbers."""

from twistlab.topology.degree import (
    DEFAULT_BASEPOINTS,
    Basepoints,
    HomologyMatrix,
    antidiagonal_orientation,
    degree_integral,
    homology_matrix,
    intersection_number,
    mapping_degree,
    sphere_class,
)
from twistlab.topology.winding import (
    MapFamily,
    MatrixLoop,
    normal_loop_winding,
    polar_angle,
    winding_number,
)

__all__ = [
    "Basepoints",
    "DEFAULT_BASEPOINTS",
    "HomologyMatrix",
    "degree_integral",
    "mapping_degree",
    "homology_matrix",
    "sphere_class",
    "intersection_number",
    "antidiagonal_orientation",
    "MatrixLoop",
    "MapFamily",
    "polar_angle",
    "winding_number",
    "normal_loop_winding",
]
