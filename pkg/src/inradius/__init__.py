"""Inradius-parameterized area/perimeter and volume/surface-area identities.

For a polygon (polyhedron) whose largest inscribed circle (sphere) touches
every edge (facet), area A and perimeter L measured as functions of the
inradius r satisfy dA/dr = L (dV/dr = sigma).  This package computes the
inscribed ball by linear programming, classifies tangency, verifies the
identity numerically, and estimates perimeter by inner offsets when the
inradius parameterization does not apply.
"""

from .core2d import Metrics2, Polygon2, is_convex, perimeter, scale_polygon, signed_area, validate_polygon
from .core3d import Metrics3, Polyhedron3, scale_polyhedron, surface_area, validate_polyhedron, volume
from .inscribe import (
    HalfPlaneConstraint,
    InscribedBall,
    Tangency,
    TangencyReport,
    incircle,
    insphere,
    lp_max_radius,
    tangency_report,
)
from .derivcheck import (
    DerivativeReport,
    ScalingFamily,
    make_family,
    scaled_line_distance,
    scaled_plane_distance,
    squeeze_check,
    verify_theorem,
)
from .erosion import ErosionTable, erosion_derivative, inner_offset, rectangle_quotient_closed_form
from .closedform import circle_sphere_metrics, named_solid, regular_ngon

__version__ = "0.1.0"

__all__ = [
    "Metrics2", "Polygon2", "is_convex", "perimeter", "scale_polygon", "signed_area", "validate_polygon",
    "Metrics3", "Polyhedron3", "scale_polyhedron", "surface_area", "validate_polyhedron", "volume",
    "HalfPlaneConstraint", "InscribedBall", "Tangency", "TangencyReport", "incircle", "insphere",
    "lp_max_radius", "tangency_report",
    "DerivativeReport", "ScalingFamily", "make_family", "scaled_line_distance", "scaled_plane_distance",
    "squeeze_check", "verify_theorem",
    "ErosionTable", "erosion_derivative", "inner_offset", "rectangle_quotient_closed_form",
    "circle_sphere_metrics", "named_solid", "regular_ngon",
]
