"""Closed-form metrics and exact generators for circles, regular n-gons, cube, tetrahedron."""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import NamedTuple

import numpy as np

from .core2d import Polygon2
from .core3d import Polyhedron3, validate_polyhedron
from .errors import BadN, NonPositiveRadius, UnknownKind

SOLID_KINDS = ("cube", "regular_tetrahedron")


def _check_radius(r: float) -> None:
    if not (r > 0 and math.isfinite(r)):
        raise NonPositiveRadius(f"radius must be positive and finite, got {r}")


class RoundMetrics(NamedTuple):
    area: float
    circumference: float
    volume: float
    sphere_area: float


def circle_sphere_metrics(r: float) -> RoundMetrics:
    _check_radius(r)
    return RoundMetrics(math.pi * r**2, 2 * math.pi * r, 4 / 3 * math.pi * r**3, 4 * math.pi * r**2)


@dataclass(frozen=True)
class NGonMetrics:
    n: int
    r: float
    area: float
    length: float


def ngon_metrics(n: int, r: float) -> NGonMetrics:
    """Area ``n r^2 tan(pi/n)`` and length ``2 n r tan(pi/n)`` of the regular n-gon with inradius r."""
    if int(n) != n or n < 3:
        raise BadN(f"n must be an integer >= 3, got {n}")
    _check_radius(r)
    t = math.tan(math.pi / n)
    return NGonMetrics(int(n), float(r), n * r * r * t, 2 * n * r * t)


def regular_ngon(n: int, r: float) -> tuple[NGonMetrics, Polygon2]:
    """Regular n-gon with incircle of radius ``r`` centered at the origin.

    Vertex k sits at angle ``pi/n + 2 pi k/n`` on the circumradius
    ``r / cos(pi/n)``, so the edge closing the loop touches the incircle
    on the positive x axis.
    """
    m = ngon_metrics(n, r)
    angles = math.pi / n + 2 * math.pi * np.arange(n) / n
    R = r / math.cos(math.pi / n)
    verts = np.column_stack([R * np.cos(angles), R * np.sin(angles)])
    return m, Polygon2(verts)


@dataclass(frozen=True)
class SolidMetrics:
    kind: str
    r: float
    volume: float
    surface_area: float


_CUBE_FACETS = (
    (0, 3, 2, 1),  # z = -r
    (4, 5, 6, 7),  # z = +r
    (0, 1, 5, 4),  # y = -r
    (2, 3, 7, 6),  # y = +r
    (0, 4, 7, 3),  # x = -r
    (1, 2, 6, 5),  # x = +r
)

_TETRA_FACETS = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))


def cube_mesh(r: float) -> Polyhedron3:
    """Cube of side ``2r`` centered at the origin."""
    base = np.array([(-1, -1), (1, -1), (1, 1), (-1, 1)], dtype=float)
    v = np.vstack([np.column_stack([base, -np.ones(4)]), np.column_stack([base, np.ones(4)])]) * r
    return validate_polyhedron(v, _CUBE_FACETS)


def tetrahedron_mesh(r: float) -> Polyhedron3:
    """Regular tetrahedron with insphere of radius ``r`` at the origin (edge ``2 sqrt(6) r``)."""
    # alternate cube corners (+-1, +-1, +-1) have inradius 1/sqrt(3)
    s = math.sqrt(3) * r
    v = np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], dtype=float) * s
    return validate_polyhedron(v, _TETRA_FACETS)


def solid_metrics(kind: str, r: float) -> SolidMetrics:
    _check_radius(r)
    if kind == "cube":
        return SolidMetrics(kind, r, 8 * r**3, 24 * r**2)
    if kind == "regular_tetrahedron":
        return SolidMetrics(kind, r, 8 * math.sqrt(3) * r**3, 24 * math.sqrt(3) * r**2)
    raise UnknownKind(f"unknown solid {kind!r}; expected one of {SOLID_KINDS}")


def named_solid(kind: str, r: float) -> tuple[SolidMetrics, Polyhedron3]:
    m = solid_metrics(kind, r)
    mesh = cube_mesh(r) if kind == "cube" else tetrahedron_mesh(r)
    return m, mesh
