"""Closed polyhedral surfaces with planar convex facets.

A validated :class:`Polyhedron3` is a sphere-topology, consistently oriented
mesh whose facets list their vertices counterclockwise as seen from outside.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
import math

import numpy as np

from .errors import (
    EulerCharacteristicMismatch,
    InvalidFacet,
    NonConvexFacet,
    NonFinite,
    NonManifoldEdge,
    NonPlanarFacet,
    NonPositiveScale,
    NotClosed,
)

# Planarity tolerance, relative to the bounding-box diagonal.
PLANARITY_REL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Polyhedron3:
    vertices: np.ndarray
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "facets", tuple(tuple(int(i) for i in f) for f in self.facets))

    def facet_points(self, k: int) -> np.ndarray:
        return self.vertices[list(self.facets[k])]

    def edges(self) -> set[tuple[int, int]]:
        """Undirected edges as sorted index pairs."""
        out = set()
        for f in self.facets:
            for a, b in zip(f, f[1:] + f[:1]):
                out.add((min(a, b), max(a, b)))
        return out

    def translated(self, offset) -> "Polyhedron3":
        return Polyhedron3(self.vertices + np.asarray(offset, dtype=float), self.facets)

    @property
    def diameter_scale(self) -> float:
        """Bounding-box diagonal."""
        return float(np.linalg.norm(self.vertices.max(axis=0) - self.vertices.min(axis=0)))


@dataclass(frozen=True)
class Metrics3:
    volume: float
    surface_area: float

    @property
    def isoperimetric_ok(self) -> bool:
        return self.surface_area**3 >= 36 * math.pi * self.volume**2


def newell_vector(points: np.ndarray) -> np.ndarray:
    """Newell's area vector: normal direction times twice the polygon area."""
    q = points - points.mean(axis=0)
    return np.cross(q, np.roll(q, -1, axis=0)).sum(axis=0)


def facet_plane(points: np.ndarray) -> tuple[np.ndarray, float]:
    """Unit outward normal ``n`` and offset ``d`` with ``n . x = d`` on the facet."""
    nv = newell_vector(points)
    n = nv / np.linalg.norm(nv)
    return n, float(np.mean(points @ n))


def _check_facet_shape(points: np.ndarray, k: int, tol: float) -> None:
    nv = newell_vector(points)
    norm = np.linalg.norm(nv)
    if norm <= tol * tol:
        raise InvalidFacet(f"facet {k} has zero area")
    n = nv / norm
    d = points @ n
    if np.ptp(d) / 2 > tol:
        raise NonPlanarFacet(f"facet {k} deviates {np.ptp(d) / 2:.3g} from its plane (tolerance {tol:.3g})")
    e_in = points - np.roll(points, 1, axis=0)
    e_out = np.roll(points, -1, axis=0) - points
    turns = np.cross(e_in, e_out) @ n
    if np.any(turns < -tol * (np.linalg.norm(e_in, axis=1) + np.linalg.norm(e_out, axis=1))):
        raise NonConvexFacet(f"facet {k} is not convex")


def validate_polyhedron(vertices, facets) -> Polyhedron3:
    """Check closedness, manifoldness, sphere topology, planar convex facets.

    Facet order is flipped globally when the input is inward-oriented.
    """
    v = np.asarray(vertices, dtype=float)
    if v.ndim != 2 or v.shape[1] != 3 or len(v) < 4:
        raise InvalidFacet(f"expected at least 4 (x, y, z) vertices, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise NonFinite("vertex coordinates must be finite")
    facets = [tuple(int(i) for i in f) for f in facets]
    if len(facets) < 4:
        raise NotClosed(f"a closed surface needs at least 4 facets, got {len(facets)}")
    for k, f in enumerate(facets):
        if len(f) < 3:
            raise InvalidFacet(f"facet {k} has {len(f)} vertices")
        if len(set(f)) != len(f):
            raise InvalidFacet(f"facet {k} repeats a vertex")
        if min(f) < 0 or max(f) >= len(v):
            raise InvalidFacet(f"facet {k} references a vertex outside 0..{len(v) - 1}")

    directed = Counter()
    for f in facets:
        for a, b in zip(f, f[1:] + f[:1]):
            directed[(a, b)] += 1
    for (a, b), count in directed.items():
        if count > 1:
            raise NonManifoldEdge(f"edge ({a}, {b}) is used {count} times in the same direction")
        if (b, a) not in directed:
            raise NotClosed(f"edge ({a}, {b}) borders only one facet")

    used = {i for f in facets for i in f}
    n_v = len(used)
    n_e = len(directed) // 2
    chi = n_v - n_e + len(facets)
    if chi != 2:
        raise EulerCharacteristicMismatch(f"V - E + F = {n_v} - {n_e} + {len(facets)} = {chi}, expected 2")

    diag = float(np.linalg.norm(v.max(axis=0) - v.min(axis=0)))
    tol = PLANARITY_REL_TOL * diag
    for k, f in enumerate(facets):
        _check_facet_shape(v[list(f)], k, tol)

    p = Polyhedron3(v, facets)
    if volume(p) < 0:
        p = Polyhedron3(v, [tuple(reversed(f)) for f in facets])
    return p


def fan_triangles(facet: tuple[int, ...]) -> list[tuple[int, int, int]]:
    return [(facet[0], facet[i], facet[i + 1]) for i in range(1, len(facet) - 1)]


def ear_triangles(points: np.ndarray, facet: tuple[int, ...]) -> list[tuple[int, int, int]]:
    """Ear-clipping triangulation of a planar facet (``points`` are its coordinates)."""
    n = newell_vector(points)
    idx = list(range(len(facet)))
    out = []
    while len(idx) > 3:
        for k in range(len(idx)):
            i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
            a, b, c = points[i0], points[i1], points[i2]
            if np.dot(np.cross(b - a, c - b), n) <= 0:
                continue
            inside = False
            for j in idx:
                if j in (i0, i1, i2):
                    continue
                q = points[j]
                if (np.dot(np.cross(b - a, q - a), n) >= 0 and np.dot(np.cross(c - b, q - b), n) >= 0
                        and np.dot(np.cross(a - c, q - c), n) >= 0):
                    inside = True
                    break
            if not inside:
                out.append((facet[i0], facet[i1], facet[i2]))
                idx.pop(k)
                break
        else:
            raise NonConvexFacet("ear clipping found no ear")
    out.append(tuple(facet[i] for i in idx))
    return out


def volume(p: Polyhedron3, triangulation: str = "fan") -> float:
    """Enclosed volume by the divergence theorem over triangulated facets."""
    tris = []
    for k, f in enumerate(p.facets):
        if triangulation == "fan":
            tris.extend(fan_triangles(f))
        elif triangulation == "ear":
            tris.extend(ear_triangles(p.facet_points(k), f))
        else:
            raise ValueError(f"unknown triangulation {triangulation!r}")
    # triple products about the vertex centroid: same sum for a closed surface,
    # without cancellation for meshes far from the origin
    t = p.vertices[np.array(tris)] - p.vertices.mean(axis=0)
    return float(np.einsum("ij,ij->i", t[:, 0], np.cross(t[:, 1], t[:, 2])).sum() / 6.0)


def facet_area(p: Polyhedron3, k: int) -> float:
    return float(np.linalg.norm(newell_vector(p.facet_points(k)))) / 2.0


def surface_area(p: Polyhedron3) -> float:
    return sum(facet_area(p, k) for k in range(len(p.facets)))


def metrics(p: Polyhedron3) -> Metrics3:
    return Metrics3(volume(p), surface_area(p))


def euler_characteristic(p: Polyhedron3) -> int:
    n_v = len({i for f in p.facets for i in f})
    return n_v - len(p.edges()) + len(p.facets)


def scale_polyhedron(p: Polyhedron3, c: float) -> Polyhedron3:
    if not (c > 0 and math.isfinite(c)):
        raise NonPositiveScale(f"scale factor must be positive and finite, got {c}")
    return Polyhedron3(p.vertices * c, p.facets)
