"""Planar polygons: validation, shoelace area, perimeter, convexity, scaling.

Points are plain ``(x, y)`` pairs; a validated polygon stores them as a
read-only ``(n, 2)`` float array in counterclockwise order.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
import math

import numpy as np

from .errors import (
    DuplicateVertex,
    NonFinite,
    NonPositiveScale,
    SelfIntersecting,
    TooFewVertices,
)

logger = logging.getLogger(__name__)

# Absolute tolerance (coordinate units) for coincident vertices and collinearity.
DEGENERACY_TOL = 1e-9


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Polygon2:
    """Simple polygon with counterclockwise vertex order.

    Build instances through :func:`validate_polygon`; the constructor itself
    trusts its input.
    """

    vertices: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vertices", _frozen(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(starts, ends)`` arrays; edge i joins vertex i to vertex i+1."""
        v = self.vertices
        return v, np.roll(v, -1, axis=0)

    def translated(self, offset) -> "Polygon2":
        return Polygon2(self.vertices + np.asarray(offset, dtype=float))


@dataclass(frozen=True)
class Metrics2:
    area: float
    perimeter: float

    @property
    def isoperimetric_ok(self) -> bool:
        return self.perimeter**2 >= 4 * math.pi * self.area


def _shoelace(v: np.ndarray) -> float:
    w = np.roll(v, -1, axis=0)
    return 0.5 * float(np.sum(v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]))


def _cross(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def _check_simple(v: np.ndarray, tol: float) -> None:
    n = len(v)
    a = v
    b = np.roll(v, -1, axis=0)
    d = b - a
    lengths = np.hypot(d[:, 0], d[:, 1])

    # adjacent edges may only share their common vertex: reject fold-backs
    nxt = np.roll(d, -1, axis=0)
    turn = _cross(d, nxt) / lengths
    back = np.einsum("ij,ij->i", d, nxt) < 0
    folds = np.nonzero(back & (np.abs(turn) <= tol))[0]
    if len(folds):
        raise SelfIntersecting(f"edges {folds[0]} and {(folds[0] + 1) % n} fold back on each other")

    for i in range(n - 2):
        # edges i+2 .. n-1 (skip the one closing back onto vertex i)
        j = np.arange(i + 2, n if i > 0 else n - 1)
        if len(j) == 0:
            continue
        ai, bi, di, li = a[i], b[i], d[i], lengths[i]
        aj, bj, dj, lj = a[j], b[j], d[j], lengths[j]
        # signed distances of each endpoint to the other segment's line
        s1 = _cross(di, aj - ai) / li
        s2 = _cross(di, bj - ai) / li
        s3 = _cross(dj, ai - aj) / lj
        s4 = _cross(dj, bi - aj) / lj
        straddle_j = (np.minimum(s1, s2) <= tol) & (np.maximum(s1, s2) >= -tol)
        straddle_i = (np.minimum(s3, s4) <= tol) & (np.maximum(s3, s4) >= -tol)
        hit = straddle_i & straddle_j
        collinear = (np.abs(s1) <= tol) & (np.abs(s2) <= tol)
        if np.any(collinear & hit):
            # overlapping only if the projections onto edge i overlap
            u = di / li
            p1 = (aj - ai) @ u
            p2 = (bj - ai) @ u
            lo = np.minimum(p1, p2)
            hi = np.maximum(p1, p2)
            overlap = (hi >= -tol) & (lo <= li + tol)
            hit = np.where(collinear, hit & overlap, hit)
        if np.any(hit):
            k = int(j[np.argmax(hit)])
            raise SelfIntersecting(f"edges {i} and {k} intersect")


def validate_polygon(raw_vertices, tol: float = DEGENERACY_TOL) -> Polygon2:
    """Validate a vertex loop and return it as a counterclockwise Polygon2.

    Raises TooFewVertices, NonFinite, DuplicateVertex or SelfIntersecting.
    """
    v = np.asarray(raw_vertices, dtype=float)
    if v.ndim != 2 or v.shape[1] != 2:
        raise TooFewVertices(f"expected a list of (x, y) pairs, got shape {v.shape}")
    if len(v) < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {len(v)}")
    if not np.all(np.isfinite(v)):
        raise NonFinite("vertex coordinates must be finite")
    gaps = np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)
    if np.any(gaps <= tol):
        i = int(np.argmax(gaps <= tol))
        raise DuplicateVertex(f"vertices {i} and {(i + 1) % len(v)} coincide")
    _check_simple(v, tol)
    area = _shoelace(v)
    if abs(area) <= tol * tol:
        raise SelfIntersecting("polygon encloses zero area")
    if area < 0:
        v = v[::-1]
    p = Polygon2(v)
    if collinear_vertices(p, tol):
        logger.warning("polygon has collinear consecutive edges at vertices %s", collinear_vertices(p, tol))
    return p


def signed_area(p: Polygon2) -> float:
    return _shoelace(p.vertices)


def perimeter(p: Polygon2) -> float:
    a, b = p.edges()
    return float(np.sum(np.linalg.norm(b - a, axis=1)))


def metrics(p: Polygon2) -> Metrics2:
    return Metrics2(signed_area(p), perimeter(p))


def _turns(p: Polygon2) -> np.ndarray:
    # signed distance of vertex i from the chord joining its neighbours,
    # positive for a left turn
    v = p.vertices
    incoming = v - np.roll(v, 1, axis=0)
    outgoing = np.roll(v, -1, axis=0) - v
    chord = np.linalg.norm(incoming + outgoing, axis=1)
    return _cross(incoming, outgoing) / chord


def is_convex(p: Polygon2, tol: float = DEGENERACY_TOL) -> bool:
    """True when no vertex turns right by more than ``tol``.

    Collinear vertices are allowed; see :func:`collinear_vertices`.
    """
    return bool(np.all(_turns(p) >= -tol))


def collinear_vertices(p: Polygon2, tol: float = DEGENERACY_TOL) -> list[int]:
    return [int(i) for i in np.nonzero(np.abs(_turns(p)) <= tol)[0]]


def merge_collinear(p: Polygon2, tol: float = DEGENERACY_TOL) -> tuple[Polygon2, list[list[int]]]:
    """Drop collinear vertices so every edge lies on a distinct line.

    Returns the reduced polygon and, for each of its edges, the indices of
    the original edges that were merged into it.
    """
    drop = set(collinear_vertices(p, tol))
    keep = [i for i in range(len(p)) if i not in drop]
    groups = []
    for k, start in enumerate(keep):
        end = keep[(k + 1) % len(keep)]
        span = (end - start) % len(p) or len(p)
        groups.append([(start + t) % len(p) for t in range(span)])
    return Polygon2(p.vertices[keep]), groups


def scale_polygon(p: Polygon2, c: float) -> Polygon2:
    """Scale every vertex by ``c`` about the origin."""
    if not (c > 0 and math.isfinite(c)):
        raise NonPositiveScale(f"scale factor must be positive and finite, got {c}")
    return Polygon2(p.vertices * c)
