"""Largest inscribed circle / sphere of a convex shape and tangency classification.

The inscribed ball is the Chebyshev center problem

    maximize r  subject to  n_i . x - b_i >= r   for every edge/facet i

with inward unit normals ``n_i``.  When the optimal center is not unique
(a rectangle, a box) the reported ``center`` is the lexicographically
smallest optimal center, while tangency is judged at a relative-interior
point of the optimal set: an element counts as tangent only if every
largest inscribed ball touches it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import enum

import numpy as np

from . import core2d, core3d
from .core2d import Polygon2
from .core3d import Polyhedron3
from .errors import Infeasible, MismatchedShape, NotConvex
from .lp import is_feasible, maximize

FEASIBILITY_TOL = 1e-9
# tangency and uniqueness thresholds, relative to the radius
TANGENCY_REL_TOL = 1e-7
FACE_RELAX_REL = 1e-10


@dataclass(frozen=True)
class HalfPlaneConstraint:
    """``unit_normal . x >= offset`` with an inward unit normal (a line in 2D, a plane in 3D)."""

    unit_normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = np.array(self.unit_normal, dtype=float)
        norm = np.linalg.norm(n)
        if abs(norm - 1.0) > 1e-12:
            n = n / norm
        n.setflags(write=False)
        object.__setattr__(self, "unit_normal", n)
        object.__setattr__(self, "offset", float(self.offset))

    @classmethod
    def through(cls, point, normal) -> "HalfPlaneConstraint":
        n = np.asarray(normal, dtype=float)
        n = n / np.linalg.norm(n)
        return cls(n, float(n @ np.asarray(point, dtype=float)))

    def distance(self, x) -> float:
        """Signed distance from ``x`` to the boundary line/plane, positive inside."""
        return float(self.unit_normal @ np.asarray(x, dtype=float) - self.offset)

    @property
    def dimension(self) -> int:
        return len(self.unit_normal)


@dataclass(frozen=True)
class InscribedBall:
    center: np.ndarray
    radius: float
    active_indices: tuple[int, ...]
    center_unique: bool
    # relative-interior point of the optimal center set; equals center when unique
    face_center: np.ndarray = field(default=None)

    def __post_init__(self):
        c = np.array(self.center, dtype=float)
        c.setflags(write=False)
        object.__setattr__(self, "center", c)
        fc = c if self.face_center is None else np.array(self.face_center, dtype=float)
        fc.setflags(write=False)
        object.__setattr__(self, "face_center", fc)

    @property
    def dimension(self) -> int:
        return len(self.center)


class Tangency(str, enum.Enum):
    TANGENT = "Tangent"
    CLEAR = "Clear"
    OUTSIDE_SEGMENT = "TangentLineButOutsideSegment"


@dataclass(frozen=True)
class TangencyReport:
    statuses: tuple[Tangency, ...]
    is_tangential: bool
    min_gap: float
    # original edge / facet indices merged into each classified element
    members: tuple[tuple[int, ...], ...]

    def count(self, status: Tangency) -> int:
        return sum(s is status for s in self.statuses)


def _as_arrays(constraints):
    N = np.array([c.unit_normal for c in constraints])
    b = np.array([c.offset for c in constraints])
    return N, b


def lp_max_radius(constraints: list[HalfPlaneConstraint], dimension: int) -> InscribedBall:
    """Chebyshev center of ``{x : n_i . x >= b_i}``.

    Raises Infeasible when the region has no interior, Unbounded when the
    constraints do not enclose a bounded region.
    """
    N, b = _as_arrays(constraints)
    if N.ndim != 2 or N.shape[1] != dimension:
        raise MismatchedShape(f"constraints are not {dimension}-dimensional")
    m = len(b)
    A = np.hstack([-N, np.ones((m, 1))])
    obj = np.zeros(dimension + 1)
    obj[-1] = 1.0
    sol = maximize(obj, A, -b)
    r = sol.z[-1]
    scale = 1.0 + float(np.max(np.abs(b)))
    if r <= 1e-12 * scale:
        raise Infeasible(f"region has no interior (best radius {r:.3g})")

    # the (slightly relaxed) set of optimal centers
    delta = FACE_RELAX_REL * max(r, 1e-12 * scale)
    face_A = -N
    face_b = -(b + r - delta)
    lows, highs, extremes = [], [], []
    for j in range(dimension):
        e = np.zeros(dimension)
        e[j] = 1.0
        lo = maximize(-e, face_A, face_b)
        hi = maximize(e, face_A, face_b)
        lows.append(lo.z[j])
        highs.append(hi.z[j])
        extremes.extend([lo.z, hi.z])
    unique = bool(np.max(np.array(highs) - np.array(lows)) <= TANGENCY_REL_TOL * r)

    if unique:
        center = sol.z[:dimension]
        face_center = center
    else:
        center = _lexmin_center(face_A, face_b, -(b + r), delta, dimension)
        face_center = np.mean(extremes, axis=0)

    slack = N @ center - b - r
    active = tuple(int(i) for i in np.nonzero(slack <= TANGENCY_REL_TOL * r)[0])
    return InscribedBall(center=center, radius=float(r), active_indices=active,
                         center_unique=unique, face_center=face_center)


def _lexmin_center(face_A, relaxed_b, exact_b, delta, dimension) -> np.ndarray:
    """Lexicographically smallest point of ``{x : face_A x <= exact_b}``.

    Each coordinate is minimized over the relaxed face; the optimal basis is
    then re-solved against the unrelaxed right-hand side to remove the
    relaxation offset.
    """
    rows = [face_A]
    relaxed = [relaxed_b]
    exact = [exact_b]
    x = None
    for j in range(dimension):
        e = np.zeros(dimension)
        e[j] = 1.0
        A = np.vstack(rows)
        step = maximize(-e, A, np.concatenate(relaxed))
        B = list(step.basis)
        x = step.z
        try:
            polished = np.linalg.solve(A[B], np.concatenate(exact)[B])
            if np.all(A @ polished <= np.concatenate(exact) + 10 * delta):
                x = polished
        except np.linalg.LinAlgError:
            pass
        rows.append(e[None, :])
        relaxed.append(np.array([x[j] + delta]))
        exact.append(np.array([x[j]]))
    return x


def feasible_at_radius(constraints: list[HalfPlaneConstraint], radius: float) -> bool:
    """Is there a center whose ball of ``radius`` satisfies every constraint?"""
    N, b = _as_arrays(constraints)
    return is_feasible(-N, -(b + radius))


# -- shapes -> supporting elements -------------------------------------------


@dataclass(frozen=True)
class _Element:
    constraint: HalfPlaneConstraint
    members: tuple[int, ...]
    # 2D: segment endpoints; 3D: list of member facet point arrays
    geometry: object


def polygon_elements(p: Polygon2) -> list[_Element]:
    """One supporting line per maximal run of collinear edges."""
    reduced, groups = core2d.merge_collinear(p)
    a, b = reduced.edges()
    out = []
    for k in range(len(reduced)):
        d = b[k] - a[k]
        inward = np.array([-d[1], d[0]])
        out.append(_Element(HalfPlaneConstraint.through(a[k], inward), tuple(groups[k]), (a[k], b[k])))
    return out


def polyhedron_elements(p: Polyhedron3) -> list[_Element]:
    """One supporting plane per group of coplanar facets."""
    tol = core3d.PLANARITY_REL_TOL * p.diameter_scale * 10
    planes = []
    groups: list[list[int]] = []
    for k in range(len(p.facets)):
        n, d = core3d.facet_plane(p.facet_points(k))
        for g, (n0, d0) in enumerate(planes):
            if n @ n0 > 1 - 1e-12 and abs(d - d0) <= tol:
                groups[g].append(k)
                break
        else:
            planes.append((n, d))
            groups.append([k])
    out = []
    for (n, d), g in zip(planes, groups):
        out.append(_Element(HalfPlaneConstraint(-n, -d), tuple(g), [p.facet_points(k) for k in g]))
    return out


def polyhedron_is_convex(p: Polyhedron3) -> bool:
    tol = core3d.PLANARITY_REL_TOL * p.diameter_scale * 10
    for k in range(len(p.facets)):
        n, d = core3d.facet_plane(p.facet_points(k))
        if np.any(p.vertices @ n > d + tol):
            return False
    return True


def incircle(p: Polygon2) -> InscribedBall:
    if not core2d.is_convex(p):
        raise NotConvex("largest inscribed circle is only computed for convex polygons")
    return lp_max_radius([e.constraint for e in polygon_elements(p)], 2)


def insphere(p: Polyhedron3) -> InscribedBall:
    if not polyhedron_is_convex(p):
        raise NotConvex("largest inscribed sphere is only computed for convex polyhedra")
    return lp_max_radius([e.constraint for e in polyhedron_elements(p)], 3)


def inscribed_ball(shape) -> InscribedBall:
    if isinstance(shape, Polygon2):
        return incircle(shape)
    if isinstance(shape, Polyhedron3):
        return insphere(shape)
    raise TypeError(f"expected Polygon2 or Polyhedron3, got {type(shape).__name__}")


def elements(shape) -> list[_Element]:
    if isinstance(shape, Polygon2):
        return polygon_elements(shape)
    if isinstance(shape, Polyhedron3):
        return polyhedron_elements(shape)
    raise TypeError(f"expected Polygon2 or Polyhedron3, got {type(shape).__name__}")


def _foot_on_segment(foot, seg, tau) -> bool:
    a, b = seg
    d = b - a
    length = np.linalg.norm(d)
    t = (foot - a) @ (d / length)
    return -tau <= t <= length + tau


def _foot_in_facet(foot, pts, tau) -> bool:
    n_out = core3d.newell_vector(pts)
    n_out /= np.linalg.norm(n_out)
    e = np.roll(pts, -1, axis=0) - pts
    inward = np.cross(n_out, e)
    inward /= np.linalg.norm(inward, axis=1)[:, None]
    return bool(np.all(np.einsum("ij,ij->i", inward, foot - pts) >= -tau))


def tangency_report(shape, ball: InscribedBall) -> TangencyReport:
    """Classify every edge (2D) or facet (3D) against the inscribed ball."""
    dim = 2 if isinstance(shape, Polygon2) else 3
    if ball.dimension != dim:
        raise MismatchedShape(f"{ball.dimension}D ball given for a {dim}D shape")
    els = elements(shape)
    r = ball.radius
    tau = TANGENCY_REL_TOL * r
    x = ball.face_center
    gaps = np.array([e.constraint.distance(x) - r for e in els])
    if np.min(gaps) < -max(tau, FEASIBILITY_TOL):
        raise MismatchedShape("ball does not fit inside this shape")
    statuses = []
    for e, gap in zip(els, gaps):
        if gap > tau:
            statuses.append(Tangency.CLEAR)
            continue
        foot = x - (gap + r) * e.constraint.unit_normal
        if dim == 2:
            inside = _foot_on_segment(foot, e.geometry, tau)
        else:
            inside = any(_foot_in_facet(foot, pts, tau) for pts in e.geometry)
        ok = abs(gap) <= tau and inside
        statuses.append(Tangency.TANGENT if ok else Tangency.OUTSIDE_SEGMENT)
    return TangencyReport(
        statuses=tuple(statuses),
        is_tangential=all(s is Tangency.TANGENT for s in statuses),
        min_gap=float(np.min(gaps)),
        members=tuple(e.members for e in els),
    )
