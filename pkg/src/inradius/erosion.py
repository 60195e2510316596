"""Inner parallel polygons and the erosion estimate of perimeter.

For a convex polygon the set of points at distance >= eps from the outside
is the intersection of the edge half-planes pushed inward by eps.  While no
edge has collapsed, its area is ``A - L eps + k eps^2``, so the quotient
``(A - A_eps) / eps`` is affine in eps and one Richardson step on a halving
schedule recovers the perimeter ``L`` exactly.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
import csv
import io
import math

import numpy as np

from . import core2d
from .core2d import Polygon2
from .errors import BadRange, EpsilonTooLarge, NotConvex
from .inscribe import incircle, polygon_elements


def _clip(poly: np.ndarray, normal: np.ndarray, offset: float) -> np.ndarray:
    """Keep the part of a convex polygon with ``normal . x >= offset``."""
    s = poly @ normal - offset
    out = []
    n = len(poly)
    for i in range(n):
        j = (i + 1) % n
        if s[i] >= 0:
            out.append(poly[i])
        if (s[i] >= 0) != (s[j] >= 0):
            t = s[i] / (s[i] - s[j])
            out.append(poly[i] + t * (poly[j] - poly[i]))
    return np.array(out).reshape(-1, 2)


def _dedupe(v: np.ndarray, tol: float) -> np.ndarray:
    keep = np.linalg.norm(v - np.roll(v, 1, axis=0), axis=1) > tol
    return v[keep] if keep.any() else v[:1]


def inner_offset(p: Polygon2, eps: float, inradius: float | None = None) -> Polygon2:
    """Locus of centers of an eps-circle rolling inside the convex polygon ``p``."""
    if not core2d.is_convex(p):
        raise NotConvex("inner offsets are only computed for convex polygons")
    if inradius is None:
        inradius = incircle(p).radius
    if not 0 < eps < inradius:
        raise EpsilonTooLarge(f"eps={eps} must lie in (0, inradius={inradius})")
    scale = float(np.max(np.abs(p.vertices)))
    v = np.array(p.vertices)
    for e in polygon_elements(p):
        v = _clip(v, e.constraint.unit_normal, e.constraint.offset + eps)
        v = _dedupe(v, 1e-15 * scale)
    if len(v) < 3:
        raise EpsilonTooLarge(f"inner offset at eps={eps} has collapsed")
    return Polygon2(v)


def first_collapse_epsilon(p: Polygon2) -> float:
    """Smallest eps at which an edge of the inner offset shrinks to a point.

    Below it the quotient is exactly affine in eps.
    """
    reduced, _ = core2d.merge_collinear(p)
    v = reduced.vertices
    prev = v - np.roll(v, 1, axis=0)
    nxt = np.roll(v, -1, axis=0) - v
    # interior angle at each vertex
    cosang = -np.einsum("ij,ij->i", prev, nxt) / (np.linalg.norm(prev, axis=1) * np.linalg.norm(nxt, axis=1))
    half = np.arccos(np.clip(cosang, -1.0, 1.0)) / 2
    cot = 1 / np.tan(half)
    rate = cot + np.roll(cot, -1)
    lengths = np.linalg.norm(nxt, axis=1)
    return float(np.min(lengths / rate))


@dataclass(frozen=True)
class ErosionRow:
    epsilon: float
    inner_area: float
    quotient: float


@dataclass(frozen=True)
class ErosionTable:
    rows: list[ErosionRow]
    extrapolated_limit: float
    exact_perimeter: float
    relative_error: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["epsilon", "inner_area", "quotient"])
        for row in self.rows:
            w.writerow([repr(row.epsilon), repr(row.inner_area), repr(row.quotient)])
        return buf.getvalue()


def erosion_derivative(p: Polygon2, eps0: float, levels: int = 4) -> ErosionTable:
    """Tabulate ``(A - A_eps)/eps`` at eps0, eps0/2, ... and extrapolate to eps -> 0."""
    if levels < 2:
        raise BadRange(f"need at least 2 levels, got {levels}")
    r = incircle(p).radius
    if not 0 < eps0 < r / 2:
        raise EpsilonTooLarge(f"eps0={eps0} must lie in (0, inradius/2={r / 2})")
    area = core2d.signed_area(p)
    rows = []
    for k in range(levels):
        eps = eps0 / 2**k
        inner = core2d.signed_area(inner_offset(p, eps, inradius=r))
        rows.append(ErosionRow(eps, inner, (area - inner) / eps))
    # quotient = L - c eps: halving eps gives L = 2 q(eps/2) - q(eps)
    limit = 2 * rows[-1].quotient - rows[-2].quotient
    exact = core2d.perimeter(p)
    return ErosionTable(rows, limit, exact, abs(limit - exact) / exact)


def rectangle_quotient_closed_form(a: float, b: float, eps: float) -> float:
    """``[ab - (a - 2 eps)(b - 2 eps)] / eps`` for an a-by-b rectangle, i.e. ``2a + 2b - 4 eps``."""
    if not 0 < eps < min(a, b) / 2:
        raise EpsilonTooLarge(f"eps={eps} must lie in (0, {min(a, b) / 2})")
    return 2 * a + 2 * b - 4 * eps


def rectangle(a: float, b: float, origin=(0.0, 0.0)) -> Polygon2:
    x0, y0 = origin
    if not (a > 0 and b > 0 and math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"side lengths must be positive, got {a}, {b}")
    return core2d.validate_polygon([(x0, y0), (x0 + a, y0), (x0 + a, y0 + b), (x0, y0 + b)])
