"""Inradius scaling families and the check that d(area)/dr = perimeter (d(volume)/dr = surface area).

A tangential shape, translated so its inscribed ball sits at the origin and
scaled to unit inradius, generates the family ``member(rho) = rho * shape``.
Area is then exactly quadratic in ``rho`` and volume exactly cubic.  A
central difference is exact for the quadratic; for the cubic it carries an
``h^2`` term that one Richardson step removes, so in both cases the
estimate is limited only by rounding.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
import math

import numpy as np

from . import core2d, core3d
from .core2d import Polygon2
from .core3d import Polyhedron3
from .errors import LineThroughOrigin, NonPositiveScale, NotTangential, SampleOutOfRange, StepTooLarge
from .inscribe import HalfPlaneConstraint, InscribedBall, Tangency, inscribed_ball, tangency_report

ORIGIN_TOL = 1e-12
STRICT_REL_MARGIN = 1e-12
DEFAULT_H_FACTOR = 1e-3


def _scaled_distance(c_: HalfPlaneConstraint, c: float, dim: int) -> float:
    if c_.dimension != dim:
        raise ValueError(f"expected a {dim}D constraint, got {c_.dimension}D")
    if not (c > 0 and math.isfinite(c)):
        raise NonPositiveScale(f"scale factor must be positive, got {c}")
    d = abs(c_.offset)
    if d <= ORIGIN_TOL:
        raise LineThroughOrigin("the line/plane passes through the origin")
    return abs(1.0 - c) * d


def scaled_line_distance(line: HalfPlaneConstraint, c: float) -> float:
    """Distance between a line not through the origin and its scaled copy ``c * line``."""
    return _scaled_distance(line, c, 2)


def scaled_plane_distance(plane: HalfPlaneConstraint, c: float) -> float:
    """Distance between a plane not through the origin and its scaled copy ``c * plane``."""
    return _scaled_distance(plane, c, 3)


def measure(shape) -> float:
    """Area of a polygon or volume of a polyhedron."""
    if isinstance(shape, Polygon2):
        return core2d.signed_area(shape)
    return core3d.volume(shape)


def boundary_measure(shape) -> float:
    """Perimeter of a polygon or surface area of a polyhedron."""
    if isinstance(shape, Polygon2):
        return core2d.perimeter(shape)
    return core3d.surface_area(shape)


def _scale(shape, c: float):
    if isinstance(shape, Polygon2):
        return core2d.scale_polygon(shape, c)
    return core3d.scale_polyhedron(shape, c)


@dataclass(frozen=True, eq=False)
class ScalingFamily:
    normalized_shape: Polygon2 | Polyhedron3
    base_radius: float
    center: np.ndarray

    @property
    def dimension(self) -> int:
        return 2 if isinstance(self.normalized_shape, Polygon2) else 3

    def member(self, rho: float):
        """The family member with inradius ``rho``, inscribed ball at the origin."""
        return _scale(self.normalized_shape, rho)

    def area_at(self, rho: float) -> float:
        return measure(self.member(rho))

    def boundary_at(self, rho: float) -> float:
        return boundary_measure(self.member(rho))


def make_family(shape, ball: InscribedBall | None = None) -> ScalingFamily:
    if ball is None:
        ball = inscribed_ball(shape)
    report = tangency_report(shape, ball)
    if not report.is_tangential:
        raise NotTangential(
            f"inscribed ball touches {report.count(Tangency.TANGENT)} of {len(report.statuses)} elements"
        )
    moved = shape.translated(-ball.center)
    return ScalingFamily(_scale(moved, 1.0 / ball.radius), ball.radius, ball.center)


@dataclass(frozen=True)
class SqueezeSample:
    s: float
    lower: float
    middle: float
    upper: float
    strict: bool


@dataclass(frozen=True)
class DerivativeReport:
    r: float
    measure: float
    boundary_measure: float
    fd_estimate: float
    residual: float
    ratio_identity_residual: float
    squeeze_ok: bool
    samples: list[SqueezeSample]

    def to_dict(self) -> dict:
        return asdict(self)


def default_samples(r: float) -> list[float]:
    return [0.1 * r, 0.25 * r, 0.5 * r, 0.75 * r, 0.9 * r, r - 1e-6 * r]


def squeeze_check(family: ScalingFamily, at_r: float, s_samples=None) -> list[SqueezeSample]:
    """Evaluate ``B(s)(r-s) < M(r)-M(s) < B(r)(r-s)`` at each sample ``s``.

    ``M`` is area or volume, ``B`` perimeter or surface area.  A sample is
    strict when both gaps exceed ``1e-12 * upper``.
    """
    if s_samples is None:
        s_samples = default_samples(at_r)
    m_r = family.area_at(at_r)
    b_r = family.boundary_at(at_r)
    out = []
    for s in s_samples:
        if not 0 < s < at_r:
            raise SampleOutOfRange(f"sample s={s} is outside (0, {at_r})")
        lower = family.boundary_at(s) * (at_r - s)
        middle = m_r - family.area_at(s)
        upper = b_r * (at_r - s)
        margin = STRICT_REL_MARGIN * upper
        out.append(SqueezeSample(s, lower, middle, upper, bool(middle - lower > margin and upper - middle > margin)))
    return out


def _central_difference(family: ScalingFamily, at_r: float, h: float) -> float:
    return (family.area_at(at_r + h) - family.area_at(at_r - h)) / (2 * h)


def verify_theorem(family: ScalingFamily, at_r: float, h: float | None = None, s_samples=None) -> DerivativeReport:
    if h is None:
        h = DEFAULT_H_FACTOR * at_r
    if not 0 < h < at_r:
        raise StepTooLarge(f"step h={h} must lie in (0, {at_r})")
    dim = family.dimension
    fd = _central_difference(family, at_r, h)
    if dim == 3:
        fd = (4 * _central_difference(family, at_r, h / 2) - fd) / 3
    m = family.area_at(at_r)
    b = family.boundary_at(at_r)
    samples = squeeze_check(family, at_r, s_samples)
    return DerivativeReport(
        r=float(at_r),
        measure=m,
        boundary_measure=b,
        fd_estimate=fd,
        residual=abs(fd - b) / b,
        # derived cross-check, not a differentiation: M = r B / dim on the family
        ratio_identity_residual=abs(m - at_r * b / dim) / m,
        squeeze_ok=all(x.strict for x in samples),
        samples=samples,
    )


def verify_shape(shape, h_factor: float = DEFAULT_H_FACTOR) -> DerivativeReport:
    """Build the family of a tangential shape and verify it at its own inradius."""
    fam = make_family(shape)
    return verify_theorem(fam, fam.base_radius, h_factor * fam.base_radius)
