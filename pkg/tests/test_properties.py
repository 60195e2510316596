"""Property-based checks on fuzzed shapes.

Shapes come from the seeded generators in ``inradius.samples``; hypothesis
drives the seed and the numeric parameters, with a fixed database-free
profile so runs are reproducible.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from inradius import core2d, core3d
from inradius.derivcheck import make_family, scaled_line_distance, scaled_plane_distance, squeeze_check
from inradius.inscribe import HalfPlaneConstraint, elements, feasible_at_radius, incircle, inscribed_ball, insphere
from inradius.samples import (
    random_convex_polygon,
    random_tangent_polygon,
    random_tangential_polyhedron,
    random_tetrahedron,
)

SETTINGS = settings(max_examples=60, deadline=None, derandomize=True, database=None)

seeds = st.integers(min_value=0, max_value=2**32 - 1)
scales = st.floats(min_value=0.05, max_value=20.0)
offsets2 = st.tuples(*[st.floats(-100, 100)] * 2)
offsets3 = st.tuples(*[st.floats(-100, 100)] * 3)


def _polygon(seed):
    return random_convex_polygon(np.random.default_rng(seed))


def _polyhedron(seed):
    rng = np.random.default_rng(seed)
    if seed % 2:
        return random_tetrahedron(rng)
    return random_tangential_polyhedron(rng, int(rng.integers(4, 9)))[0]


@SETTINGS
@given(seeds, scales)
def test_polygon_scaling_laws(seed, c):
    p = _polygon(seed)
    q = core2d.scale_polygon(p, c)
    assert core2d.signed_area(q) == pytest.approx(c**2 * core2d.signed_area(p), rel=1e-12)
    assert core2d.perimeter(q) == pytest.approx(c * core2d.perimeter(p), rel=1e-12)
    assert incircle(q).radius == pytest.approx(c * incircle(p).radius, rel=1e-9)


@SETTINGS
@given(seeds, scales)
def test_polyhedron_scaling_laws(seed, c):
    p = _polyhedron(seed)
    q = core3d.scale_polyhedron(p, c)
    assert core3d.volume(q) == pytest.approx(c**3 * core3d.volume(p), rel=1e-12)
    assert core3d.surface_area(q) == pytest.approx(c**2 * core3d.surface_area(p), rel=1e-12)
    assert insphere(q).radius == pytest.approx(c * insphere(p).radius, rel=1e-9)


@SETTINGS
@given(seeds, offsets2)
def test_polygon_translation_invariance(seed, t):
    p = _polygon(seed)
    q = p.translated(t)
    assert core2d.signed_area(q) == pytest.approx(core2d.signed_area(p), rel=1e-10)
    assert core2d.perimeter(q) == pytest.approx(core2d.perimeter(p), rel=1e-12)
    a, b = incircle(p), incircle(q)
    assert b.radius == pytest.approx(a.radius, rel=1e-9)
    np.testing.assert_allclose(b.center, a.center + np.asarray(t), atol=1e-8)


@SETTINGS
@given(seeds, offsets3)
def test_polyhedron_translation_invariance(seed, t):
    p = _polyhedron(seed)
    q = p.translated(t)
    assert core3d.volume(q) == pytest.approx(core3d.volume(p), rel=1e-10)
    assert core3d.surface_area(q) == pytest.approx(core3d.surface_area(p), rel=1e-10)
    assert insphere(q).radius == pytest.approx(insphere(p).radius, rel=1e-9)


@SETTINGS
@given(seeds)
def test_orientation_reversal(seed):
    p = _polygon(seed)
    q = core2d.validate_polygon(p.vertices[::-1])
    assert core2d.signed_area(q) == pytest.approx(core2d.signed_area(p), rel=1e-12)
    m = _polyhedron(seed)
    flipped = core3d.validate_polyhedron(m.vertices, [tuple(reversed(f)) for f in m.facets])
    assert core3d.volume(flipped) == pytest.approx(core3d.volume(m), rel=1e-12)


@SETTINGS
@given(seeds)
def test_isoperimetric_inequalities(seed):
    p = _polygon(seed)
    assert core2d.perimeter(p) ** 2 >= 4 * math.pi * core2d.signed_area(p)
    assert core2d.metrics(p).isoperimetric_ok
    m = _polyhedron(seed)
    assert core3d.surface_area(m) ** 3 >= 36 * math.pi * core3d.volume(m) ** 2
    assert core3d.metrics(m).isoperimetric_ok


@SETTINGS
@given(seeds)
def test_inradius_bounds(seed):
    # the inscribed ball fits, so r <= 2A/L (2D) and r <= 3V/S (3D), equality when tangential
    p = _polygon(seed)
    assert incircle(p).radius <= 2 * core2d.signed_area(p) / core2d.perimeter(p) * (1 + 1e-12)
    m = _polyhedron(seed)
    assert insphere(m).radius <= 3 * core3d.volume(m) / core3d.surface_area(m) * (1 + 1e-12)


@SETTINGS
@given(st.one_of(seeds.map(_polygon), seeds.map(_polyhedron)))
def test_lp_certificates(shape):
    """Feasibility at the optimum (ball fits) and optimality (a slightly larger ball does not)."""
    ball = inscribed_ball(shape)
    cons = [e.constraint for e in elements(shape)]
    slack = np.array([c.distance(ball.center) for c in cons])
    assert slack.min() >= ball.radius * (1 - 1e-9)
    assert feasible_at_radius(cons, ball.radius * (1 - 1e-9))
    assert not feasible_at_radius(cons, ball.radius * (1 + 1e-6))


@SETTINGS
@given(seeds)
def test_tangential_squeeze(seed):
    rng = np.random.default_rng(seed)
    p, r, _ = random_tangent_polygon(rng)
    assert all(s.strict for s in squeeze_check(make_family(p), r))


def _unit(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


@SETTINGS
@given(st.floats(0, 2 * math.pi), st.floats(0.01, 50), st.floats(1e-3, 3.0).filter(lambda c: c < 3))
def test_scaled_line_distance(theta, d, c):
    n = np.array([math.cos(theta), math.sin(theta)])
    line = HalfPlaneConstraint(n, d)
    # direct geometry: the scaled line is n.x = c d, so distance is |c d - d|
    assert scaled_line_distance(line, c) == pytest.approx(abs(c * d - d), abs=1e-10)


@SETTINGS
@given(st.tuples(*[st.floats(-1, 1)] * 3).filter(lambda v: np.linalg.norm(v) > 0.1),
       st.floats(-50, -0.01) | st.floats(0.01, 50), st.floats(1e-3, 2.999))
def test_scaled_plane_distance(v, d, c):
    n = _unit(v)
    plane = HalfPlaneConstraint(n, d)
    point = c * d * n  # foot of the origin on the scaled plane
    assert scaled_plane_distance(plane, c) == pytest.approx(abs(plane.distance(point)), abs=1e-10)
