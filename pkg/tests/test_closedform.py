import math

import numpy as np
import pytest

from inradius.closedform import circle_sphere_metrics, named_solid, ngon_metrics, regular_ngon
from inradius.core2d import perimeter, signed_area
from inradius.core3d import surface_area, volume
from inradius.errors import BadN, NonPositiveRadius, UnknownKind
from inradius.inscribe import incircle, insphere, tangency_report

PI = math.pi
SQRT3 = math.sqrt(3)


def test_circle_sphere_metrics():
    assert circle_sphere_metrics(1) == pytest.approx((PI, 2 * PI, 4 * PI / 3, 4 * PI))
    assert circle_sphere_metrics(2) == pytest.approx((4 * PI, 4 * PI, 32 * PI / 3, 16 * PI))
    with pytest.raises(NonPositiveRadius):
        circle_sphere_metrics(0)


@pytest.mark.parametrize("r", [0.3, 1.0, 7.0])
def test_circle_difference_quotients(r):
    h = 1e-3
    area = lambda x: circle_sphere_metrics(x).area
    assert (area(r + h) - area(r - h)) / (2 * h) == pytest.approx(2 * PI * r, rel=1e-12)


@pytest.mark.parametrize(
    "n, area, length",
    [(4, 4, 8), (3, 3 * SQRT3, 6 * SQRT3), (6, 2 * SQRT3, 4 * SQRT3)],
)
def test_regular_ngon_unit_inradius(n, area, length):
    m, p = regular_ngon(n, 1.0)
    assert m.area == pytest.approx(area, rel=1e-14)
    assert m.length == pytest.approx(length, rel=1e-14)
    # oracle: shoelace and edge sum on the constructed polygon
    assert signed_area(p) == pytest.approx(area, rel=1e-14)
    assert perimeter(p) == pytest.approx(length, rel=1e-14)


def test_square_vertex_convention():
    _, p = regular_ngon(4, 1.0)
    np.testing.assert_allclose(p.vertices, [(1, 1), (-1, 1), (-1, -1), (1, -1)], atol=1e-15)


def test_ngon_errors():
    with pytest.raises(BadN):
        regular_ngon(2, 1.0)
    with pytest.raises(BadN):
        ngon_metrics(3.5, 1.0)
    with pytest.raises(NonPositiveRadius):
        regular_ngon(5, -1.0)


@pytest.mark.parametrize("n", range(3, 65))
@pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
def test_ngon_identity_and_construction(n, r):
    m, p = regular_ngon(n, r)
    assert m.length * r / 2 == pytest.approx(m.area, rel=1e-14)
    assert signed_area(p) == pytest.approx(m.area, rel=1e-10)
    assert perimeter(p) == pytest.approx(m.length, rel=1e-10)
    h = 1e-3 * r
    fd = (signed_area(regular_ngon(n, r + h)[1]) - signed_area(regular_ngon(n, r - h)[1])) / (2 * h)
    assert abs(fd - m.length) <= 1e-9 * m.length


def test_circle_limit_from_above():
    areas = [ngon_metrics(n, 1.0).area for n in (3, 4, 8, 64, 512, 4096)]
    assert all(a > b for a, b in zip(areas, areas[1:]))
    assert all(a > PI for a in areas)
    assert abs(ngon_metrics(4096, 1.0).area - PI) <= 1e-5


@pytest.mark.parametrize("n", [3, 5, 8, 17])
def test_ngon_incircle_recovered(n):
    _, p = regular_ngon(n, 1.7)
    ball = incircle(p)
    assert ball.radius == pytest.approx(1.7, abs=1e-9)
    assert tangency_report(p, ball).is_tangential


def test_cube_solid():
    m, mesh = named_solid("cube", 1.0)
    assert (m.volume, m.surface_area) == (8, 24)
    assert (volume(mesh), surface_area(mesh)) == (8, 24)
    m, mesh = named_solid("cube", 0.5)
    assert (m.volume, m.surface_area) == (1, 6)
    assert (volume(mesh), surface_area(mesh)) == (1, 6)


def test_tetrahedron_goldens_after_mesh_oracle():
    _, mesh = named_solid("regular_tetrahedron", 1.0)
    v, s = volume(mesh), surface_area(mesh)
    # oracle first: sigma r / 3 = V and dV/dr = sigma on the mesh family
    assert s * 1.0 / 3 == pytest.approx(v, rel=1e-10)
    h = 1e-3
    vol = lambda r: volume(named_solid("regular_tetrahedron", r)[1])
    d1 = (vol(1 + h) - vol(1 - h)) / (2 * h)
    d2 = (vol(1 + h / 2) - vol(1 - h / 2)) / h
    assert (4 * d2 - d1) / 3 == pytest.approx(s, rel=1e-9)
    # only now the closed-form goldens
    m, _ = named_solid("regular_tetrahedron", 1.0)
    assert v == pytest.approx(8 * SQRT3, rel=1e-12) and m.volume == pytest.approx(v, rel=1e-12)
    assert s == pytest.approx(24 * SQRT3, rel=1e-12) and m.surface_area == pytest.approx(s, rel=1e-12)


@pytest.mark.parametrize("kind", ["cube", "regular_tetrahedron"])
@pytest.mark.parametrize("r", [0.5, 1.0, 3.0])
def test_solid_mesh_agreement_and_insphere(kind, r):
    m, mesh = named_solid(kind, r)
    assert volume(mesh) == pytest.approx(m.volume, rel=1e-10)
    assert surface_area(mesh) == pytest.approx(m.surface_area, rel=1e-10)
    assert m.surface_area * r / 3 == pytest.approx(m.volume, rel=1e-14)
    ball = insphere(mesh)
    assert ball.radius == pytest.approx(r, abs=1e-9)
    assert tangency_report(mesh, ball).is_tangential


def test_unknown_solid():
    with pytest.raises(UnknownKind):
        named_solid("octahedron", 1.0)
