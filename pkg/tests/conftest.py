import math

import numpy as np
import pytest

from inradius.core2d import validate_polygon
from inradius.core3d import validate_polyhedron

SQRT3 = math.sqrt(3)

SQUARE = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
# inradius 1: half base sqrt(3), height 3, incenter at the origin
EQUILATERAL = [(SQRT3, -1), (0, 2), (-SQRT3, -1)]
RIGHT_345 = [(0, 0), (4, 0), (0, 3)]
RECT_4x2 = [(0, 0), (4, 0), (4, 2), (0, 2)]
L_SHAPE = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


def box(a, b, c, origin=(0.0, 0.0, 0.0)):
    """Axis-aligned a x b x c box as (vertices, facets)."""
    x0, y0, z0 = origin
    v = [(x0 + i * a, y0 + j * b, z0 + k * c) for k in (0, 1) for j in (0, 1) for i in (0, 1)]
    # index = i + 2 j + 4 k
    f = [
        (0, 2, 3, 1), (4, 5, 7, 6),  # z
        (0, 1, 5, 4), (2, 6, 7, 3),  # y
        (0, 4, 6, 2), (1, 3, 7, 5),  # x
    ]
    return v, f


@pytest.fixture
def square():
    return validate_polygon(SQUARE)


@pytest.fixture
def triangle():
    return validate_polygon(EQUILATERAL)


@pytest.fixture
def cube():
    v, f = box(2, 2, 2, (-1, -1, -1))
    return validate_polyhedron(v, f)


@pytest.fixture
def rng():
    return np.random.default_rng(20231)
