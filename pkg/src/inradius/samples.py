"""Random shape generators for fuzzing.

Every generator takes a ``numpy.random.Generator`` so corpora are
reproducible from a seed.  Tangential shapes are built from lines/planes
tangent to a known ball, so their inradius and center are known exactly
without any LP.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .core2d import Polygon2, validate_polygon
from .core3d import Polyhedron3, validate_polyhedron


def tangent_polygon(normal_angles, r: float = 1.0, center=(0.0, 0.0)) -> Polygon2:
    """Polygon whose edges lie on the tangent lines at the given outward-normal angles.

    Consecutive angles (sorted, cyclic) must differ by less than pi.
    """
    th = np.sort(np.asarray(normal_angles, dtype=float))
    nxt = np.roll(th, -1)
    nxt[-1] += 2 * np.pi
    half = (nxt - th) / 2
    mid = th + half
    dist = r / np.cos(half)
    v = np.column_stack([dist * np.cos(mid), dist * np.sin(mid)]) + np.asarray(center, dtype=float)
    return validate_polygon(v)


def random_tangent_polygon(rng: np.random.Generator, k: int | None = None):
    """Random tangential polygon; returns ``(polygon, r, center)``."""
    if k is None:
        k = int(rng.integers(3, 13))
    while True:
        gaps = rng.uniform(0.2, 1.0, size=k)
        gaps *= 2 * np.pi / gaps.sum()
        if gaps.max() < 0.85 * np.pi:
            break
    start = rng.uniform(0, 2 * np.pi)
    angles = start + np.concatenate([[0.0], np.cumsum(gaps[:-1])])
    r = float(rng.uniform(0.2, 5.0))
    center = rng.uniform(-10, 10, size=2)
    return tangent_polygon(angles, r, center), r, center


def random_triangle(rng: np.random.Generator) -> Polygon2:
    while True:
        v = rng.uniform(-5, 5, size=(3, 2))
        a = np.linalg.norm(v - np.roll(v, 1, axis=0), axis=1)
        e1, e2 = v[1] - v[0], v[2] - v[0]
        area = abs(e1[0] * e2[1] - e1[1] * e2[0]) / 2
        # reject slivers: inradius at least 2% of the longest side
        if 2 * area / a.sum() > 0.02 * a.max():
            return validate_polygon(v)


def random_convex_polygon(rng: np.random.Generator, k: int | None = None) -> Polygon2:
    """Vertices on a random rotated ellipse, so the polygon is convex but rarely tangential."""
    if k is None:
        k = int(rng.integers(3, 13))
    while True:
        gaps = rng.uniform(0.3, 1.0, size=k)
        gaps *= 2 * np.pi / gaps.sum()
        if gaps.max() < 0.9 * np.pi:
            break
    t = rng.uniform(0, 2 * np.pi) + np.concatenate([[0.0], np.cumsum(gaps[:-1])])
    a, b = rng.uniform(0.5, 5.0, size=2)
    phi = rng.uniform(0, np.pi)
    rot = np.array([[np.cos(phi), -np.sin(phi)], [np.sin(phi), np.cos(phi)]])
    v = np.column_stack([a * np.cos(t), b * np.sin(t)]) @ rot.T + rng.uniform(-10, 10, size=2)
    return validate_polygon(v)


def polyhedron_from_planes(normals, offsets, tol: float = 1e-9) -> Polyhedron3:
    """Mesh of ``{x : n_i . x <= d_i}`` for outward unit normals (bounded, simple polytope).

    Brute-force vertex enumeration over plane triples; meant for a few dozen planes.
    """
    N = np.asarray(normals, dtype=float)
    d = np.asarray(offsets, dtype=float)
    pts = []
    for i, j, k in combinations(range(len(N)), 3):
        M = N[[i, j, k]]
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        x = np.linalg.solve(M, d[[i, j, k]])
        if np.all(N @ x <= d + tol):
            if not any(np.linalg.norm(x - q) <= 1e3 * tol for q in pts):
                pts.append(x)
    V = np.array(pts)
    facets = []
    for i in range(len(N)):
        on = np.nonzero(np.abs(V @ N[i] - d[i]) <= 1e3 * tol)[0]
        if len(on) < 3:
            continue
        c = V[on].mean(axis=0)
        e1 = V[on[0]] - c
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(N[i], e1)
        ang = np.arctan2((V[on] - c) @ e2, (V[on] - c) @ e1)
        facets.append([int(on[t]) for t in np.argsort(ang)])
    return validate_polyhedron(V, facets)


def _random_rotation(rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] *= -1
    return q


def random_tangential_polyhedron(rng: np.random.Generator, k: int | None = None):
    """Polytope cut by ``k`` planes tangent to a sphere; returns ``(mesh, r, center)``.

    Four of the normals are a rotated regular tetrahedron, which keeps the
    polytope bounded; every tangent plane then supports a genuine facet.
    """
    if k is None:
        k = int(rng.integers(4, 13))
    tetra = np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]) / np.sqrt(3)
    while True:
        extra = rng.normal(size=(k - 4, 3))
        N = np.vstack([tetra @ _random_rotation(rng).T, extra])
        N /= np.linalg.norm(N, axis=1)[:, None]
        if k > 4 and np.max(N @ N.T - 2 * np.eye(k)) > 0.995:
            continue
        r = float(rng.uniform(0.2, 5.0))
        center = rng.uniform(-10, 10, size=3)
        try:
            mesh = polyhedron_from_planes(N, np.full(k, r))
        except ValueError:
            continue
        # insist on a simple polytope (three facets per vertex), well separated vertices
        V = mesh.vertices
        dmin = min(np.linalg.norm(V[i] - V[j]) for i, j in combinations(range(len(V)), 2))
        if len(mesh.facets) == k and len(V) == 2 * k - 4 and dmin > 1e-3 * r and np.max(np.abs(V)) < 50 * r:
            return mesh.translated(center), r, center


def random_tetrahedron(rng: np.random.Generator) -> Polyhedron3:
    while True:
        v = rng.uniform(-5, 5, size=(4, 3))
        vol = abs(np.linalg.det(v[1:] - v[0])) / 6
        faces = [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)]
        area = sum(np.linalg.norm(np.cross(v[b] - v[a], v[c] - v[a])) / 2 for a, b, c in faces)
        r = 3 * vol / area
        diam = max(np.linalg.norm(v[i] - v[j]) for i, j in combinations(range(4), 2))
        if r > 0.03 * diam:
            # orientation of each facet is fixed consistently; validation flips if inward
            return validate_polyhedron(v, faces)
