"""Reading and writing shape files.

Polygon (JSON)::

    {"vertices": [[x, y], ...]}

Mesh (JSON), 0-based facet indices::

    {"vertices": [[x, y, z], ...], "facets": [[i, j, k, ...], ...]}

Mesh (OBJ subset): ``v x y z`` and ``f i j k ...`` records only, 1-based
indices, ``#`` comments and blank lines ignored.  Anything else (normals,
texture coordinates, ``f 1/2/3`` references, groups) is rejected.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .core2d import Polygon2, validate_polygon
from .core3d import Polyhedron3, validate_polyhedron
from .errors import GeometryError


class ShapeFileError(GeometryError):
    """Malformed shape file; the message carries ``path:line:col`` when known."""


def _load_json(text: str, source: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ShapeFileError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ShapeFileError(f"{source}: expected an object with a 'vertices' field")
    return doc


def _coords(rows, width: int, source: str) -> np.ndarray:
    if not isinstance(rows, list):
        raise ShapeFileError(f"{source}: 'vertices' must be an array")
    for i, row in enumerate(rows):
        if (not isinstance(row, list) or len(row) != width
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in row)):
            raise ShapeFileError(f"{source}: vertex {i} must be an array of {width} numbers")
    return np.array(rows, dtype=float).reshape(-1, width)


def parse_polygon_json(text: str, source: str = "<string>") -> Polygon2:
    doc = _load_json(text, source)
    return validate_polygon(_coords(doc["vertices"], 2, source))


def parse_mesh_json(text: str, source: str = "<string>") -> Polyhedron3:
    doc = _load_json(text, source)
    v = _coords(doc["vertices"], 3, source)
    facets = doc.get("facets")
    if not isinstance(facets, list):
        raise ShapeFileError(f"{source}: mesh needs a 'facets' array")
    for k, f in enumerate(facets):
        if not isinstance(f, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in f):
            raise ShapeFileError(f"{source}: facet {k} must be an array of integer indices")
    return validate_polyhedron(v, facets)


def parse_obj(text: str, source: str = "<string>") -> Polyhedron3:
    verts, facets = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tag, *fields = body.split()
        where = f"{source}:{lineno}"
        if tag == "v":
            if len(fields) != 3:
                raise ShapeFileError(f"{where}: 'v' needs exactly 3 coordinates")
            try:
                verts.append([float(x) for x in fields])
            except ValueError as exc:
                raise ShapeFileError(f"{where}: bad coordinate ({exc})") from exc
        elif tag == "f":
            if len(fields) < 3:
                raise ShapeFileError(f"{where}: 'f' needs at least 3 indices")
            try:
                idx = [int(x) for x in fields]
            except ValueError as exc:
                raise ShapeFileError(f"{where}: facet indices must be plain integers ({exc})") from exc
            if min(idx) < 1:
                raise ShapeFileError(f"{where}: OBJ indices are 1-based and positive")
            facets.append([i - 1 for i in idx])
        else:
            raise ShapeFileError(f"{where}: unsupported record {tag!r} (only 'v' and 'f')")
    if not verts:
        raise ShapeFileError(f"{source}: no vertices")
    return validate_polyhedron(np.array(verts), facets)


def read_polygon(path) -> Polygon2:
    path = Path(path)
    return parse_polygon_json(path.read_text(), str(path))


def read_mesh(path) -> Polyhedron3:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".obj":
        return parse_obj(text, str(path))
    return parse_mesh_json(text, str(path))


def polygon_to_json(p: Polygon2) -> str:
    return json.dumps({"vertices": p.vertices.tolist()})


def mesh_to_json(p: Polyhedron3) -> str:
    return json.dumps({"vertices": p.vertices.tolist(), "facets": [list(f) for f in p.facets]})


def mesh_to_obj(p: Polyhedron3) -> str:
    lines = [f"v {x!r} {y!r} {z!r}" for x, y, z in p.vertices.tolist()]
    lines += ["f " + " ".join(str(i + 1) for i in f) for f in p.facets]
    return "\n".join(lines) + "\n"


def write_mesh(p: Polyhedron3, path) -> None:
    path = Path(path)
    path.write_text(mesh_to_obj(p) if path.suffix.lower() == ".obj" else mesh_to_json(p))


def write_polygon(p: Polygon2, path) -> None:
    Path(path).write_text(polygon_to_json(p))
