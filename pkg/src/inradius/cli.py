"""Command-line front end.

Subcommands::

    inradius analyze2d POLYGON.json   metrics, incircle, tangency, then the
                                      derivative check or the erosion fallback
    inradius analyze3d MESH.{obj,json} metrics, insphere, tangency, derivative check
    inradius ngon-table               dA/dr versus L for regular n-gons
    inradius generate KIND OUT        write an n-gon, cube or tetrahedron file
    inradius erode POLYGON.json       erosion table for a convex polygon

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
import enum
import json
import logging
from pathlib import Path
import sys


from . import core2d, core3d, shapeio
from .closedform import circle_sphere_metrics, named_solid, ngon_metrics, regular_ngon
from .derivcheck import DEFAULT_H_FACTOR, DerivativeReport, make_family, verify_theorem
from .erosion import ErosionTable, erosion_derivative
from .errors import BadRange, GeometryError, LPError, NotConvex, UnknownKind
from .inscribe import InscribedBall, TangencyReport, incircle, insphere, tangency_report

log = logging.getLogger("inradius")

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

FORMATS_HELP = """\
file formats:
  polygon JSON   {"vertices": [[x, y], ...]}  vertices in order (either orientation)
  mesh JSON      {"vertices": [[x, y, z], ...], "facets": [[i, j, k, ...], ...]}
                 facet indices are 0-based
  mesh OBJ       only "v x y z" and "f i j k ..." records, 1-based indices,
                 no normals, textures or i/j/k references; '#' starts a comment

Coordinates are expected to be O(1)..O(1e3): vertices closer than 1e-9
(absolute) are treated as coincident and collinearity is judged at the same
tolerance.
"""


class Verdict(str, enum.Enum):
    THEOREM_HOLDS = "TangentialTheoremHolds"
    EROSION_USED = "NonTangentialErosionUsed"
    NOT_CONVEX = "NotConvexSkipped"
    NO_FALLBACK = "NonTangentialNoFallback"


@dataclass
class AnalysisReport:
    input: dict
    metrics: dict
    verdict: Verdict
    ball: InscribedBall | None = None
    tangency: TangencyReport | None = None
    derivative: DerivativeReport | None = None
    erosion: ErosionTable | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        ball = None
        if self.ball is not None:
            ball = {
                "center": self.ball.center.tolist(),
                "radius": self.ball.radius,
                "active_indices": list(self.ball.active_indices),
                "center_unique": self.ball.center_unique,
                "face_center": self.ball.face_center.tolist(),
            }
        tangency = None
        if self.tangency is not None:
            tangency = {
                "statuses": [s.value for s in self.tangency.statuses],
                "is_tangential": self.tangency.is_tangential,
                "min_gap": self.tangency.min_gap,
                "members": [list(m) for m in self.tangency.members],
            }
        return {
            "input": self.input,
            "metrics": self.metrics,
            "ball": ball,
            "tangency": tangency,
            "derivative": None if self.derivative is None else self.derivative.to_dict(),
            "erosion": None if self.erosion is None else self.erosion.to_dict(),
            "verdict": self.verdict.value,
        }


def analyze_polygon(p: core2d.Polygon2, path: str = "<memory>", h_step: float = DEFAULT_H_FACTOR,
                    eps0: float | None = None, levels: int = 4) -> AnalysisReport:
    m = core2d.metrics(p)
    report = AnalysisReport(
        input={"path": path, "vertex_count": len(p), "edge_count": len(p)},
        metrics={"area": m.area, "perimeter": m.perimeter},
        verdict=Verdict.NOT_CONVEX,
    )
    try:
        ball = incircle(p)
    except NotConvex as exc:
        report.notes.append(str(exc))
        return report
    report.ball = ball
    report.tangency = tangency_report(p, ball)
    if report.tangency.is_tangential:
        fam = make_family(p, ball)
        report.derivative = verify_theorem(fam, ball.radius, h_step * ball.radius)
        report.verdict = Verdict.THEOREM_HOLDS
    else:
        if eps0 is None:
            eps0 = ball.radius / 8
        report.erosion = erosion_derivative(p, eps0, levels)
        report.verdict = Verdict.EROSION_USED
        report.notes.append("erosion restricted to convex polygons")
    return report


def analyze_polyhedron(p: core3d.Polyhedron3, path: str = "<memory>",
                       h_step: float = DEFAULT_H_FACTOR) -> AnalysisReport:
    m = core3d.metrics(p)
    report = AnalysisReport(
        input={"path": path, "vertex_count": len(p.vertices), "facet_count": len(p.facets)},
        metrics={"volume": m.volume, "surface_area": m.surface_area},
        verdict=Verdict.NOT_CONVEX,
    )
    try:
        ball = insphere(p)
    except NotConvex as exc:
        report.notes.append(str(exc))
        return report
    report.ball = ball
    report.tangency = tangency_report(p, ball)
    if report.tangency.is_tangential:
        fam = make_family(p, ball)
        report.derivative = verify_theorem(fam, ball.radius, h_step * ball.radius)
        report.verdict = Verdict.THEOREM_HOLDS
    else:
        report.verdict = Verdict.NO_FALLBACK
        report.notes.append("no inscribed sphere tangent to every facet; no 3D fallback is provided")
    return report


def passed(report: AnalysisReport, tol: float) -> bool:
    if report.derivative is not None:
        d = report.derivative
        return d.residual <= tol and d.ratio_identity_residual <= tol and d.squeeze_ok
    if report.erosion is not None:
        return report.erosion.relative_error <= tol
    return True


# -- output -------------------------------------------------------------------


def g(x) -> str:
    return f"{x:.12g}"


def _vec(v) -> str:
    return "(" + ", ".join(g(x) for x in v) + ")"


def render(report: AnalysisReport) -> str:
    lines = [f"input     {report.input['path']}"]
    lines += [f"{k:<17} {g(v)}" for k, v in report.metrics.items()]
    if report.ball is not None:
        b = report.ball
        lines.append(f"inradius          {g(b.radius)}")
        lines.append(f"center            {_vec(b.center)}" + ("" if b.center_unique else "  (not unique)"))
    if report.tangency is not None:
        t = report.tangency
        counts = ", ".join(f"{s.value} {t.statuses.count(s)}" for s in dict.fromkeys(t.statuses))
        lines.append(f"tangency          {counts}; tangential: {t.is_tangential}")
    if report.derivative is not None:
        d = report.derivative
        lines += [
            f"measure           {g(d.measure)}",
            f"boundary measure  {g(d.boundary_measure)}",
            f"fd derivative     {g(d.fd_estimate)}",
            f"residual          {g(d.residual)}",
            f"ratio residual    {g(d.ratio_identity_residual)}  (derived cross-check)",
            f"squeeze strict    {d.squeeze_ok}",
        ]
    if report.erosion is not None:
        lines.append(render_erosion(report.erosion))
    lines += [f"note: {n}" for n in report.notes]
    lines.append(f"verdict           {report.verdict.value}")
    return "\n".join(lines)


def render_erosion(t: ErosionTable) -> str:
    lines = [f"{'epsilon':>20} {'inner_area':>20} {'quotient':>20}"]
    lines += [f"{g(r.epsilon):>20} {g(r.inner_area):>20} {g(r.quotient):>20}" for r in t.rows]
    lines.append(f"extrapolated      {g(t.extrapolated_limit)}")
    lines.append(f"exact perimeter   {g(t.exact_perimeter)}")
    lines.append(f"relative error    {g(t.relative_error)}")
    return "\n".join(lines)


def _dump(obj, path) -> None:
    if path:
        Path(path).write_text(json.dumps(obj, indent=2))


# -- subcommands --------------------------------------------------------------


def cmd_analyze2d(args) -> int:
    p = shapeio.read_polygon(args.path)
    report = analyze_polygon(p, str(args.path), args.h_step, args.eps0, args.levels)
    print(render(report))
    _dump(report.to_dict(), args.json)
    if args.csv and report.erosion is not None:
        Path(args.csv).write_text(report.erosion.to_csv())
    if report.verdict is Verdict.NOT_CONVEX:
        log.warning("polygon is not convex; inscribed-circle analysis skipped")
    return EXIT_OK if passed(report, args.tol) else EXIT_VERIFY


def cmd_analyze3d(args) -> int:
    p = shapeio.read_mesh(args.path)
    report = analyze_polyhedron(p, str(args.path), args.h_step)
    print(render(report))
    _dump(report.to_dict(), args.json)
    if report.verdict is Verdict.NOT_CONVEX:
        log.warning("polyhedron is not convex; inscribed-sphere analysis skipped")
    return EXIT_OK if passed(report, args.tol) else EXIT_VERIFY


def ngon_table(n_min: int, n_max: int, r: float, h_step: float = DEFAULT_H_FACTOR) -> list[dict]:
    """Per-n rows of closed-form A and L, finite-difference dA/dr on the built polygon, residual."""
    if not 3 <= n_min <= n_max:
        raise BadRange(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    h = h_step * r
    rows = []
    for n in range(n_min, n_max + 1):
        m = ngon_metrics(n, r)
        fd = (core2d.signed_area(regular_ngon(n, r + h)[1]) - core2d.signed_area(regular_ngon(n, r - h)[1])) / (2 * h)
        rows.append({"n": n, "area": m.area, "length": m.length, "fd": fd, "residual": abs(fd - m.length) / m.length})
    return rows


def cmd_ngon_table(args) -> int:
    rows = ngon_table(args.n_min, args.n_max, args.r, args.h_step)
    print(f"{'n':>6} {'A(n,r)':>20} {'L(n,r)':>20} {'fd dA/dr':>20} {'residual':>12}")
    for row in rows:
        print(f"{row['n']:>6} {g(row['area']):>20} {g(row['length']):>20} {g(row['fd']):>20} {row['residual']:>12.3g}")
    circle = circle_sphere_metrics(args.r)
    print(f"{'circle':>6} {g(circle.area):>20} {g(circle.circumference):>20}")
    _dump({"rows": rows, "circle": {"area": circle.area, "circumference": circle.circumference}}, args.json)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("n,area,length,fd,residual\n")
            for row in rows:
                fh.write(",".join(repr(row[k]) for k in ("n", "area", "length", "fd", "residual")) + "\n")
    return EXIT_OK if all(row["residual"] <= args.tol for row in rows) else EXIT_VERIFY


GENERATE_KINDS = ("ngon", "cube", "tetra")


def cmd_generate(args) -> int:
    if args.kind == "ngon":
        if args.n is None:
            raise BadRange("generate ngon needs --n")
        _, p = regular_ngon(args.n, args.r)
        shapeio.write_polygon(p, args.out)
        print(f"wrote {args.n}-gon with inradius {g(args.r)} to {args.out}")
    elif args.kind in ("cube", "tetra"):
        kind = "cube" if args.kind == "cube" else "regular_tetrahedron"
        _, mesh = named_solid(kind, args.r)
        shapeio.write_mesh(mesh, args.out)
        print(f"wrote {kind} with inradius {g(args.r)} to {args.out}")
    else:
        raise UnknownKind(f"unknown kind {args.kind!r}; expected one of {GENERATE_KINDS}")
    return EXIT_OK


def cmd_erode(args) -> int:
    p = shapeio.read_polygon(args.path)
    eps0 = args.eps0 if args.eps0 is not None else incircle(p).radius / 8
    table = erosion_derivative(p, eps0, args.levels)
    print(render_erosion(table))
    _dump(table.to_dict(), args.json)
    if args.csv:
        Path(args.csv).write_text(table.to_csv())
    return EXIT_OK if table.relative_error <= args.tol else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inradius",
        description="Check that d(area)/d(inradius) equals perimeter for tangential shapes.",
        epilog=FORMATS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, erosion=True):
        sp.add_argument("--h-step", type=float, default=DEFAULT_H_FACTOR,
                        help="finite-difference step as a fraction of r (default 1e-3)")
        sp.add_argument("--tol", type=float, default=1e-6, help="acceptance residual (default 1e-6)")
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here")
        if erosion:
            sp.add_argument("--eps0", type=float, help="first erosion epsilon (default r/8)")
            sp.add_argument("--levels", type=int, default=4, help="erosion halvings (default 4)")
            sp.add_argument("--csv", metavar="PATH", help="write the erosion table as CSV")

    fmt = dict(epilog=FORMATS_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sp = sub.add_parser("analyze2d", help="analyze a polygon file", **fmt)
    sp.add_argument("path")
    common(sp)
    sp.set_defaults(func=cmd_analyze2d)

    sp = sub.add_parser("analyze3d", help="analyze a mesh file (OBJ subset or JSON)", **fmt)
    sp.add_argument("path")
    common(sp, erosion=False)
    sp.set_defaults(func=cmd_analyze3d)

    sp = sub.add_parser("ngon-table", help="regular n-gon derivative table")
    sp.add_argument("--n-min", type=int, default=3)
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--r", type=float, default=1.0)
    sp.add_argument("--h-step", type=float, default=DEFAULT_H_FACTOR)
    sp.add_argument("--tol", type=float, default=1e-6)
    sp.add_argument("--json", metavar="PATH")
    sp.add_argument("--csv", metavar="PATH")
    sp.set_defaults(func=cmd_ngon_table)

    sp = sub.add_parser("generate", help="write a generated shape file", **fmt)
    sp.add_argument("kind", choices=GENERATE_KINDS)
    sp.add_argument("out", help="output path; meshes ending in .obj are written as OBJ, others as JSON")
    sp.add_argument("--r", type=float, default=1.0, help="inradius (default 1)")
    sp.add_argument("--n", type=int, help="number of sides (ngon only)")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("erode", help="erosion table for a convex polygon file", **fmt)
    sp.add_argument("path")
    sp.add_argument("--eps0", type=float, help="first epsilon (default r/8)")
    sp.add_argument("--levels", type=int, default=4)
    sp.add_argument("--tol", type=float, default=1e-6)
    sp.add_argument("--json", metavar="PATH")
    sp.add_argument("--csv", metavar="PATH")
    sp.set_defaults(func=cmd_erode)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except LPError as exc:
        log.error("inscribed ball computation failed: %s", exc)
        return EXIT_VERIFY
    except GeometryError as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
