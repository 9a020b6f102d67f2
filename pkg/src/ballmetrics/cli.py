"""Command-line front end: distance queries, circle/sphere tracing with
SVG/CSV/OBJ output, inclusion-bound reports, and the verification and
conjecture harnesses.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 empty result.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import inclusions, verify
from .errors import BallMetricsError, DomainError, EmptyTraceError
from .geometry import as_point
from .inclusions import Direction
from .metrics import (DEFAULT_OPTS, MetricKind, SolveOpts, j_ball, jstar_ball,
                      rho_ball, s_ball)
from .render import RenderSpec, svg_document
from .spheres import (mesh_to_obj, revolve_3d, rho_ball_euclidean,
                      s_line_intersections, trace_j_circle, trace_jstar_circle,
                      trace_rho_circle, trace_s_circle, trace_to_csv)

_METRICS = {"s": MetricKind.S, "j": MetricKind.J, "jstar": MetricKind.JSTAR,
            "rho": MetricKind.RHO}

_PRESETS = {
    # published figure parameters: (metric, center, radii, note)
    "fig1": ("s", complex(0.3, 0.7), (0.5,), "axis witnesses marked"),
    "fig2": ("s", complex(0.0, 0.5), (0.5,), "bisection candidates at u=pi/5 marked"),
    "fig3": ("s", complex(0.6, 0.0), (0.1, 0.3, 0.5, 0.7), "nested radii"),
    "fig4": ("jstar", complex(0.3, 0.3), (0.3,), "seam circles dotted"),
    "fig5": ("s", complex(0.3, 0.45), (0.5,), "conjectured rho circles dotted"),
}


def _parse_coords(text: str):
    try:
        vals = tuple(float(p) for p in text.split(","))
    except ValueError:
        raise DomainError("cannot parse coordinates %r" % text) from None
    if len(vals) == 1:
        vals = (vals[0], 0.0)
    return vals


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=42,
                        help="seed for randomized checks (default 42)")
    common.add_argument("--tol", type=float, default=None,
                        help="override the command's default tolerance")
    common.add_argument("--out", type=str, default=None,
                        help="output file (or directory for verify)")
    common.add_argument("--format", choices=("svg", "csv"), default="svg",
                        help="trace output format")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    p = argparse.ArgumentParser(
        prog="ballmetrics",
        description="Hyperbolic-type metrics, metric circles, and "
                    "ball-inclusion bounds on the unit ball")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", parents=[common], help="evaluate a metric")
    d.add_argument("--metric", choices=sorted(_METRICS), required=True)
    d.add_argument("--x", required=True)
    d.add_argument("--y", required=True)

    t = sub.add_parser("trace", parents=[common], help="trace a metric circle")
    t.add_argument("--metric", choices=sorted(_METRICS), default="s")
    t.add_argument("--x", default=None)
    t.add_argument("--t", type=float, default=None, help="metric radius")
    t.add_argument("--n", type=int, default=10_000, help="sample count")
    t.add_argument("--eps", type=float, default=1e-5,
                   help="acceptance tolerance of the s-circle filter")
    t.add_argument("--radii", type=str, default=None,
                   help="comma list of radii for nested circles")
    t.add_argument("--preset", choices=sorted(_PRESETS), default=None)

    r = sub.add_parser("revolve", parents=[common],
                       help="revolve an s-circle into a 3D sphere mesh (OBJ)")
    r.add_argument("--x", required=True)
    r.add_argument("--t", type=float, required=True)
    r.add_argument("--n", type=int, default=1000)
    r.add_argument("--m", type=int, required=True, help="revolution steps")
    r.add_argument("--eps", type=float, default=1e-5)

    b = sub.add_parser("bounds", parents=[common],
                       help="inclusion-bound report for a metric pair")
    b.add_argument("--pair", required=True, choices=(
        "s-euclid", "jstar-euclid", "s-jstar", "s-j", "j-rho", "jstar-rho",
        "s-rho-necessary", "s-rho-sufficient", "s-rho-conjecture"))
    b.add_argument("--x", default="0,0")
    b.add_argument("--t", type=float, default=None, help="s-radius")
    b.add_argument("--k", type=float, default=None, help="j*-radius")
    b.add_argument("--K", type=float, default=None, help="j-radius")
    b.add_argument("--R", type=float, default=None, help="hyperbolic radius")
    b.add_argument("--r", type=float, default=None, help="Euclidean radius")
    b.add_argument("--convex", action="store_true",
                   help="use the convex-domain sharpening")

    v = sub.add_parser("verify", parents=[common],
                       help="run the theorem suite or the conjecture sweep")
    v.add_argument("what", choices=("suite", "conjecture"))
    v.add_argument("--grid", type=int, default=20)
    v.add_argument("--trace-n", type=int, default=2000)
    v.add_argument("--samples", type=int, default=600)
    v.add_argument("--eps", type=float, default=1e-5)
    v.add_argument("--inflate", type=float, default=0.0,
                   help="inflate every inner radius by this fraction")
    return p


def cmd_dist(args) -> int:
    kind = _METRICS[args.metric]
    x = _parse_coords(args.x)
    y = _parse_coords(args.y)
    if kind is MetricKind.S:
        opts = SolveOpts(refine_tol=args.tol) if args.tol else DEFAULT_OPTS
        sv = s_ball(x, y, opts)
        print("%.12f" % sv.value)
        print("argmin_z = %s" % ",".join("%.12f" % c for c in sv.argmin_z.coords))
        print("bisection_residual = %.3e" % sv.bisection_residual)
        return 0
    fn = {MetricKind.J: j_ball, MetricKind.JSTAR: jstar_ball,
          MetricKind.RHO: rho_ball}[kind]
    print("%.12f" % fn(x, y))
    return 0


def _trace_one(kind: MetricKind, xc: complex, radius: float, n: int, eps: float):
    if kind is MetricKind.S:
        return trace_s_circle(xc, radius, n=n, eps=eps)
    if kind is MetricKind.JSTAR:
        return trace_jstar_circle(xc, radius, n=n)
    if kind is MetricKind.J:
        return trace_j_circle(xc, radius, n=n)
    if kind is MetricKind.RHO:
        return trace_rho_circle(xc, radius, n=n)
    raise DomainError("cannot trace metric %r" % kind)


def cmd_trace(args) -> int:
    aux_circles = []
    witness_pts = []
    if args.preset:
        metric, xc, radii, _ = _PRESETS[args.preset]
        kind = _METRICS[metric]
    else:
        if args.x is None or (args.t is None and args.radii is None):
            raise DomainError("trace needs --x and --t (or --radii), or --preset")
        kind = _METRICS[args.metric]
        coords = _parse_coords(args.x)
        xc = complex(coords[0], coords[1])
        radii = (tuple(float(v) for v in args.radii.split(","))
                 if args.radii else (args.t,))
    eps = args.tol if args.tol is not None else args.eps
    traces = [_trace_one(kind, xc, rad, args.n, eps) for rad in radii]

    if args.preset == "fig1":
        y0, y1 = s_line_intersections(xc, radii[0])
        witness_pts = [complex(*y0.coords), complex(*y1.coords)]
    elif args.preset == "fig2":
        from .spheres import candidate_points
        cs = candidate_points(xc, radii[0], math.pi / 5.0)
        witness_pts = [complex(*y.coords) for _, y in cs.points]
        witness_pts.append(complex(*cs.z.coords))
    elif args.preset == "fig4":
        k = radii[0]
        absx = abs(xc)
        aux_circles = [(0j, absx), (xc, 2 * k * (1 - absx) / (1 - k))]
    elif args.preset == "fig5":
        t = radii[0]
        nec = inclusions.conjecture_bounds(xc, t, Direction.GIVEN_OTHER)
        for big_r in (nec.inner_radius, nec.outer_radius):
            ball = rho_ball_euclidean(xc, big_r)
            aux_circles.append((complex(ball.center[0], ball.center[1]),
                                ball.radius))

    if args.format == "csv":
        if len(traces) != 1:
            raise DomainError("csv output supports a single radius")
        payload = trace_to_csv(traces[0])
        default_name = "trace.csv"
    else:
        payload = svg_document([t.vertex_complex() for t in traces],
                               RenderSpec(), aux_circles=aux_circles,
                               points=witness_pts, center=xc)
        default_name = "trace.svg"
    out = Path(args.out) if args.out else Path(default_name)
    out.write_text(payload, newline="\n")
    print("wrote %s (%d curve%s, %d vertices)" % (
        out, len(traces), "s" if len(traces) != 1 else "",
        sum(len(t) for t in traces)))
    return 0


def _rotation_to(axis3: np.ndarray) -> np.ndarray:
    """Rotation matrix taking e1 to the given unit 3-vector."""
    e1 = np.array([1.0, 0.0, 0.0])
    v = np.cross(e1, axis3)
    c = float(np.dot(e1, axis3))
    s = float(np.linalg.norm(v))
    if s < 1e-15:
        return np.eye(3) if c > 0 else np.diag([-1.0, -1.0, 1.0])
    vx = np.array([[0, -v[2], v[1]], [v[2], 0, -v[0]], [-v[1], v[0], 0]])
    return np.eye(3) + vx + vx @ vx * ((1 - c) / (s * s))


def cmd_revolve(args) -> int:
    if args.n < 8:
        raise DomainError("need --n >= 8 trace samples")
    if args.m < 3:
        raise DomainError("need --m >= 3 revolution steps")
    coords = _parse_coords(args.x)
    vec = np.array(coords + (0.0,) * (3 - len(coords)))[:3]
    absx = float(np.linalg.norm(vec))
    if absx >= 1.0:
        raise DomainError("center must lie inside the unit ball")
    eps = args.tol if args.tol is not None else args.eps
    trace = trace_s_circle(complex(absx, 0.0), args.t, n=args.n, eps=eps)
    mesh = revolve_3d(trace, args.m)
    verts = mesh.vertices
    if absx > 0:
        verts = verts @ _rotation_to(vec / absx).T
    out = Path(args.out) if args.out else Path("sphere.obj")
    from .spheres import Mesh
    out.write_text(mesh_to_obj(Mesh(vertices=verts, faces=mesh.faces)),
                   newline="\n")
    print("wrote %s (%d vertices, %d faces)" % (out, len(verts), len(mesh.faces)))
    return 0


def _fmt_bound(name: str, value) -> str:
    if isinstance(value, bool):
        return "%s = %s" % (name, "true" if value else "false")
    if isinstance(value, float):
        return "%s = %.12g" % (name, value)
    return "%s = %s" % (name, value)


def cmd_bounds(args) -> int:
    x = _parse_coords(args.x)
    pair = args.pair
    conjectural = pair == "s-rho-conjecture"
    given, value = None, None
    for name in ("t", "k", "K", "R", "r"):
        v = getattr(args, name)
        if v is not None:
            if given is not None:
                raise DomainError("give exactly one of --t/--k/--K/--R/--r")
            given, value = name, v
    if given is None:
        raise DomainError("give the known radius via --t/--k/--K/--R/--r")

    if pair == "s-euclid":
        if given != "t":
            raise DomainError("s-euclid needs --t")
        bound = inclusions.s_vs_euclid(x, value)
    elif pair == "jstar-euclid":
        if given == "r":
            bound = inclusions.jstar_vs_euclid(x, value)
        elif given == "k":
            bound = inclusions.euclid_vs_jstar(x, value)
        else:
            raise DomainError("jstar-euclid needs --r (Euclidean) or --k (j*)")
    elif pair == "s-jstar":
        if given != "t":
            raise DomainError("s-jstar needs --t")
        bound = inclusions.s_vs_jstar(value, args.convex)
    elif pair == "s-j":
        if given != "t":
            raise DomainError("s-j needs --t")
        bound = inclusions.s_vs_j(value, args.convex)
    elif pair == "j-rho":
        if given == "R":
            bound = inclusions.j_vs_rho(x, value, Direction.GIVEN_RHO)
        elif given == "K":
            bound = inclusions.j_vs_rho(x, value, Direction.GIVEN_OTHER)
        else:
            raise DomainError("j-rho needs --R or --K")
    elif pair == "jstar-rho":
        if given == "R":
            bound = inclusions.jstar_vs_rho(x, value, Direction.GIVEN_RHO)
        elif given == "k":
            bound = inclusions.jstar_vs_rho(x, value, Direction.GIVEN_OTHER)
        else:
            raise DomainError("jstar-rho needs --R or --k")
    else:
        fn = {"s-rho-necessary": inclusions.s_rho_necessary,
              "s-rho-sufficient": inclusions.s_rho_sufficient,
              "s-rho-conjecture": inclusions.conjecture_bounds}[pair]
        if given == "R":
            bound = fn(x, value, Direction.GIVEN_RHO)
        elif given == "t":
            bound = fn(x, value, Direction.GIVEN_OTHER)
        else:
            raise DomainError("%s needs --R or --t" % pair)

    lines = [_fmt_bound("pair", pair),
             _fmt_bound("x", ",".join("%.12g" % c for c in x)),
             _fmt_bound("given_%s" % given, float(value)),
             _fmt_bound("inner", bound.inner_radius),
             _fmt_bound("outer", bound.outer_radius),
             _fmt_bound("inner_sharp", bound.inner_sharp),
             _fmt_bound("outer_sharp", bound.outer_sharp),
             _fmt_bound("conjectural", conjectural)]
    for i, w in enumerate(bound.witnesses):
        lines.append(_fmt_bound("witness[%d]" % i,
                                ",".join("%.12g" % c for c in w.coords)))
    text = "\n".join(lines)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n", newline="\n")
    return 0


def cmd_verify(args) -> int:
    outdir = Path(args.out) if args.out else Path("reports")
    outdir.mkdir(parents=True, exist_ok=True)
    if args.what == "suite":
        reports = verify.verify_theorem_suite(samples=args.samples,
                                              inflate=args.inflate,
                                              seed=args.seed, eps=args.eps)
        text = verify.render_reports_text(reports)
        meta = {"samples": args.samples, "inflate": args.inflate,
                "seed": args.seed, "eps": args.eps}
        (outdir / "suite.txt").write_text(text, newline="\n")
        (outdir / "suite.json").write_text(verify.reports_to_json(reports, meta),
                                           newline="\n")
        sys.stdout.write(text)
        return 0 if all(r.passed for r in reports) else 1
    tol = args.tol if args.tol is not None else 1e-3
    report = verify.verify_conjecture(grid_n=args.grid, trace_n=args.trace_n,
                                      eps=args.eps)
    text = verify.render_conjecture_text(report)
    (outdir / "conjecture.txt").write_text(text, newline="\n")
    (outdir / "conjecture.json").write_text(verify.conjecture_to_json(report),
                                            newline="\n")
    sys.stdout.write(text)
    ok = report.max_deviation <= tol and report.origin_max_deviation <= 1e-9
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"dist": cmd_dist, "trace": cmd_trace, "revolve": cmd_revolve,
                "bounds": cmd_bounds, "verify": cmd_verify}
    try:
        return handlers[args.command](args)
    except EmptyTraceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except BallMetricsError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
