"""Brute-force oracles and sampling harnesses that validate every
inclusion statement numerically, plus the grid sweep reproducing the
computer tests behind the sharp s/hyperbolic sandwich conjecture.

Claims are checked one-sidedly: the inner ball's sphere is sampled and
the outer metric may not exceed the outer radius by more than the stated
tolerance.  Sharpness is probed by the inverse experiment: inflating the
inner radius by 1 percent must break every claim marked if-and-only-if.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .geometry import PointB, PointLike, as_point
from .inclusions import (Direction, conjecture_bounds, conjecture_l,
                         euclid_vs_jstar, j_vs_rho, jstar_vs_euclid,
                         jstar_vs_rho, rho_witness_points, s_enclosing_ball,
                         s_rho_necessary, s_rho_origin, s_rho_sufficient,
                         s_vs_euclid, s_vs_j, s_vs_jstar)
from .metrics import (DEFAULT_OPTS, MetricKind, SolveOpts, rho_ball, s_ball,
                      s_ball_many)
from .spheres import (rho_ball_euclidean, s_line_intersections, trace_jstar_circle,
                      trace_rho_circle, trace_s_circle)


@dataclass(frozen=True)
class BallSpec:
    """(metric kind, center, radius) naming one metric ball."""

    metric: MetricKind
    center: PointB
    radius: float


@dataclass
class InclusionReport:
    """Worst-case result of one claim over its parameter grid."""

    claim_id: str
    kind: str               # iff | sharp | if | necessary | inequality | identity | exploratory
    grid_shape: tuple
    tolerance: float
    worst_violation: float
    witness: Optional[dict]
    passed: bool
    note: str = ""


@dataclass
class ConjectureCell:
    absx: float
    t: float
    measured_min_rho: float
    measured_max_rho: float
    conjectured_r0: float
    conjectured_r1: float

    @property
    def deviation(self) -> float:
        return max(abs(self.measured_min_rho - self.conjectured_r0),
                   abs(self.measured_max_rho - self.conjectured_r1))


@dataclass
class ConjectureReport:
    grid_shape: tuple
    trace_n: int
    eps: float
    cells: list
    skipped: list
    max_deviation: float
    origin_max_deviation: float


# ---------------------------------------------------------------------------
# brute-force oracle


def brute_force_s(x: PointLike, y: PointLike, m: int,
                  opts: SolveOpts = DEFAULT_OPTS) -> float:
    """Independent s oracle: scan m uniform boundary angles and refine
    each grid-local minimum with one parabolic fit.  Accuracy O(1/m^2);
    stays independent of the golden-section/Newton path it checks."""
    if m < 360:
        raise DomainError("need m >= 360 boundary samples")
    px, py = as_point(x), as_point(y)
    if px.norm >= 1.0 or py.norm >= 1.0:
        raise DomainError("points must lie inside the unit ball")
    from .geometry import reduce_to_plane
    dist = float(np.linalg.norm(px.as_array() - py.as_array()))
    if dist == 0.0:
        return 0.0
    pair = reduce_to_plane(px, py)
    a, b = pair.a, pair.b
    theta = np.linspace(0.0, 2.0 * math.pi, m, endpoint=False)
    z = np.exp(1j * theta)
    f = np.abs(a - z) + np.abs(z - b)
    is_min = (f <= np.roll(f, 1)) & (f <= np.roll(f, -1))
    best = float(np.min(f))
    h = 2.0 * math.pi / m
    for i in np.nonzero(is_min)[0]:
        fm, f0, fp = f[(i - 1) % m], f[i], f[(i + 1) % m]
        denom = fp - 2.0 * f0 + fm
        if denom > 0:
            t_hat = theta[i] + 0.5 * h * (fm - fp) / denom
            zz = complex(math.cos(t_hat), math.sin(t_hat))
            best = min(best, abs(a - zz) + abs(zz - b))
    return dist / best


# ---------------------------------------------------------------------------
# sphere sampling and batched metric evaluation (2D)


def _metric_many(kind: MetricKind, xc: complex, pts: np.ndarray,
                 opts: SolveOpts) -> np.ndarray:
    dist = np.abs(pts - xc)
    if kind is MetricKind.EUCLIDEAN:
        return dist
    if kind is MetricKind.S:
        return s_ball_many(xc, pts, opts)
    d = np.minimum(1.0 - abs(xc), 1.0 - np.abs(pts))
    if kind is MetricKind.J:
        return np.log1p(dist / d)
    if kind is MetricKind.JSTAR:
        return dist / (dist + 2.0 * d)
    if kind is MetricKind.RHO:
        denom = np.sqrt((1.0 - abs(xc) ** 2) * (1.0 - np.abs(pts) ** 2))
        return 2.0 * np.arcsinh(dist / denom)
    raise DomainError("unknown metric kind %r" % (kind,))


def sphere_samples(spec: BallSpec, samples: int, eps: float = 1e-5,
                   opts: SolveOpts = DEFAULT_OPTS) -> np.ndarray:
    """Points on the sphere of ``spec``, as complex values.  Angles are
    measured from the center direction, so the axis extremes that realize
    sharpness are always sampled."""
    xc = complex(spec.center.coords[0], spec.center.coords[1])
    r = spec.radius
    kind = spec.metric
    m = samples + (samples % 2)
    if kind is MetricKind.EUCLIDEAN:
        base = xc / abs(xc) if xc != 0 else 1.0 + 0j
        ang = np.linspace(0.0, 2.0 * math.pi, m, endpoint=False)
        return xc + r * base * np.exp(1j * ang)
    if kind is MetricKind.S:
        return trace_s_circle(xc, r, n=samples, eps=eps, opts=opts).vertex_complex()
    if kind is MetricKind.JSTAR:
        return trace_jstar_circle(xc, r, n=samples).vertex_complex()
    if kind is MetricKind.J:
        return trace_jstar_circle(xc, math.tanh(r / 2.0), n=samples).vertex_complex()
    if kind is MetricKind.RHO:
        return trace_rho_circle(xc, r, n=samples).vertex_complex()
    raise DomainError("unknown metric kind %r" % (kind,))


def check_inclusion(inner: BallSpec, outer: BallSpec, samples: int,
                    tol: Optional[float] = None, eps: float = 1e-5,
                    opts: SolveOpts = DEFAULT_OPTS,
                    claim_id: Optional[str] = None) -> InclusionReport:
    """Empirical check of B_inner subseteq B_outer for balls sharing a
    center: sample the inner sphere, evaluate the outer metric, and
    report max(value) - outer_radius.  Default tolerance 1e-7, relaxed to
    1e-4 when the inner sphere is a traced s-circle."""
    if samples < 100:
        raise DomainError("need samples >= 100")
    if np.max(np.abs(inner.center.as_array() - outer.center.as_array())) > 1e-15:
        raise DomainError("inclusion checks need a common center")
    if tol is None:
        tol = 1e-4 if inner.metric is MetricKind.S else 1e-7
    pts = sphere_samples(inner, samples, eps=eps, opts=opts)
    xc = complex(inner.center.coords[0], inner.center.coords[1])
    vals = _metric_many(outer.metric, xc, pts, opts)
    i = int(np.argmax(vals))
    violation = float(vals[i]) - outer.radius
    witness = {"x": list(inner.center.coords),
               "inner_radius": inner.radius,
               "outer_radius": outer.radius,
               "point": [float(pts[i].real), float(pts[i].imag)]}
    cid = claim_id or "B_%s(x,%g) in B_%s(x,%g)" % (
        inner.metric.value, inner.radius, outer.metric.value, outer.radius)
    return InclusionReport(claim_id=cid, kind="if", grid_shape=(1,),
                           tolerance=tol, worst_violation=violation,
                           witness=witness, passed=violation <= tol)


# ---------------------------------------------------------------------------
# conjecture harness


def verify_conjecture(grid_n: int, trace_n: int = 2000, eps: float = 1e-5,
                      opts: SolveOpts = DEFAULT_OPTS) -> ConjectureReport:
    """Reproduce the computer tests behind the sharp s/hyperbolic
    sandwich: on each grid cell trace S_s(x, t), measure the extremes of
    rho(x, .) over the trace, and compare with the conjectured radii
    R0 = log(1 + 4t/((1-t)(1+|x|))) and R1 = 2 arsh(2t/sqrt(l)).

    The |x| grid spans (0.05, 0.95) and always includes an extra origin
    column, where both radii collapse to the exact identity
    log((1+3t)/(1-t)).
    """
    if grid_n < 5:
        raise DomainError("grid_n must be >= 5")
    xs = np.concatenate([[0.0], np.linspace(0.05, 0.95, grid_n)])
    ts = np.linspace(0.05, 0.95, grid_n)
    cells = []
    skipped = []
    for absx in xs:
        for t in ts:
            l = conjecture_l(t, absx)
            if l <= 0.0:
                skipped.append((float(absx), float(t)))
                continue
            trace = trace_s_circle(complex(absx, 0.0), t, n=trace_n,
                                   eps=eps, opts=opts)
            pts = trace.vertex_complex()
            rho = _metric_many(MetricKind.RHO, complex(absx, 0.0), pts, opts)
            r0 = math.log1p(4.0 * t / ((1.0 - t) * (1.0 + absx)))
            r1 = 2.0 * math.asinh(2.0 * t / math.sqrt(l))
            cells.append(ConjectureCell(
                absx=float(absx), t=float(t),
                measured_min_rho=float(np.min(rho)),
                measured_max_rho=float(np.max(rho)),
                conjectured_r0=r0, conjectured_r1=r1))
    max_dev = max(c.deviation for c in cells) if cells else 0.0
    origin = [c for c in cells if c.absx == 0.0]
    origin_dev = 0.0
    for c in origin:
        ident = s_rho_origin(c.t)
        origin_dev = max(origin_dev,
                         abs(c.measured_min_rho - ident),
                         abs(c.measured_max_rho - ident),
                         abs(c.conjectured_r0 - ident),
                         abs(c.conjectured_r1 - ident))
    return ConjectureReport(grid_shape=(len(xs), len(ts)), trace_n=trace_n,
                            eps=eps, cells=cells, skipped=skipped,
                            max_deviation=max_dev,
                            origin_max_deviation=origin_dev)


# ---------------------------------------------------------------------------
# theorem suite


_CENTERS = (0.0, 0.2, 0.45, 0.7)
_RADII = (0.15, 0.35, 0.6, 0.8)
_RHO_RADII = (0.4, 1.0, 2.0)

_S_TOL = 1e-4   # traced s-spheres
_F_TOL = 1e-7   # closed-form spheres and direct evaluations
_ID_TOL = 1e-9  # witness identities


def _worst(claims):
    """Fold (violation, witness) pairs into the worst one."""
    worst_v, worst_w = -math.inf, None
    for v, w in claims:
        if v > worst_v:
            worst_v, worst_w = v, w
    return worst_v, worst_w


def _report(claim_id, kind, grid, tol, results, note="") -> InclusionReport:
    v, w = _worst(results)
    return InclusionReport(claim_id=claim_id, kind=kind, grid_shape=grid,
                           tolerance=tol, worst_violation=v, witness=w,
                           passed=v <= tol, note=note)


def _sample_and_eval(inner: BallSpec, outer_kind: MetricKind, outer_radius: float,
                     samples: int, eps: float, opts: SolveOpts):
    pts = sphere_samples(inner, samples, eps=eps, opts=opts)
    xc = complex(inner.center.coords[0], inner.center.coords[1])
    vals = _metric_many(outer_kind, xc, pts, opts)
    i = int(np.argmax(vals))
    witness = {"x": [xc.real, xc.imag], "inner_radius": inner.radius,
               "outer_radius": outer_radius,
               "point": [float(pts[i].real), float(pts[i].imag)]}
    return float(vals[i]) - outer_radius, witness


def verify_theorem_suite(samples: int = 600, inflate: float = 0.0,
                         seed: int = 42, opts: SolveOpts = DEFAULT_OPTS,
                         eps: float = 1e-5):
    """Run every inclusion claim over a fixed grid of centers and radii.

    ``inflate`` scales each claim's inner sphere radius (1 percent in the
    sharpness experiment); identity, inequality, and exploratory records
    are never inflated.  Deterministic for a fixed seed.  Returns a list
    of InclusionReport, one per claim; failures never abort the run.
    """
    scale = 1.0 + inflate
    reports = []

    def add(claim_id, kind, grid, tol, results, note=""):
        try:
            reports.append(_report(claim_id, kind, grid, tol, results, note))
        except Exception as exc:  # aggregate, never abort
            reports.append(InclusionReport(claim_id=claim_id, kind=kind,
                                           grid_shape=grid, tolerance=tol,
                                           worst_violation=math.inf,
                                           witness=None, passed=False,
                                           note="error: %s" % exc))

    def run(claim_id, kind, tol, combos, builder, note=""):
        results = []
        try:
            for combo in combos:
                results.append(builder(*combo))
            add(claim_id, kind, (len(results),), tol, results, note)
        except Exception as exc:
            reports.append(InclusionReport(claim_id=claim_id, kind=kind,
                                           grid_shape=(len(results),),
                                           tolerance=tol,
                                           worst_violation=math.inf,
                                           witness=None, passed=False,
                                           note="error: %s" % exc))

    xt = [(ax, t) for ax in _CENTERS for t in _RADII]
    xr = [(ax, r) for ax in _CENTERS for r in _RHO_RADII]

    def center(ax):
        return as_point(complex(ax, 0.0))

    # Theorem 2.2: j vs rho, both directions, iff
    def jrho_inner(ax, big_r):
        k0 = j_vs_rho(center(ax), big_r, Direction.GIVEN_RHO).inner_radius
        inner = BallSpec(MetricKind.J, center(ax), k0 * scale)
        return _sample_and_eval(inner, MetricKind.RHO, big_r, samples, eps, opts)

    def jrho_outer(ax, big_r):
        k1 = j_vs_rho(center(ax), big_r, Direction.GIVEN_RHO).outer_radius
        inner = BallSpec(MetricKind.RHO, center(ax), big_r * scale)
        return _sample_and_eval(inner, MetricKind.J, k1, samples, eps, opts)

    def rhoj_inner(ax, big_k):
        r0 = j_vs_rho(center(ax), big_k, Direction.GIVEN_OTHER).inner_radius
        inner = BallSpec(MetricKind.RHO, center(ax), r0 * scale)
        return _sample_and_eval(inner, MetricKind.J, big_k, samples, eps, opts)

    def rhoj_outer(ax, big_k):
        r1 = j_vs_rho(center(ax), big_k, Direction.GIVEN_OTHER).outer_radius
        inner = BallSpec(MetricKind.J, center(ax), big_k * scale)
        return _sample_and_eval(inner, MetricKind.RHO, r1, samples, eps, opts)

    run("thm2.2-j-in-rho", "iff", _F_TOL, xr, jrho_inner)
    run("thm2.2-rho-in-j", "iff", _F_TOL, xr, jrho_outer)
    run("thm2.2-rho-in-j-given-K", "iff", _F_TOL,
        [(ax, k) for ax in _CENTERS for k in (0.3, 0.7, 1.2)], rhoj_inner)
    run("thm2.2-j-in-rho-given-K", "iff", _F_TOL,
        [(ax, k) for ax in _CENTERS for k in (0.3, 0.7, 1.2)], rhoj_outer)

    # Theorem 2.3: pointwise inequalities on seeded random pairs
    rng = np.random.default_rng(seed)
    npairs = 400
    r1 = 0.95 * np.sqrt(rng.random(npairs))
    a1 = 2.0 * math.pi * rng.random(npairs)
    r2 = 0.95 * np.sqrt(rng.random(npairs))
    a2 = 2.0 * math.pi * rng.random(npairs)
    pxs = r1 * np.exp(1j * a1)
    pys = r2 * np.exp(1j * a2)

    def ineq_results(fn):
        out = []
        for xv, yv in zip(pxs, pys):
            s = s_ball(complex(xv), complex(yv), opts).value
            dist = float(abs(xv - yv))
            d = float(min(1.0 - abs(xv), 1.0 - abs(yv)))
            jstar = dist / (dist + 2.0 * d) if dist > 0 else 0.0
            out.append((fn(s, jstar),
                        {"x": [float(xv.real), float(xv.imag)],
                         "point": [float(yv.real), float(yv.imag)],
                         "inner_radius": s, "outer_radius": jstar}))
        return out

    add("thm2.3-jstar-le-s", "inequality", (npairs,), _F_TOL,
        ineq_results(lambda s, js: js - s))
    add("thm2.3-s-le-2jstar", "inequality", (npairs,), _F_TOL,
        ineq_results(lambda s, js: s - 2.0 * js))
    add("thm2.3-s-le-sqrt2-jstar", "inequality", (npairs,), _F_TOL,
        ineq_results(lambda s, js: s - math.sqrt(2.0) * js),
        note="convex-domain refinement")

    # Theorem 3.4: Euclidean sandwich of s-balls, iff
    def euclid_in_s(ax, t):
        r0 = s_vs_euclid(center(ax), t).inner_radius
        inner = BallSpec(MetricKind.EUCLIDEAN, center(ax), r0 * scale)
        return _sample_and_eval(inner, MetricKind.S, t, samples, eps, opts)

    def s_in_euclid(ax, t):
        r1 = s_vs_euclid(center(ax), t).outer_radius
        inner = BallSpec(MetricKind.S, center(ax), t * scale)
        return _sample_and_eval(inner, MetricKind.EUCLIDEAN, r1, samples, eps, opts)

    run("thm3.4-euclid-in-s", "iff", _F_TOL, xt, euclid_in_s)
    run("thm3.4-s-in-euclid", "iff", _S_TOL, xt, s_in_euclid)

    # Lemma 4.3 / Corollary 4.4: j* vs Euclidean, iff
    def l43_combos():
        out = []
        for ax in _CENTERS:
            for r in (0.1, 0.25, 0.5):
                if r < 1.0 - ax:
                    out.append((ax, r))
        return out

    def jstar_in_euclid(ax, r):
        k0 = jstar_vs_euclid(center(ax), r).inner_radius
        inner = BallSpec(MetricKind.JSTAR, center(ax), k0 * scale)
        return _sample_and_eval(inner, MetricKind.EUCLIDEAN, r, samples, eps, opts)

    def euclid_in_jstar(ax, r):
        k1 = jstar_vs_euclid(center(ax), r).outer_radius
        inner = BallSpec(MetricKind.EUCLIDEAN, center(ax), r * scale)
        return _sample_and_eval(inner, MetricKind.JSTAR, k1, samples, eps, opts)

    run("lem4.3-jstar-in-euclid", "iff", _F_TOL, l43_combos(), jstar_in_euclid)
    run("lem4.3-euclid-in-jstar", "iff", _F_TOL, l43_combos(), euclid_in_jstar)

    def euclid_in_jstar_c44(ax, k):
        r0 = euclid_vs_jstar(center(ax), k).inner_radius
        inner = BallSpec(MetricKind.EUCLIDEAN, center(ax), r0 * scale)
        return _sample_and_eval(inner, MetricKind.JSTAR, k, samples, eps, opts)

    def jstar_in_euclid_c44(ax, k):
        r1 = euclid_vs_jstar(center(ax), k).outer_radius
        inner = BallSpec(MetricKind.JSTAR, center(ax), k * scale)
        return _sample_and_eval(inner, MetricKind.EUCLIDEAN, r1, samples, eps, opts)

    run("cor4.4-euclid-in-jstar", "iff", _F_TOL, xt, euclid_in_jstar_c44)
    run("cor4.4-jstar-in-euclid", "iff", _F_TOL, xt, jstar_in_euclid_c44)

    # Lemma 4.6 / Corollary 4.7: j* and j sandwiches of s-balls
    def jstar_in_s(ax, t, convex):
        k = s_vs_jstar(t, convex).inner_radius
        inner = BallSpec(MetricKind.JSTAR, center(ax), k * scale)
        return _sample_and_eval(inner, MetricKind.S, t, samples, eps, opts)

    def s_in_jstar(ax, t):
        inner = BallSpec(MetricKind.S, center(ax), t * scale)
        return _sample_and_eval(inner, MetricKind.JSTAR, t, samples, eps, opts)

    def j_in_s(ax, t, convex):
        kj = s_vs_j(t, convex).inner_radius
        inner = BallSpec(MetricKind.J, center(ax), kj * scale)
        return _sample_and_eval(inner, MetricKind.S, t, samples, eps, opts)

    def s_in_j(ax, t):
        kj = s_vs_j(t, False).outer_radius
        inner = BallSpec(MetricKind.S, center(ax), t * scale)
        return _sample_and_eval(inner, MetricKind.J, kj, samples, eps, opts)

    run("lem4.6-jstar-in-s", "if", _F_TOL, xt,
        lambda ax, t: jstar_in_s(ax, t, False))
    run("lem4.6-jstar-in-s-convex", "if", _F_TOL, xt,
        lambda ax, t: jstar_in_s(ax, t, True))
    run("lem4.6-s-in-jstar", "sharp", _S_TOL, xt, s_in_jstar)
    run("cor4.7-j-in-s", "if", _F_TOL, xt, lambda ax, t: j_in_s(ax, t, False))
    run("cor4.7-j-in-s-convex", "if", _F_TOL, xt,
        lambda ax, t: j_in_s(ax, t, True))
    run("cor4.7-s-in-j", "sharp", _S_TOL, xt, s_in_j)

    # Lemma 4.8: non-centered Euclidean enclosure for |x| <= t
    l48 = [(ax, t) for ax, t in xt if 0.0 < ax <= t]

    def _enclosure(ax, t):
        enc = s_enclosing_ball(center(ax), t)
        qc = complex(enc.ball.center[0], enc.ball.center[1])
        return enc, qc

    def jstar_in_ball(ax, t):
        enc, qc = _enclosure(ax, t)
        pts = sphere_samples(BallSpec(MetricKind.JSTAR, center(ax), t * scale),
                             samples, eps=eps, opts=opts)
        vals = np.abs(pts - qc)
        i = int(np.argmax(vals))
        return (float(vals[i]) - enc.ball.radius,
                {"x": [ax, 0.0], "inner_radius": t, "outer_radius": enc.ball.radius,
                 "point": [float(pts[i].real), float(pts[i].imag)]})

    def s_in_ball(ax, t):
        enc, qc = _enclosure(ax, t)
        pts = sphere_samples(BallSpec(MetricKind.S, center(ax), t * scale),
                             samples, eps=eps, opts=opts)
        vals = np.abs(pts - qc)
        i = int(np.argmax(vals))
        return (float(vals[i]) - enc.ball.radius,
                {"x": [ax, 0.0], "inner_radius": t, "outer_radius": enc.ball.radius,
                 "point": [float(pts[i].real), float(pts[i].imag)]})

    def l48_identities(ax, t):
        enc, qc = _enclosure(ax, t)
        y0, y1 = s_line_intersections(center(ax), t)
        y0c, y1c = complex(*y0.coords), complex(*y1.coords)
        err = max(abs((y0c + y1c) / 2.0 - qc),
                  abs(abs(y0c - y1c) / 2.0 - enc.ball.radius),
                  abs(abs(qc) + enc.ball.radius - abs(y0c)))
        return err, {"x": [ax, 0.0], "inner_radius": t,
                     "outer_radius": enc.ball.radius, "point": [y0c.real, y0c.imag]}

    run("lem4.8-jstar-in-ball", "if", _F_TOL, l48, jstar_in_ball)
    run("lem4.8-s-in-ball", "if", _S_TOL, l48, s_in_ball)
    run("lem4.8-identities", "identity", 1e-12, l48, l48_identities,
        note="q=(y0+y1)/2, r=|y0-y1|/2, |q|+r=|y0|")

    # Lemma 4.8 closing remark, t < |x|: exploratory only
    expl = []
    for ax, t in xt:
        if not (0.0 < t < ax):
            continue
        y0, y1 = s_line_intersections(center(ax), t)
        y0c, y1c = complex(*y0.coords), complex(*y1.coords)
        qc = (y0c + y1c) / 2.0
        r = abs(y0c - y1c) / 2.0
        pts = sphere_samples(BallSpec(MetricKind.JSTAR, center(ax), t),
                             samples, eps=eps, opts=opts)
        overshoot = float(np.max(np.abs(pts - qc))) - r
        pts_s = sphere_samples(BallSpec(MetricKind.S, center(ax), t),
                               samples, eps=eps, opts=opts)
        s_over = float(np.max(np.abs(pts_s - qc))) - r
        expl.append((ax, t, overshoot, s_over))
    if expl:
        jstar_breaks = all(o > 0 for _, _, o, _ in expl)
        s_holds = all(o <= _S_TOL for _, _, _, o in expl)
        note = ("j*-ball escapes B(q,r) in all %d cells: %s; "
                "s-ball stays inside: %s" % (len(expl), jstar_breaks, s_holds))
        reports.append(InclusionReport(
            claim_id="lem4.8-remark-t-lt-x", kind="exploratory",
            grid_shape=(len(expl),), tolerance=math.inf,
            worst_violation=max(o for _, _, o, _ in expl),
            witness=None, passed=True, note=note))

    # Corollary 5.1: j* vs rho, iff, both directions
    def jstar_in_rho(ax, big_r):
        k0 = jstar_vs_rho(center(ax), big_r, Direction.GIVEN_RHO).inner_radius
        inner = BallSpec(MetricKind.JSTAR, center(ax), k0 * scale)
        return _sample_and_eval(inner, MetricKind.RHO, big_r, samples, eps, opts)

    def rho_in_jstar(ax, big_r):
        k1 = jstar_vs_rho(center(ax), big_r, Direction.GIVEN_RHO).outer_radius
        inner = BallSpec(MetricKind.RHO, center(ax), big_r * scale)
        return _sample_and_eval(inner, MetricKind.JSTAR, k1, samples, eps, opts)

    def rho_in_jstar_k(ax, k):
        r0 = jstar_vs_rho(center(ax), k, Direction.GIVEN_OTHER).inner_radius
        inner = BallSpec(MetricKind.RHO, center(ax), r0 * scale)
        return _sample_and_eval(inner, MetricKind.JSTAR, k, samples, eps, opts)

    def jstar_in_rho_k(ax, k):
        r1 = jstar_vs_rho(center(ax), k, Direction.GIVEN_OTHER).outer_radius
        inner = BallSpec(MetricKind.JSTAR, center(ax), k * scale)
        return _sample_and_eval(inner, MetricKind.RHO, r1, samples, eps, opts)

    run("cor5.1-jstar-in-rho", "iff", _F_TOL, xr, jstar_in_rho)
    run("cor5.1-rho-in-jstar", "iff", _F_TOL, xr, rho_in_jstar)
    run("cor5.1-rho-in-jstar-given-k", "iff", _F_TOL, xt, rho_in_jstar_k)
    run("cor5.1-jstar-in-rho-given-k", "iff", _F_TOL, xt, jstar_in_rho_k)

    # Lemma 5.3: witness identities and the necessary bounds
    def w_rho_y0(ax, t):
        y0, _ = s_line_intersections(center(ax), t)
        lhs = rho_ball(center(ax), y0)
        rhs = math.log1p(4.0 * t / ((1.0 - t) * (1.0 + ax)))
        return abs(lhs - rhs), {"x": [ax, 0.0], "inner_radius": t,
                                "outer_radius": rhs,
                                "point": list(y0.coords)}

    def w_rho_y1(ax, t):
        _, y1 = s_line_intersections(center(ax), t)
        lhs = rho_ball(center(ax), y1)
        rhs = 2.0 * math.asinh(2.0 * t / math.sqrt(conjecture_l(t, ax)))
        return abs(lhs - rhs), {"x": [ax, 0.0], "inner_radius": t,
                                "outer_radius": rhs,
                                "point": list(y1.coords)}

    def w_t0(ax, big_r):
        t0 = s_rho_necessary(center(ax), big_r, Direction.GIVEN_RHO).inner_radius
        _, near = rho_witness_points(center(ax), big_r)
        sval = s_ball(center(ax), near, opts).value
        return abs(sval - t0), {"x": [ax, 0.0], "inner_radius": big_r,
                                "outer_radius": t0, "point": list(near.coords)}

    xt_pos = [(ax, t) for ax, t in xt if ax > 0]
    run("lem5.3-witness-rho-y0", "identity", _ID_TOL, xt_pos, w_rho_y0)
    run("lem5.3-witness-rho-y1", "identity", _ID_TOL, xt_pos, w_rho_y1)
    run("lem5.3-witness-t0", "identity", _ID_TOL,
        [(ax, r) for ax in _CENTERS for r in _RHO_RADII], w_t0)

    def rho_in_s_at_bound(ax, t):
        r0 = s_rho_necessary(center(ax), t, Direction.GIVEN_OTHER).inner_radius
        inner = BallSpec(MetricKind.RHO, center(ax), r0 * scale)
        return _sample_and_eval(inner, MetricKind.S, t, samples, eps, opts)

    def s_in_rho_at_bound(ax, t):
        r1 = s_rho_necessary(center(ax), t, Direction.GIVEN_OTHER).outer_radius
        inner = BallSpec(MetricKind.S, center(ax), t * scale)
        return _sample_and_eval(inner, MetricKind.RHO, r1, samples, eps, opts)

    run("lem5.3-rho-in-s-at-bound", "necessary", _F_TOL, xt, rho_in_s_at_bound,
        note="necessary bound; the pass direction is the conjectured sharpness")
    run("lem5.3-s-in-rho-at-bound", "necessary", _S_TOL, xt, s_in_rho_at_bound,
        note="necessary bound; the pass direction is the conjectured sharpness")

    # Corollary 5.4: sufficient bounds
    def s_in_rho_suff(ax, big_r):
        t0 = s_rho_sufficient(center(ax), big_r, Direction.GIVEN_RHO).inner_radius
        inner = BallSpec(MetricKind.S, center(ax), t0 * scale)
        return _sample_and_eval(inner, MetricKind.RHO, big_r, samples, eps, opts)

    def rho_in_s_suff(ax, big_r):
        t1 = s_rho_sufficient(center(ax), big_r, Direction.GIVEN_RHO).outer_radius
        inner = BallSpec(MetricKind.RHO, center(ax), big_r * scale)
        return _sample_and_eval(inner, MetricKind.S, t1, samples, eps, opts)

    def rho_in_s_suff_t(ax, t):
        r0 = s_rho_sufficient(center(ax), t, Direction.GIVEN_OTHER).inner_radius
        inner = BallSpec(MetricKind.RHO, center(ax), r0 * scale)
        return _sample_and_eval(inner, MetricKind.S, t, samples, eps, opts)

    def s_in_rho_suff_t(ax, t):
        r1 = s_rho_sufficient(center(ax), t, Direction.GIVEN_OTHER).outer_radius
        inner = BallSpec(MetricKind.S, center(ax), t * scale)
        return _sample_and_eval(inner, MetricKind.RHO, r1, samples, eps, opts)

    run("cor5.4-s-in-rho", "if", _S_TOL, xr, s_in_rho_suff)
    run("cor5.4-rho-in-s", "if", _F_TOL, xr, rho_in_s_suff)
    run("cor5.4-rho-in-s-given-t", "if", _F_TOL, xt, rho_in_s_suff_t)
    run("cor5.4-s-in-rho-given-t", "if", _S_TOL, xt, s_in_rho_suff_t)

    return reports


# ---------------------------------------------------------------------------
# rendering


def render_reports_text(reports) -> str:
    """One fixed-format line per claim; byte-stable across runs."""
    lines = []
    for r in reports:
        lines.append("%s %-28s kind=%-11s tol=%-8s worst=%s grid=%s%s" % (
            "PASS" if r.passed else "FAIL", r.claim_id, r.kind,
            "%.3g" % r.tolerance, "%.6e" % r.worst_violation,
            "x".join(str(g) for g in r.grid_shape),
            ("  # " + r.note) if r.note else ""))
    n_fail = sum(not r.passed for r in reports)
    lines.append("claims: %d  failed: %d" % (len(reports), n_fail))
    return "\n".join(lines) + "\n"


def reports_to_json(reports, meta=None) -> str:
    payload = {"meta": meta or {}, "claims": [asdict(r) for r in reports]}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def render_conjecture_text(report: ConjectureReport) -> str:
    lines = ["grid=%dx%d trace_n=%d eps=%r" % (report.grid_shape[0],
                                               report.grid_shape[1],
                                               report.trace_n, report.eps)]
    for c in report.cells:
        lines.append("|x|=%.6f t=%.6f min_rho=%.12g max_rho=%.12g "
                     "R0=%.12g R1=%.12g dev=%.3e" % (
                         c.absx, c.t, c.measured_min_rho, c.measured_max_rho,
                         c.conjectured_r0, c.conjectured_r1, c.deviation))
    for absx, t in report.skipped:
        lines.append("|x|=%.6f t=%.6f SKIPPED (l <= 0)" % (absx, t))
    lines.append("max_deviation=%.6e origin_max_deviation=%.6e"
                 % (report.max_deviation, report.origin_max_deviation))
    return "\n".join(lines) + "\n"


def conjecture_to_json(report: ConjectureReport) -> str:
    payload = {
        "grid_shape": list(report.grid_shape),
        "trace_n": report.trace_n,
        "eps": report.eps,
        "max_deviation": report.max_deviation,
        "origin_max_deviation": report.origin_max_deviation,
        "skipped": [list(c) for c in report.skipped],
        "cells": [asdict(c) for c in report.cells],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
