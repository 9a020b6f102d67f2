"""Metric circles and spheres: exact constructions and traced polylines.

The s-circle tracer follows the seven-step drawing recipe: sample
admissible boundary angles, generate candidate points from the
angle-bisection construction, keep only candidates whose computed
s-distance matches the radius, mirror across the center line, and sort
by argument.  j*-circles and hyperbolic circles have closed forms and
are assembled directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EmptyTraceError
from .geometry import PointB, PointLike, as_point
from .metrics import (DEFAULT_OPTS, MetricKind, SolveOpts, jstar_ball,
                      rho_ball, s_ball_many)

#: sampling defaults used by the drawing recipe
DEFAULT_TRACE_N = 10_000
DEFAULT_TRACE_EPS = 1e-5


@dataclass(frozen=True)
class Trace:
    """A traced metric circle: vertices ordered by the argument of
    (vertex - center) on [0, 2pi), with per-vertex residuals
    |d(center, v) - radius|."""

    center: PointB
    metric: MetricKind
    radius: float
    vertices: tuple
    residuals: tuple

    def vertex_complex(self) -> np.ndarray:
        return np.array([complex(v.coords[0], v.coords[1]) for v in self.vertices])

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class CandidateSet:
    """Candidate circle points produced by the bisection construction for
    one boundary angle u: z is the boundary point, v the half-angle at z,
    and each point y = z(1 - h e^{-iv}) with its root h."""

    u: float
    z: PointB
    v: float
    points: tuple  # of (h, PointB)


@dataclass(frozen=True)
class EuclideanBall:
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        if self.radius <= 0:
            raise DomainError("EuclideanBall radius must be positive")


@dataclass(frozen=True)
class Mesh:
    """Triangulated surface: 3-vectors and 1-based-agnostic face index
    triples (0-based here; the OBJ writer shifts)."""

    vertices: np.ndarray
    faces: np.ndarray


@dataclass(frozen=True)
class MidcircleIntersections:
    """Result of intersecting S_s(x,t) with the circle |y| = |x|; when
    t > |x| that circle lies inside the s-disk and there is no
    intersection."""

    points: tuple
    circle_contained: bool


def _require_radius(t: float):
    if not (0.0 < t < 1.0):
        raise DomainError("radius must lie in (0, 1), got %r" % (t,))


def _center2d(x: PointLike) -> complex:
    px = as_point(x)
    if px.n != 2:
        raise DomainError("tracing works in the plane; pass a 2D center")
    if px.norm >= 1.0:
        raise DomainError("center must lie inside the unit ball")
    return complex(px.coords[0], px.coords[1])


def _candidate_arrays(absx: float, t: float, u):
    """Vectorized bisection construction for center modulus |x| and
    boundary angles u (measured from the direction of x).

    Returns (v, h0, h1, ok0, ok1) where hk are the two quadratic roots and
    okk flags 0 < h < 2 cos v with a real discriminant.
    """
    u = np.asarray(u, dtype=float)
    cu = np.cos(u)
    dxz = np.sqrt(1.0 + absx * absx - 2.0 * absx * cu)
    cv = np.clip((1.0 - absx * cu) / dxz, -1.0, 1.0)
    v = np.arccos(cv)
    sv2 = 1.0 - cv * cv
    disc = t * t - sv2
    # tangency angles make the discriminant vanish up to rounding
    disc = np.where((disc < 0) & (disc > -1e-13), 0.0, disc)
    ok = disc >= 0.0
    root = np.sqrt(np.where(ok, disc, 0.0))
    c2v = 2.0 * cv * cv - 1.0
    h0 = dxz * (t * t + c2v - 2.0 * cv * root) / (1.0 - t * t)
    h1 = dxz * (t * t + c2v + 2.0 * cv * root) / (1.0 - t * t)
    ok0 = ok & (h0 > 0.0) & (h0 < 2.0 * cv)
    ok1 = ok & (h1 > 0.0) & (h1 < 2.0 * cv)
    return v, h0, h1, ok0, ok1


def _points_from_uh(xc: complex, u, v, h):
    """Map (u, v, h) to circle points y = z (1 - h e^{-iv}) in the original
    frame, z = (x/|x|) e^{iu}."""
    z = (xc / abs(xc)) * np.exp(1j * np.asarray(u))
    return z * (1.0 - np.asarray(h) * np.exp(-1j * np.asarray(v)))


def candidate_points(x: PointLike, t: float, u: float,
                     opts: SolveOpts = DEFAULT_OPTS) -> CandidateSet:
    """Candidate points of S_s(x, t) at boundary angle u in [0, pi].

    Empty when t < |x| and cos u falls strictly inside the excluded band
    ((t^2 - w)/|x|, (t^2 + w)/|x|), w = sqrt((1-t^2)(|x|^2-t^2)): no point
    satisfies both the distance-ratio equation and the bisection property
    there.
    """
    xc = _center2d(x)
    _require_radius(t)
    if xc == 0:
        raise DomainError("candidate construction needs x != 0")
    if not (0.0 <= u <= math.pi):
        raise DomainError("u must lie in [0, pi]")
    v, h0, h1, ok0, ok1 = _candidate_arrays(abs(xc), t, np.array([u]))
    zc = (xc / abs(xc)) * np.exp(1j * u)
    pts = []
    for h, ok in ((h0[0], ok0[0]), (h1[0], ok1[0])):
        if ok:
            yc = complex(_points_from_uh(xc, u, v[0], h))
            pts.append((float(h), as_point(yc)))
    if len(pts) == 2 and pts[0][0] == pts[1][0]:
        pts = pts[:1]  # double root at the tangency angle
    return CandidateSet(u=float(u), z=as_point(zc, boundary=True),
                        v=float(v[0]), points=tuple(pts))


def excluded_band(absx: float, t: float):
    """cos-u interval excluded for t < |x|; None when t >= |x|."""
    if t >= absx:
        return None
    w = math.sqrt((1.0 - t * t) * (absx * absx - t * t))
    return ((t * t - w) / absx, (t * t + w) / absx)


def _u_samples(absx: float, t: float, n: int) -> np.ndarray:
    """Boundary-angle samples: all of [0, pi], or the two admissible
    closed intervals when t < |x|.  Endpoints are always included; they
    are the tangency anchors of the trace."""
    band = excluded_band(absx, t)
    if band is None:
        return np.linspace(0.0, math.pi, n)
    c_lo, c_hi = band
    a_end = math.acos(min(1.0, max(-1.0, c_hi)))
    b_start = math.acos(min(1.0, max(-1.0, c_lo)))
    len_a = a_end - 0.0
    len_b = math.pi - b_start
    total = len_a + len_b
    na = max(2, int(round(n * (len_a / total)))) if total > 0 else n // 2
    nb = max(2, n - na)
    return np.concatenate([np.linspace(0.0, a_end, na),
                           np.linspace(b_start, math.pi, nb)])


def _sorted_trace(xc: complex, ys: np.ndarray, residuals: np.ndarray,
                  metric: MetricKind, radius: float) -> Trace:
    """Assemble a Trace sorted by arg(y - x) on [0, 2pi), ties broken by
    |y - x|."""
    args = np.angle(ys - xc) % (2.0 * math.pi)
    dist = np.abs(ys - xc)
    order = np.lexsort((dist, args))
    ys = ys[order]
    residuals = residuals[order]
    verts = tuple(as_point(complex(y)) for y in ys)
    return Trace(center=as_point(xc), metric=metric, radius=float(radius),
                 vertices=verts, residuals=tuple(float(r) for r in residuals))


def trace_s_circle(x: PointLike, t: float, n: int = DEFAULT_TRACE_N,
                   eps: float = DEFAULT_TRACE_EPS,
                   opts: SolveOpts = DEFAULT_OPTS) -> Trace:
    """Trace the triangular-ratio circle S_s(x, t) in the unit disk.

    Steps: (1) an origin-centered circle is Euclidean with radius
    2t/(1+t); (2-3) sample admissible boundary angles; (4) collect
    candidates with admissible roots; (5) drop candidates whose computed
    s-value misses t by more than eps; (6) mirror the survivors across
    L(0, x); (7) sort by argument around the center.
    """
    xc = _center2d(x)
    _require_radius(t)
    if n < 2:
        raise DomainError("need at least 2 samples")
    if eps <= 0:
        raise DomainError("eps must be positive")
    if xc == 0:
        r = 2.0 * t / (1.0 + t)
        ang = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        ys = r * np.exp(1j * ang)
        svals = s_ball_many(xc, ys, opts)
        return _sorted_trace(xc, ys, np.abs(svals - t), MetricKind.S, t)

    absx = abs(xc)
    u = _u_samples(absx, t, n)
    v, h0, h1, ok0, ok1 = _candidate_arrays(absx, t, u)
    ys = np.concatenate([_points_from_uh(xc, u[ok0], v[ok0], h0[ok0]),
                         _points_from_uh(xc, u[ok1], v[ok1], h1[ok1])])
    ys = ys[np.abs(ys) < 1.0]
    if len(ys) == 0:
        raise EmptyTraceError("no admissible candidates for S_s(%s, %g)" % (xc, t))
    svals = s_ball_many(xc, ys, opts)
    keep = np.abs(svals - t) <= eps
    ys = ys[keep]
    resid = np.abs(svals[keep] - t)
    if len(ys) == 0:
        raise EmptyTraceError(
            "every candidate failed the |s - t| <= %g filter; raise eps or n" % eps)
    mirror = xc * np.conj(ys) / np.conj(xc)
    ys = np.concatenate([ys, mirror])
    resid = np.concatenate([resid, resid])  # the mirror is an exact isometry
    return _sorted_trace(xc, ys, resid, MetricKind.S, t)


def s_line_intersections(x: PointLike, t: float):
    """The two points where S_s(x, t) meets the line L(0, x):
    y0 beyond x (toward the boundary) and y1 on the opposite side."""
    px = as_point(x)
    _require_radius(t)
    if px.norm == 0:
        raise DomainError("the line L(0, x) needs x != 0")
    if px.norm >= 1.0:
        raise DomainError("center must lie inside the unit ball")
    xv = px.as_array()
    absx = px.norm
    y0 = xv + 2.0 * t * xv * (1.0 - absx) / (absx * (1.0 + t))
    m = min((1.0 - absx) / (1.0 - t), (1.0 + absx) / (1.0 + t))
    y1 = xv - (2.0 * t * xv / absx) * m
    return as_point(tuple(y0)), as_point(tuple(y1))


def s_midcircle_intersections(x: PointLike, t: float) -> MidcircleIntersections:
    """Intersections of S_s(x, t) with the concentric circle |y| = |x|.

    For t > |x| the circle lies inside the s-disk, so the intersection is
    empty and ``circle_contained`` is set.
    """
    xc = _center2d(x)
    _require_radius(t)
    if xc == 0:
        raise DomainError("needs x != 0")
    absx = abs(xc)
    if t > absx:
        return MidcircleIntersections(points=(), circle_contained=True)
    c = (t * t + math.sqrt((1.0 - t * t) * (absx * absx - t * t))) / absx
    c = min(1.0, c)
    w = complex(2.0 * c * c - 1.0, 2.0 * c * math.sqrt(max(0.0, 1.0 - c * c)))
    return MidcircleIntersections(points=(as_point(xc * w), as_point(xc / w)),
                                  circle_contained=False)


# ---------------------------------------------------------------------------
# j*-circles


def _upsilon_radii(absx: float, k: float, u):
    """Radial solutions l0 (and l1 where defined) of the one-sided level
    set Upsilon(x, y) = |x-y|/(|x-y| + 2 - 2|y|) = k at angles u, together
    with validity masks."""
    cu = np.cos(np.asarray(u, dtype=float))
    if abs(3.0 * k - 1.0) <= 1e-9:
        l0 = (1.0 - absx * absx) / (2.0 * (1.0 - absx * cu))
        return l0, None
    q = 3.0 * k * k + 2.0 * k - 1.0
    disc = (4.0 * k * k * (1.0 + absx * absx - 2.0 * absx * cu)
            - (1.0 - k) ** 2 * absx * absx * (1.0 - cu * cu))
    disc = np.where((disc < 0) & (disc > -1e-13), 0.0, disc)
    root = (1.0 - k) * np.sqrt(np.maximum(disc, 0.0))
    base = 4.0 * k * k - (1.0 - k) ** 2 * absx * cu
    l0 = np.where(disc >= 0, (base - root) / q, np.nan)
    l1 = np.where(disc >= 0, (base + root) / q, np.nan)
    return l0, l1


def _upsilon_cos_limits(absx: float, k: float):
    """The cos-u thresholds c0 <= c1 where the radial solutions appear or
    disappear (k != 1/3)."""
    prod = (3.0 * k * k + 2.0 * k - 1.0) * (4.0 * k * k - absx * absx * (1.0 - k) ** 2)
    root = math.sqrt(max(0.0, prod))
    denom = absx * (1.0 - k) ** 2
    return (4.0 * k * k - root) / denom, (4.0 * k * k + root) / denom


def trace_jstar_circle(x: PointLike, k: float, n: int = 2000) -> Trace:
    """Assemble the j*-circle S_{j*}(x, k) from its two exact branches.

    Inside the closed disk |y| <= |x| the sphere is an arc of the
    Euclidean circle S(x, 2k(1-|x|)/(1-k)); outside it follows the
    one-sided level set, whose radial solutions split by k vs 1/3 and
    |x| vs 2k/(1-k).  Each branch is sampled in its natural parameter and
    the union sorted by argument around x.
    """
    xc = _center2d(x)
    _require_radius(k)
    if n < 4:
        raise DomainError("need at least 4 samples")
    if xc == 0:
        r = 2.0 * k / (1.0 + k)
        ang = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        ys = r * np.exp(1j * ang)
        resid = np.array([abs(jstar_ball(xc, complex(y)) - k) for y in ys])
        return _sorted_trace(xc, ys, resid, MetricKind.JSTAR, k)

    absx = abs(xc)
    pieces = []

    # inner branch: Euclidean arc inside |y| <= |x|
    r_in = 2.0 * k * (1.0 - absx) / (1.0 - k)
    phi = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    arc = xc + r_in * np.exp(1j * phi)
    arc = arc[np.abs(arc) <= absx]
    pieces.append(arc)

    # outer branch: radial level-set solutions with |y| > |x|
    if abs(3.0 * k - 1.0) <= 1e-9:
        u = np.linspace(0.0, math.pi, n)
        l0, l1 = _upsilon_radii(absx, k, u)
        radii = [(u, l0)]
    elif k < 1.0 / 3.0 and absx <= 2.0 * k / (1.0 - k):
        u = np.linspace(0.0, math.pi, n)
        l0, l1 = _upsilon_radii(absx, k, u)
        radii = [(u, l0)]
    elif k < 1.0 / 3.0:
        c0, c1 = _upsilon_cos_limits(absx, k)
        u_max = math.acos(min(1.0, max(-1.0, c1)))
        u = np.linspace(0.0, u_max, max(4, n // 2))
        l0, l1 = _upsilon_radii(absx, k, u)
        radii = [(u, l0), (u, l1)]
    else:  # k > 1/3; c0 >= 1 inside the ball, so every u admits l0
        c0, _ = _upsilon_cos_limits(absx, k)
        u_min = math.acos(min(1.0, max(-1.0, c0)))
        u = np.linspace(u_min, math.pi, n)
        l0, l1 = _upsilon_radii(absx, k, u)
        radii = [(u, l0)]

    base = xc / absx
    for u, ell in radii:
        good = np.isfinite(ell) & (ell > absx) & (ell < 1.0)
        ell, uu = ell[good], u[good]
        pieces.append(ell * base * np.exp(1j * uu))
        pieces.append(ell * base * np.exp(-1j * uu))

    ys = np.concatenate(pieces)
    if len(ys) == 0:
        raise EmptyTraceError("S_{j*}(%s, %g) produced no vertices" % (xc, k))
    resid = np.array([abs(jstar_ball(xc, complex(y)) - k) for y in ys])
    return _sorted_trace(xc, ys, resid, MetricKind.JSTAR, k)


# ---------------------------------------------------------------------------
# hyperbolic circles and revolution


def rho_ball_euclidean(x: PointLike, big_r: float) -> EuclideanBall:
    """The hyperbolic ball B_rho(x, R) as a Euclidean ball: with
    k = th(R/2), center x(1-k^2)/(1-|x|^2 k^2) and radius
    (1-|x|^2)k/(1-|x|^2 k^2)."""
    px = as_point(x)
    if px.norm >= 1.0:
        raise DomainError("center must lie inside the unit ball")
    if big_r <= 0:
        raise DomainError("hyperbolic radius must be positive")
    k = math.tanh(big_r / 2.0)
    absx = px.norm
    denom = 1.0 - absx * absx * k * k
    center = px.as_array() * (1.0 - k * k) / denom
    radius = (1.0 - absx * absx) * k / denom
    return EuclideanBall(center=center, radius=radius)


def trace_rho_circle(x: PointLike, big_r: float, n: int = 2000) -> Trace:
    """Sample the hyperbolic circle S_rho(x, R) via its exact Euclidean
    form, angles measured from the direction of x so the axis points are
    always included."""
    xc = _center2d(x)
    ball = rho_ball_euclidean(x, big_r)
    cc = complex(ball.center[0], ball.center[1])
    base = xc / abs(xc) if xc != 0 else 1.0 + 0j
    ang = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    ys = cc + ball.radius * base * np.exp(1j * ang)
    resid = np.array([abs(rho_ball(xc, complex(y)) - big_r) for y in ys])
    return _sorted_trace(xc, ys, resid, MetricKind.RHO, big_r)


def trace_j_circle(x: PointLike, big_k: float, n: int = 2000) -> Trace:
    """The distance-ratio circle S_j(x, K) is the j*-circle of radius
    th(K/2)."""
    if big_k <= 0:
        raise DomainError("j-radius must be positive")
    inner = trace_jstar_circle(x, math.tanh(big_k / 2.0), n)
    xc = _center2d(x)
    ys = inner.vertex_complex()
    resid = np.array([abs(j_value_2d(xc, complex(y)) - big_k) for y in ys])
    return Trace(center=inner.center, metric=MetricKind.J, radius=float(big_k),
                 vertices=inner.vertices, residuals=tuple(float(r) for r in resid))


def j_value_2d(xc: complex, yc: complex) -> float:
    d = min(1.0 - abs(xc), 1.0 - abs(yc))
    return math.log1p(abs(xc - yc) / d)


def revolve_3d(trace: Trace, m: int, axis_tol: float = 1e-9) -> Mesh:
    """Revolve a planar trace about the line L(0, x) into a closed
    triangulated sphere.

    The trace must reach the axis at both ends (every rotation-invariant
    metric circle of this package does, at its two axis intersection
    points); those two vertices become the poles.  Revolution samples are
    uniform in the rotation angle.
    """
    if m < 3:
        raise DomainError("need at least 3 revolution steps")
    if len(trace.vertices) < 3:
        raise DomainError("trace too short to revolve")
    xc = complex(trace.center.coords[0], trace.center.coords[1])
    ys = trace.vertex_complex()
    if xc == 0:
        axis = 1.0 + 0j
    else:
        axis = xc / abs(xc)
    # profile coordinates: xi along the axis, eta across it
    rel = ys * np.conj(axis)
    xi = rel.real
    eta = rel.imag
    eta = np.where(np.abs(eta) <= axis_tol, 0.0, eta)
    keep = eta >= 0.0
    xi, eta = xi[keep], eta[keep]
    phi = np.angle((xi - abs(xc)) + 1j * eta) % (2.0 * math.pi)
    order = np.argsort(phi)
    xi, eta = xi[order], eta[order]
    if eta[0] != 0.0 or eta[-1] != 0.0:
        raise DomainError("trace does not reach the revolution axis")
    # collapse any duplicated axis points
    interior = (eta > 0.0)
    prof_xi = np.concatenate([[xi[0]], xi[interior], [xi[-1]]])
    prof_eta = np.concatenate([[0.0], eta[interior], [0.0]])
    p = len(prof_xi)
    if p < 3:
        raise DomainError("profile needs an interior vertex to revolve")

    # embed: axis direction in 3D, eta revolves through (n_hat, z_hat)
    a3 = np.array([axis.real, axis.imag, 0.0])
    n3 = np.array([-axis.imag, axis.real, 0.0])
    b3 = np.array([0.0, 0.0, 1.0])
    psi = np.linspace(0.0, 2.0 * math.pi, m, endpoint=False)
    ring_dirs = np.outer(np.cos(psi), n3) + np.outer(np.sin(psi), b3)

    verts = [prof_xi[0] * a3]
    for i in range(1, p - 1):
        verts.extend(prof_xi[i] * a3 + prof_eta[i] * ring_dirs)
    verts.append(prof_xi[-1] * a3)
    verts = np.array(verts)

    faces = []
    def ring(i):  # index of the first vertex of interior ring i (0-based)
        return 1 + i * m
    rings = p - 2
    for j in range(m):
        jn = (j + 1) % m
        faces.append((0, ring(0) + j, ring(0) + jn))
    for i in range(rings - 1):
        for j in range(m):
            jn = (j + 1) % m
            a_, b_ = ring(i) + j, ring(i) + jn
            c_, d_ = ring(i + 1) + j, ring(i + 1) + jn
            faces.append((a_, c_, d_))
            faces.append((a_, d_, b_))
    last = ring(rings - 1)
    top = len(verts) - 1
    for j in range(m):
        jn = (j + 1) % m
        faces.append((top, last + jn, last + j))
    return Mesh(vertices=verts, faces=np.array(faces, dtype=int))


# ---------------------------------------------------------------------------
# serialization


def trace_to_csv(trace: Trace) -> str:
    """CSV with header re,im,residual, one vertex per line, LF endings."""
    lines = ["re,im,residual"]
    for v, r in zip(trace.vertices, trace.residuals):
        lines.append("%r,%r,%r" % (v.coords[0], v.coords[1], r))
    return "\n".join(lines) + "\n"


def mesh_to_obj(mesh: Mesh) -> str:
    """OBJ-style text: v lines then 1-based f lines."""
    lines = []
    for v in mesh.vertices:
        lines.append("v %r %r %r" % (v[0], v[1], v[2]))
    for f in mesh.faces:
        lines.append("f %d %d %d" % (f[0] + 1, f[1] + 1, f[2] + 1))
    return "\n".join(lines) + "\n"
