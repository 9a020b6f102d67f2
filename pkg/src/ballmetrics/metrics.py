"""Metric evaluators on the unit ball: s, j, j*, and the hyperbolic metric.

The triangular ratio metric

    s(x, y) = |x - y| / inf_{|z|=1} (|x - z| + |z - y|)

has no elementary closed form for generic pairs, so ``s_ball`` minimizes
f(theta) = |x - e^{i theta}| + |e^{i theta} - y| after planar reduction:
a uniform theta-grid brackets the global minimum (f has at most two local
minima on the circle), golden-section shrinks the bracket, and a final
Newton polish drives the optimal-point characterization to zero: at the
minimizing boundary point z the ray from z to the origin bisects the
angle between the rays to x and y, so the signed angle sum is a root.

Closed-form special cases (points collinear with the origin; conjugate
pairs in the first quadrant) are exposed separately and double as
independent oracles for the minimizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConvergenceError, DomainError, NotCollinearError
from .geometry import PointB, PointLike, as_point, plane_embedding, reduce_to_plane

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_GOLDEN_WIDTH = 1e-10  # final golden-section bracket width


class MetricKind(Enum):
    S = "s"
    J = "j"
    JSTAR = "jstar"
    RHO = "rho"
    EUCLIDEAN = "euclidean"


@dataclass(frozen=True)
class SolveOpts:
    """Numerical controls for the s minimizer.

    grid_count samples bracket the global minimum; refine_tol bounds the
    bisection residual at the returned boundary point.
    """

    grid_count: int = 720
    refine_tol: float = 1e-12
    max_refine_iters: int = 60

    def __post_init__(self):
        if self.grid_count < 8:
            raise DomainError("grid_count must be >= 8")
        if self.refine_tol <= 0:
            raise DomainError("refine_tol must be positive")
        if self.max_refine_iters < 1:
            raise DomainError("max_refine_iters must be >= 1")


DEFAULT_OPTS = SolveOpts()


@dataclass(frozen=True)
class SValue:
    """s-metric value with the minimizing boundary point and the residual
    of its angle-bisection characterization."""

    value: float
    argmin_z: PointB
    bisection_residual: float
    converged: bool = True


def _validate_pair(x: PointLike, y: PointLike):
    px, py = as_point(x), as_point(y)
    if px.norm >= 1.0 or py.norm >= 1.0 or px.boundary or py.boundary:
        raise DomainError("metric arguments must lie strictly inside the unit ball")
    if px.n != py.n:
        raise DomainError("dimension mismatch: %d vs %d" % (px.n, py.n))
    return px, py


def _f_batch(a, br, bi, ct, st):
    """f(theta) = |a - z| + |z - b| on |z|=1, broadcast over pairs x angles."""
    da = (a - ct) ** 2 + st ** 2
    db = (br - ct) ** 2 + (bi - st) ** 2
    return np.sqrt(da) + np.sqrt(db)


def _residual_batch(a, br, bi, theta):
    """Signed angle-bisection residual at z = e^{i theta}.

    alpha (beta) is the signed angle from -z to x-z (y-z); at an interior
    minimum of f the two rays straddle -z symmetrically, so alpha + beta
    crosses zero transversally.
    """
    ct, st = np.cos(theta), np.sin(theta)
    mx, my = -ct, -st
    ux, uy = a - ct, -st
    wx, wy = br - ct, bi - st
    alpha = np.arctan2(mx * uy - my * ux, mx * ux + my * uy)
    beta = np.arctan2(mx * wy - my * wx, mx * wx + my * wy)
    return alpha + beta


def _solve_theta_batch(a, br, bi, opts: SolveOpts):
    """Vectorized minimizer of f(theta) for a batch of reduced pairs.

    f has at most two local minima on the circle and their values cross
    as the pair moves through symmetric configurations, so both grid
    basins are refined and the better one returned.

    Returns (theta, f(theta), residual, converged) arrays.
    """
    a = np.asarray(a, dtype=float)
    br = np.asarray(br, dtype=float)
    bi = np.asarray(bi, dtype=float)
    n = a.shape[0]
    grid = np.linspace(0.0, 2.0 * math.pi, opts.grid_count, endpoint=False)
    ct, st = np.cos(grid), np.sin(grid)
    f = _f_batch(a[:, None], br[:, None], bi[:, None], ct[None, :], st[None, :])
    local_min = (f <= np.roll(f, 1, axis=1)) & (f <= np.roll(f, -1, axis=1))
    masked = np.where(local_min, f, np.inf)
    rows = np.arange(n)
    i1 = np.argmin(masked, axis=1)
    masked[rows, i1] = np.inf
    i2 = np.argmin(masked, axis=1)
    i2 = np.where(np.isfinite(masked[rows, i2]), i2, i1)
    step = 2.0 * math.pi / opts.grid_count
    best = np.concatenate([i1, i2])
    a = np.tile(a, 2)
    br = np.tile(br, 2)
    bi = np.tile(bi, 2)
    lo = grid[best] - step
    hi = grid[best] + step

    # golden-section: one new f evaluation per iteration and pair
    width = hi - lo
    c = hi - _INVPHI * width
    d = lo + _INVPHI * width
    fc = _f_batch(a, br, bi, np.cos(c), np.sin(c))
    fd = _f_batch(a, br, bi, np.cos(d), np.sin(d))
    iters = int(math.ceil(math.log(_GOLDEN_WIDTH / (2.0 * step)) / math.log(_INVPHI)))
    for _ in range(iters):
        take_left = fc < fd
        lo = np.where(take_left, lo, c)
        hi = np.where(take_left, d, hi)
        width = hi - lo
        cand_c = hi - _INVPHI * width
        cand_d = lo + _INVPHI * width
        probe = np.where(take_left, cand_c, cand_d)
        f_probe = _f_batch(a, br, bi, np.cos(probe), np.sin(probe))
        c, d, fc, fd = (np.where(take_left, cand_c, d),
                        np.where(take_left, c, cand_d),
                        np.where(take_left, f_probe, fd),
                        np.where(take_left, fc, f_probe))

    theta_golden = 0.5 * (lo + hi)
    f_golden = _f_batch(a, br, bi, np.cos(theta_golden), np.sin(theta_golden))

    # Newton polish of the bisection residual, accepted only while |res| improves
    theta = theta_golden.copy()
    res = _residual_batch(a, br, bi, theta)
    h = 1e-7
    clip = 4.0 * step
    for _ in range(opts.max_refine_iters):
        active = np.abs(res) > opts.refine_tol
        if not np.any(active):
            break
        deriv = (_residual_batch(a, br, bi, theta + h)
                 - _residual_batch(a, br, bi, theta - h)) / (2.0 * h)
        safe = np.abs(deriv) > 1e-14
        delta = np.where(active & safe, -res / np.where(safe, deriv, 1.0), 0.0)
        delta = np.clip(delta, -clip, clip)
        cand = theta + delta
        cand_res = _residual_batch(a, br, bi, cand)
        improved = np.abs(cand_res) < np.abs(res)
        theta = np.where(improved, cand, theta)
        res = np.where(improved, cand_res, res)
        if not np.any(improved & (np.abs(res) > opts.refine_tol)):
            break

    # revert only a material escape from the golden basin (a wrong root sits
    # O(0.1) away and raises f far above rounding noise)
    f_final = _f_batch(a, br, bi, np.cos(theta), np.sin(theta))
    worse = f_final > f_golden + 1e-12 * (1.0 + f_golden)
    theta = np.where(worse, theta_golden, theta)
    f_final = np.where(worse, f_golden, f_final)
    res = np.where(worse, _residual_batch(a, br, bi, theta_golden), res)

    # fold the two refined basins back together, keeping the smaller f
    theta = theta.reshape(2, n)
    f_final = f_final.reshape(2, n)
    res = res.reshape(2, n)
    pick = np.argmin(f_final, axis=0)
    cols = np.arange(n)
    theta = theta[pick, cols]
    f_final = f_final[pick, cols]
    res = res[pick, cols]
    converged = np.abs(res) <= opts.refine_tol
    return theta, f_final, np.abs(res), converged


def s_ball(x: PointLike, y: PointLike, opts: SolveOpts = DEFAULT_OPTS) -> SValue:
    """Triangular ratio metric on the unit ball, any dimension n >= 2.

    Reduces the pair to the plane through x, y and the origin, minimizes
    f(theta) over the boundary circle, and polishes the minimizer by
    root-finding the angle-bisection residual.  Returns value 0 with the
    nearest boundary point as argmin when x = y.
    """
    px, py = _validate_pair(x, y)
    ax, ay = px.as_array(), py.as_array()
    dist = float(np.linalg.norm(ax - ay))
    e1, e2 = plane_embedding(px, py)
    if dist == 0.0:
        z = e1 if px.norm > 0 else np.array([1.0, 0.0] + [0.0] * (px.n - 2))
        return SValue(0.0, PointB(tuple(z), boundary=True), 0.0)
    pair = reduce_to_plane(px, py)
    theta, f, res, conv = _solve_theta_batch(
        np.array([pair.a]), np.array([pair.b.real]), np.array([pair.b.imag]), opts)
    zvec = math.cos(theta[0]) * e1 + math.sin(theta[0]) * e2
    zvec = zvec / np.linalg.norm(zvec)
    return SValue(dist / float(f[0]), PointB(tuple(zvec), boundary=True),
                  float(res[0]), bool(conv[0]))


def s_ball_many(x: PointLike, ys, opts: SolveOpts = DEFAULT_OPTS) -> np.ndarray:
    """Vectorized s(x, y_i) for one center and many 2D points.

    ys is an array of complex values or an (m, 2) array.  Used by the
    circle tracer's acceptance filter, where thousands of candidates are
    screened per call.
    """
    px = as_point(x)
    if px.norm >= 1.0:
        raise DomainError("center must lie strictly inside the unit ball")
    ys = np.asarray(ys)
    if ys.dtype != complex:
        ys = ys[..., 0] + 1j * ys[..., 1]
    xc = complex(px.coords[0], px.coords[1]) if px.n == 2 else None
    if xc is None:
        raise DomainError("s_ball_many expects a 2D center")
    if np.any(np.abs(ys) >= 1.0):
        raise DomainError("all points must lie strictly inside the unit ball")
    out = np.zeros(len(ys))
    nz = np.abs(ys - xc) > 0.0
    if not np.any(nz):
        return out
    ysel = ys[nz]
    # rotate each pair so x sits on the positive real axis
    if abs(xc) > 0.0:
        rot = np.conj(xc) / abs(xc)
        a = np.full(len(ysel), abs(xc))
        b = ysel * rot
    else:
        a = np.zeros(len(ysel))
        b = np.abs(ysel) + 0j
    _, f, _, _ = _solve_theta_batch(a, b.real, b.imag, opts)
    out[nz] = np.abs(ysel - xc) / f
    return out


def s_collinear(x: PointLike, y: PointLike) -> float:
    """Closed-form s for points collinear with the origin:
    |x-y| / (2 - |x+y|).  Exact by Lemma-level equality; also an upper
    bound for every pair."""
    px, py = _validate_pair(x, y)
    ax, ay = px.as_array(), py.as_array()
    cross = px.norm * py.norm * math.sin(_angle_between(ax, ay))
    if cross > 1e-12:
        raise NotCollinearError("points are not collinear with the origin "
                                "(cross norm %.3g)" % cross)
    return float(np.linalg.norm(ax - ay) / (2.0 - np.linalg.norm(ax + ay)))


def _angle_between(u, v):
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    c = float(np.dot(u, v)) / (nu * nv)
    return math.acos(min(1.0, max(-1.0, c)))


def s_conjugate(x: PointLike) -> float:
    """Closed-form s(x, conj(x)) for 2D x with Re(x) > 0 and Im(x) > 0.

    Equals |x| when x lies outside the circle |x - 1/2| = 1/2 and
    Im(x)/sqrt((1-Re x)^2 + Im(x)^2) otherwise; the two branches agree on
    the circle.
    """
    px = as_point(x)
    if px.n != 2:
        raise DomainError("s_conjugate is a planar formula")
    if px.norm >= 1.0:
        raise DomainError("point must lie inside the unit ball")
    re, im = px.coords
    if min(re, im) <= 0.0:
        raise DomainError("s_conjugate needs Re(x) > 0 and Im(x) > 0")
    if (re - 0.5) ** 2 + im ** 2 > 0.25:
        return px.norm
    return im / math.sqrt((1.0 - re) ** 2 + im ** 2)


def j_ball(x: PointLike, y: PointLike) -> float:
    """Distance ratio metric: log(1 + |x-y| / min(1-|x|, 1-|y|))."""
    px, py = _validate_pair(x, y)
    d = min(1.0 - px.norm, 1.0 - py.norm)
    return math.log1p(float(np.linalg.norm(px.as_array() - py.as_array())) / d)


def jstar_ball(x: PointLike, y: PointLike) -> float:
    """j*-metric: |x-y| / (|x-y| + 2 min(1-|x|, 1-|y|)) = th(j/2)."""
    px, py = _validate_pair(x, y)
    dist = float(np.linalg.norm(px.as_array() - py.as_array()))
    d = min(1.0 - px.norm, 1.0 - py.norm)
    return dist / (dist + 2.0 * d)


def rho_ball(x: PointLike, y: PointLike) -> float:
    """Hyperbolic metric of the unit ball:
    2 arsh(|x-y| / sqrt((1-|x|^2)(1-|y|^2)))."""
    px, py = _validate_pair(x, y)
    dist = float(np.linalg.norm(px.as_array() - py.as_array()))
    denom = math.sqrt((1.0 - px.norm ** 2) * (1.0 - py.norm ** 2))
    return 2.0 * math.asinh(dist / denom)


def metric_value(kind: MetricKind, x: PointLike, y: PointLike,
                 opts: SolveOpts = DEFAULT_OPTS) -> float:
    """Dispatch a metric evaluation by kind (Euclidean included)."""
    if kind is MetricKind.S:
        return s_ball(x, y, opts).value
    if kind is MetricKind.J:
        return j_ball(x, y)
    if kind is MetricKind.JSTAR:
        return jstar_ball(x, y)
    if kind is MetricKind.RHO:
        return rho_ball(x, y)
    if kind is MetricKind.EUCLIDEAN:
        px, py = as_point(x), as_point(y)
        return float(np.linalg.norm(px.as_array() - py.as_array()))
    raise DomainError("unknown metric kind %r" % (kind,))
