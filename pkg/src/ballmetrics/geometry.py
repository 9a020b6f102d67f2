"""Points of the unit ball, planar reduction, and angle utilities.

Every metric in this package is invariant under rotations about the
origin, so a pair (x, y) in dimension n >= 2 can be rotated into the
complex plane with x on the non-negative real axis.  All evaluators work
on that reduced pair; this module owns the reduction and the shared
angle helpers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import DegenerateError, DomainError

BOUNDARY_TOL = 1e-12

PointLike = Union["PointB", complex, float, int, Sequence[float], np.ndarray]


@dataclass(frozen=True)
class PointB:
    """A point of the closed unit ball in dimension n >= 2.

    Interior points have Euclidean norm < 1.  Boundary points (norm 1 to
    within 1e-12) use the same representation with ``boundary=True`` so
    that sphere points returned by the s-metric minimizer share all the
    arithmetic helpers.
    """

    coords: tuple
    boundary: bool = False

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) < 2:
            raise DomainError("points need dimension n >= 2, got %d" % len(coords))
        r = math.sqrt(math.fsum(c * c for c in coords))
        if self.boundary:
            if abs(r - 1.0) > BOUNDARY_TOL:
                raise DomainError("boundary point must have norm 1, got %.17g" % r)
        elif r >= 1.0:
            raise DomainError("point must lie in the open unit ball, |x| = %.17g" % r)

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def norm(self) -> float:
        return math.sqrt(math.fsum(c * c for c in self.coords))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=float)

    def as_complex(self) -> complex:
        if len(self.coords) != 2:
            raise DomainError("as_complex needs a 2D point, got n=%d" % len(self.coords))
        return complex(self.coords[0], self.coords[1])

    def __iter__(self):
        return iter(self.coords)


def as_point(value: PointLike, boundary: bool = False) -> PointB:
    """Coerce a point-like value to PointB.

    Accepts PointB, complex (re, im), a real scalar (x, 0), or any
    coordinate sequence of length >= 2.
    """
    if isinstance(value, PointB):
        return value
    if isinstance(value, complex):
        return PointB((value.real, value.imag), boundary)
    if isinstance(value, (int, float, np.floating, np.integer)):
        return PointB((float(value), 0.0), boundary)
    coords = tuple(float(c) for c in value)
    if len(coords) == 1:
        coords = (coords[0], 0.0)
    return PointB(coords, boundary)


@dataclass(frozen=True)
class PlanarPair:
    """A pair reduced to the complex plane: ``a`` real >= 0, ``b`` complex.

    Invariants: |a| < 1, |b| < 1, a >= 0, and |a - b| equals the original
    |x - y| to 1e-12.
    """

    a: float
    b: complex


def _frame(x: np.ndarray, y: np.ndarray):
    """Orthonormal basis (e1, e2) of a plane through 0 containing x and y.

    e1 follows x (or y, or the first axis when both vanish); e2 completes
    the frame deterministically.
    """
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    if nx > 0:
        e1 = x / nx
    elif ny > 0:
        e1 = y / ny
    else:
        e1 = np.zeros(len(x))
        e1[0] = 1.0
    y_perp = y - np.dot(y, e1) * e1
    np_norm = np.linalg.norm(y_perp)
    if np_norm > 1e-15 * max(ny, 1.0):
        e2 = y_perp / np_norm
    else:
        # x, y collinear: pick the axis least aligned with e1 and orthogonalize
        k = int(np.argmin(np.abs(e1)))
        axis = np.zeros(len(x))
        axis[k] = 1.0
        e2 = axis - np.dot(axis, e1) * e1
        e2 = e2 / np.linalg.norm(e2)
    return e1, e2


def reduce_to_plane(x: PointLike, y: PointLike) -> PlanarPair:
    """Rotate (x, y) into the complex plane with x on the positive real axis.

    Preserves (|x|, |y|, |x-y|), which is all any rotation-invariant
    metric of this package sees.
    """
    px, py = as_point(x), as_point(y)
    if px.norm >= 1.0 or py.norm >= 1.0:
        raise DomainError("reduce_to_plane needs interior points")
    if px.n != py.n:
        raise DomainError("dimension mismatch: %d vs %d" % (px.n, py.n))
    ax, ay = px.as_array(), py.as_array()
    na, nb = px.norm, py.norm
    if na == 0.0 or nb == 0.0:
        return PlanarPair(na, complex(nb, 0.0))
    c = float(np.dot(ax, ay)) / (na * nb)
    c = min(1.0, max(-1.0, c))
    s = math.sqrt(max(0.0, 1.0 - c * c))
    return PlanarPair(na, complex(nb * c, nb * s))


def plane_embedding(x: PointLike, y: PointLike):
    """Frame (e1, e2) realizing reduce_to_plane: a*e1 maps back to x and
    b.real*e1 + b.imag*e2 to y."""
    px, py = as_point(x), as_point(y)
    return _frame(px.as_array(), py.as_array())


def as_vector(value: PointLike) -> np.ndarray:
    """Coerce to a raw coordinate vector without ball-membership checks."""
    if isinstance(value, PointB):
        return value.as_array()
    if isinstance(value, complex):
        return np.array([value.real, value.imag])
    if isinstance(value, (int, float, np.floating, np.integer)):
        return np.array([float(value), 0.0])
    v = np.asarray(value, dtype=float)
    if v.ndim != 1 or len(v) < 2:
        raise DomainError("expected a coordinate vector of length >= 2")
    return v


def angle_at(vertex: PointLike, p: PointLike, q: PointLike) -> float:
    """Angle in [0, pi] at ``vertex`` between the rays to p and q.

    Uses an arccosine with the argument clamped to [-1, 1]; the clamp
    absorbs rounding in the near-collinear configurations that occur at
    inclusion-sharpness witnesses.  Arguments are treated as raw vectors;
    the vertex routinely lies on the unit sphere.
    """
    v = as_vector(vertex)
    u1 = as_vector(p) - v
    u2 = as_vector(q) - v
    n1 = np.linalg.norm(u1)
    n2 = np.linalg.norm(u2)
    if n1 < 1e-15 or n2 < 1e-15:
        raise DegenerateError("angle_at: direction vector shorter than 1e-15")
    c = float(np.dot(u1, u2)) / (n1 * n2)
    return math.acos(min(1.0, max(-1.0, c)))
