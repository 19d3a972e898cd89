"""Line integrals in polar n-complex space and residue evaluation.

A loop integral of ``du / (u - u0)`` picks up ``2 pi et_k`` for every turn of
the loop's projection on the (xi_k, eta_k) plane around the projection of
u0; the azimuthal angles phi_k are the only cyclic variables.
"""
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .canonical import e_tilde, npairs, transform_matrix
from .core import PolarNComplex, inverse
from .elementary import pow as npow
from .errors import DimensionMismatch, PointOnPath
from .series import PowerSeries, evaluate, series_derivative

DEFAULT_NODES = 16
ON_PATH_RTOL = 1e-12


@dataclass(frozen=True)
class ClosedPath:
    """Polyline through ``vertices``; when ``closed`` the last vertex joins the first."""

    vertices: tuple
    closed: bool = True

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(verts) < (3 if self.closed else 2):
            raise ValueError("a closed path needs at least 3 vertices, an open one 2")
        n = verts[0].n
        for v in verts:
            if v.n != n:
                raise DimensionMismatch("path vertices of different dimension")
        for a, b in zip(verts, verts[1:]):
            if np.array_equal(a.x, b.x):
                raise ValueError("consecutive duplicate vertices")
        object.__setattr__(self, "vertices", verts)

    @property
    def n(self):
        return self.vertices[0].n

    def segments(self):
        v = self.vertices
        pairs = list(zip(v, v[1:]))
        if self.closed:
            pairs.append((v[-1], v[0]))
        return pairs


def circle_path(center, k, radius, vertices=64, turns=1, offset=None):
    """Polygonal loop turning ``turns`` times in the (xi_k, eta_k) plane around ``center``.

    ``k`` may be a sequence of sector indices, in which case the loop turns
    in all of those planes at once. ``offset`` (an n-complex number) is added
    to every vertex; use it to keep the other sectors of ``u - center`` away
    from zero.
    """
    ks = [k] if isinstance(k, int) else list(k)
    n = center.n
    planes = [_plane_rows(n, kk) for kk in ks]
    base = center if offset is None else center + offset
    sign = 1 if turns >= 0 else -1
    pts = []
    for j in range(vertices * abs(turns)):
        t = sign * 2 * math.pi * j / vertices
        step = sum(radius * (math.cos(t) * rows[0] + math.sin(t) * rows[1]) for rows in planes)
        pts.append(PolarNComplex(base.x + step))
    return ClosedPath(tuple(pts))


def _plane_rows(n, k):
    K = npairs(n)
    if not 1 <= k <= K:
        raise IndexError(f"sector index {k} outside 1..{K}")
    T = transform_matrix(n)
    start = 2 if n % 2 == 0 else 1
    return T[start + 2 * (k - 1): start + 2 * k]


def project(obj, k):
    """(xi_k, eta_k) coordinates of a point, or the projected loop of a path."""
    if isinstance(obj, ClosedPath):
        rows = _plane_rows(obj.n, k)
        return np.array([rows @ v.x for v in obj.vertices])
    rows = _plane_rows(obj.n, k)
    a, b = rows @ obj.x
    return (float(a), float(b))


def _point_segment_distance(m, a, b):
    ab = b - a
    denom = float(ab @ ab)
    t = 0.0 if denom == 0 else min(1.0, max(0.0, float((m - a) @ ab) / denom))
    return float(np.linalg.norm(m - (a + t * ab)))


def winding(m, c, k=None):
    """Integer winding number of loop ``c`` (points in order) around ``m``."""
    m = np.asarray(m, dtype=float)
    c = np.asarray(c, dtype=float)
    diameter = float(np.max(np.linalg.norm(c[:, None, :] - c[None, :, :], axis=-1)))
    tol = ON_PATH_RTOL * max(diameter, 1e-300)
    nxt = np.roll(c, -1, axis=0)
    for a, b in zip(c, nxt):
        if _point_segment_distance(m, a, b) <= tol:
            raise PointOnPath(k)
    da = c - m
    db = nxt - m
    cross = da[:, 0] * db[:, 1] - da[:, 1] * db[:, 0]
    dot = (da * db).sum(axis=1)
    total = np.arctan2(cross, dot).sum()
    return int(round(total / (2 * math.pi)))


@lru_cache(maxsize=None)
def _gauss_legendre(nodes):
    t, w = np.polynomial.legendre.leggauss(nodes)
    t.flags.writeable = False
    w.flags.writeable = False
    return t, w


def contour_integral(f, path, steps_per_segment=DEFAULT_NODES):
    """Sum over segments of Gauss-Legendre quadrature of f(u) du."""
    t, w = _gauss_legendre(steps_per_segment)
    total = np.zeros(path.n)
    for a, b in path.segments():
        du = b - a
        acc = np.zeros(path.n)
        for ti, wi in zip(t, w):
            point = PolarNComplex(a.x + 0.5 * (ti + 1.0) * du.x)
            acc += wi * f(point).x
        total += 0.5 * (PolarNComplex(acc) * du).x
    return PolarNComplex(total)


def windings(u0, path):
    """Winding number of each projected loop around the projected point, k = 1..K."""
    out = []
    for k in range(1, npairs(path.n) + 1):
        out.append(winding(project(u0, k), project(path, k), k=k))
    return out


def _residue_unit(u0, path):
    out = PolarNComplex.zero(path.n)
    for k, wk in enumerate(windings(u0, path), start=1):
        if wk:
            out = out + e_tilde(path.n, k) * (2 * math.pi * wk)
    return out


def residue_value(u0, path):
    """Closed form of the loop integral of 1/(u - u0): sum_k 2 pi et_k winding_k."""
    return _residue_unit(u0, path)


def cauchy_eval(f, u0, path):
    """Closed form of the loop integral of f(u)/(u - u0): f(u0) residue_value."""
    return _as_callable(f)(u0) * _residue_unit(u0, path)


def _as_callable(f):
    if isinstance(f, PowerSeries):
        return lambda u: evaluate(f, u)
    return f


def cauchy_derivative(f, u0, path, order, derivative=None, steps_per_segment=DEFAULT_NODES):
    """Loop integral of f(u)/(u - u0)^(order+1), numerically and in closed form.

    Returns ``(numeric, closed)``. The closed form is
    ``(2 pi / order!) f^(order)(u0) sum_k et_k winding_k``; the derivative
    comes from the recentered series when ``f`` is a :class:`PowerSeries`,
    otherwise from the ``derivative`` callable.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    fn = _as_callable(f)
    if isinstance(f, PowerSeries):
        deriv = series_derivative(f, u0, order)
    elif derivative is not None:
        deriv = derivative(u0)
    else:
        raise ValueError("closed form needs a PowerSeries or a derivative callable")
    numeric = contour_integral(
        lambda u: fn(u) * npow(u - u0, -(order + 1)), path, steps_per_segment
    )
    closed = deriv * _residue_unit(u0, path) * (1.0 / math.factorial(order))
    return numeric, closed


def residue_sum(poles, path):
    """2 pi sum_l sum_k et_k winding_k(u_l) r_l for poles ``[(u_l, r_l), ...]``."""
    out = PolarNComplex.zero(path.n)
    for u_l, r_l in poles:
        out = out + _residue_unit(u_l, path) * r_l
    return out


def reciprocal(u0):
    """The integrand 1/(u - u0)."""
    return lambda u: inverse(u - u0)
