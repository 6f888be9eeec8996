"""Planar geometry on complex numbers.

Points are plain Python ``complex`` values.  Polygons keep their vertices in
cyclic order; edge ``h`` runs from ``vertices[h - 1]`` to ``vertices[h]`` and
its normal is ``perp(vertices[h] - vertices[h - 1])``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

PlanarPoint = complex

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ToleranceConfig:
    angle_tol: float = 1e-9
    coord_tol: float = 1e-9

    def __post_init__(self):
        for name in ("angle_tol", "coord_tol"):
            value = getattr(self, name)
            if not (0.0 < value < 1e-3):
                raise ValueError(f"{name} must lie in (0, 1e-3), got {value!r}")


DEFAULT_TOL = ToleranceConfig()


def dot(u: complex, v: complex) -> float:
    return u.real * v.real + u.imag * v.imag


def cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def perp(v: complex) -> complex:
    """Rotate by -pi/2, i.e. multiply by -i."""
    return complex(v.imag, -v.real)


def arg(v: complex) -> float:
    """Argument of ``v`` in [0, 2*pi)."""
    a = math.atan2(v.imag, v.real)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:
        a = 0.0
    return a


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


@dataclass(frozen=True)
class Polygon:
    """Ordered vertex list, possibly degenerate (a point or a segment).

    ``normal_classes`` optionally labels each edge normal with an exact
    direction class: class ``c`` stands for the angle ``2*pi*c/class_period``.
    Polygons built from the translation recursion carry them so parallelism
    checks need no tolerance.
    """

    vertices: tuple[complex, ...]
    normal_classes: tuple[int, ...] | None = field(default=None, compare=False, repr=False)
    class_period: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        if not verts:
            raise ValueError("a polygon needs at least one vertex")
        if not all(_finite(v) for v in verts):
            raise ValueError("polygon vertices must be finite")
        object.__setattr__(self, "vertices", verts)
        if self.normal_classes is not None:
            if len(self.normal_classes) != len(verts) or self.class_period <= 0:
                raise ValueError("normal_classes must match the vertex count")
            object.__setattr__(
                self, "normal_classes", tuple(int(c) % self.class_period for c in self.normal_classes)
            )

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @cached_property
    def diameter(self) -> float:
        v = np.asarray(self.vertices)
        return float(np.max(np.abs(v[:, None] - v[None, :]))) if len(v) > 1 else 0.0

    @cached_property
    def orientation(self) -> str:
        return orientation(self)

    def reversed(self) -> Polygon:
        return Polygon(self.vertices[::-1])

    def affine(self, scale: complex = 1.0, shift: complex = 0.0) -> Polygon:
        """Image under ``z -> scale * z + shift``.

        Exact normal classes survive only a positive real scale.
        """
        verts = tuple(scale * v + shift for v in self.vertices)
        if isinstance(scale, (int, float)) and scale > 0:
            return Polygon(verts, self.normal_classes, self.class_period)
        return Polygon(verts)


def _as_polygon(P: Polygon | Iterable[complex]) -> Polygon:
    return P if isinstance(P, Polygon) else Polygon(tuple(P))


def _scale(P: Polygon) -> float:
    d = P.diameter
    if d > 0.0:
        return d
    return max(1.0, max(abs(v) for v in P.vertices))


def edge_normals(P: Polygon, tol: ToleranceConfig = DEFAULT_TOL) -> list[complex]:
    P = _as_polygon(P)
    H = len(P)
    if H < 2:
        raise ValueError("edge normals need at least two vertices")
    eps = tol.coord_tol * _scale(P)
    out = []
    for h in range(H):
        e = P.vertices[h] - P.vertices[h - 1]
        if abs(e) <= eps:
            raise ValueError("zero-length edge")
        out.append(perp(e))
    return out


def _clean(P: Polygon, tol: ToleranceConfig) -> Polygon:
    """Drop consecutive (cyclically) coincident vertices."""
    if len(P) < 2:
        return P
    eps = tol.coord_tol * _scale(P)
    verts = list(P.vertices)
    keep = [v for i, v in enumerate(verts) if abs(v - verts[i - 1]) > eps]
    if not keep:
        return Polygon((verts[0],))
    if len(keep) == len(verts):
        return P
    return Polygon(tuple(keep))


def _normal_angles(P: Polygon, tol: ToleranceConfig) -> tuple[list, float, float]:
    """Normal directions as (values, period, tolerance)."""
    if P.normal_classes is not None:
        return list(P.normal_classes), P.class_period, 0
    return [arg(n) for n in edge_normals(P, tol)], TWO_PI, tol.angle_tol


def _turns(values: Sequence, period, eps) -> list:
    """Counter-clockwise turn between the normals meeting at each vertex."""
    H = len(values)
    out = []
    for h in range(H):
        d = (values[(h + 1) % H] - values[h]) % period
        if eps and (d <= eps or d >= period - eps):
            d = 0
        out.append(d)
    return out


def _winds_once(turns: Sequence, period, eps) -> bool:
    # every turn at most half a revolution and one revolution in total;
    # equivalent to at most one cyclic descent of the normal arguments
    half = period / 2
    if any(t > half + eps for t in turns):
        return False
    slack = eps * len(turns) if eps else 0
    return abs(sum(turns) - period) <= slack


def orientation(P: Polygon, tol: ToleranceConfig = DEFAULT_TOL) -> str:
    """'ccw', 'cw' or 'neither'.  Points and segments report 'ccw'."""
    P = _clean(_as_polygon(P), tol)
    if len(P) <= 2:
        return "ccw"
    values, period, eps = _normal_angles(P, tol)
    if _winds_once(_turns(values, period, eps), period, eps):
        return "ccw"
    if _winds_once(_turns(values[::-1], period, eps), period, eps):
        return "cw"
    return "neither"


def is_convex(P: Polygon, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return orientation(P, tol) in ("ccw", "cw")


def ccw(P: Polygon, tol: ToleranceConfig = DEFAULT_TOL) -> Polygon:
    """Return ``P`` with counter-clockwise vertex order; reject non-convex input."""
    P = _as_polygon(P)
    o = orientation(P, tol)
    if o == "neither":
        raise ValueError("convexity precondition violated")
    if o == "cw":
        return Polygon(P.vertices[::-1])
    return P


def extremal_points(P: Polygon, tol: ToleranceConfig = DEFAULT_TOL) -> list[complex]:
    """Vertices whose adjacent edges are not parallel, in cyclic order."""
    P = _clean(_as_polygon(P), tol)
    if len(P) <= 2:
        return list(P.vertices)
    values, period, eps = _normal_angles(P, tol)
    turns = _turns(values, period, eps)
    return [v for v, t in zip(P.vertices, turns) if t != 0]


def contains_point(P: Polygon, x: complex, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Half-plane test ``(x - v_h) . n_h <= 0`` for every edge, with slack."""
    P = ccw(P, tol)
    slack = tol.coord_tol * _scale(P)
    E = extremal_points(P, tol)
    x = complex(x)
    if len(E) == 1:
        return abs(x - E[0]) <= slack
    if len(E) == 2:
        a, b = E
        d = b - a
        s = dot(x - a, d) / dot(d, d)
        s = min(1.0, max(0.0, s))
        return abs(x - (a + s * d)) <= slack
    for h in range(len(E)):
        n = perp(E[h] - E[h - 1])
        if dot(x - E[h], n) > slack * abs(n):
            return False
    return True


def contains_points(P: Polygon, xs, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Vectorised :func:`contains_point` over an array of points."""
    xs = np.asarray(xs, dtype=complex)
    P = ccw(P, tol)
    E = extremal_points(P, tol)
    if len(E) <= 2:
        return np.array([contains_point(P, complex(x), tol) for x in xs.ravel()]).reshape(xs.shape)
    slack = tol.coord_tol * _scale(P)
    ok = np.ones(xs.shape, dtype=bool)
    for h in range(len(E)):
        n = perp(E[h] - E[h - 1])
        d = xs - E[h]
        ok &= (d.real * n.real + d.imag * n.imag) <= slack * abs(n)
    return ok


def hull_oracle(points: Iterable[complex], tol: ToleranceConfig = DEFAULT_TOL) -> Polygon:
    """Monotone-chain convex hull, counter-clockwise, without degenerate vertices."""
    pts = np.asarray(list(points) if not isinstance(points, np.ndarray) else points, dtype=complex).ravel()
    if pts.size == 0:
        raise ValueError("hull of an empty point set")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    pts = pts[np.lexsort((pts.imag, pts.real))]
    scale = float(max(np.ptp(pts.real), np.ptp(pts.imag)))
    if scale == 0.0:
        return Polygon((complex(pts[0]),))
    eps = tol.coord_tol * scale
    seq = [complex(z) for z in pts]

    def chain(seq):
        out: list[complex] = []
        for p in seq:
            while len(out) >= 2:
                o, a = out[-2], out[-1]
                # drop a unless it lies strictly left of o->p by more than eps
                if cross(a - o, p - o) <= eps * abs(p - o):
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = chain(seq)
    upper = chain(reversed(seq))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and abs(hull[0] - hull[1]) <= eps:
        return Polygon((hull[0],))
    return Polygon(tuple(hull))


def canonical_equal(P: Polygon, Q: Polygon, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Same convex polygon up to start vertex, orientation and degenerate vertices."""
    P, Q = _as_polygon(P), _as_polygon(Q)
    EP = _canonical(P, tol)
    EQ = _canonical(Q, tol)
    if len(EP) != len(EQ):
        return False
    eps = tol.coord_tol * max(_scale(P), _scale(Q))
    # align Q on the vertex nearest to P's start; robust to ties in the lexicographic order
    j = min(range(len(EQ)), key=lambda k: abs(EQ[k] - EP[0]))
    H = len(EP)
    return all(abs(EP[i] - EQ[(i + j) % H]) <= eps for i in range(H))


def _canonical(P: Polygon, tol: ToleranceConfig) -> list[complex]:
    if orientation(P, tol) == "cw":
        P = Polygon(P.vertices[::-1])
    E = extremal_points(P, tol)
    start = min(range(len(E)), key=lambda k: (E[k].real, E[k].imag))
    return E[start:] + E[:start]


def diameter(points: Iterable[complex]) -> float:
    pts = np.asarray(list(points), dtype=complex)
    if pts.size < 2:
        return 0.0
    return float(np.max(np.abs(pts[:, None] - pts[None, :])))
