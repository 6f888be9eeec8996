"""Convex hull of the binary sums X_{n,p} and of the representable set.

``P_{n,p}`` is the hull of the ``2**n`` sums ``sum x_k q**k`` with binary
digits, ``q = p * exp(2*pi*i/n)``.  It is built three ways: brute force over
``X_{n,p}``, the translation recursion ``P_m = conv(P_{m-1} u (P_{m-1} + q**(m-1)))``
and the closed-form vertex families.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    TWO_PI,
    Polygon,
    _normal_angles,
    ToleranceConfig,
    arg,
    ccw,
    cross,
    extremal_points,
    perp,
)

ENUMERATION_CAP = 24


def _unit_root(k: int, n: int) -> complex:
    """exp(2*pi*i*k/n), exact on the axes."""
    k %= n
    if (4 * k) % n == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[4 * k // n]
    a = TWO_PI * k / n
    return complex(math.cos(a), math.sin(a))


@dataclass(frozen=True)
class BaseSpec:
    n: int
    p: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        p = float(self.p)
        if not math.isfinite(p) or p <= 1.0:
            raise ValueError(f"p must be a finite real > 1, got {self.p!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "p", p)

    @cached_property
    def q(self) -> complex:
        return self.power(1)

    @cached_property
    def _powers(self) -> tuple[complex, ...]:
        return tuple(self.p**k * _unit_root(k, self.n) for k in range(self.n))

    def power(self, k: int) -> complex:
        """q**k for any integer k, using q**n = p**n."""
        if 0 <= k < self.n:
            return self._powers[k]
        return self.p**k * _unit_root(k, self.n)

    @cached_property
    def p_to_n(self) -> float:
        return self.p**self.n


@dataclass(frozen=True)
class BinaryWord:
    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        if any(d not in (0, 1) for d in digits):
            raise ValueError("binary words take digits in {0, 1}")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def parse(cls, s: str) -> BinaryWord:
        return cls(tuple(int(c) for c in s.strip()))

    @classmethod
    def block(cls, ones: int, n: int) -> BinaryWord:
        """The word 1^ones 0^(n - ones)."""
        return cls((1,) * ones + (0,) * (n - ones))

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "".join(map(str, self.digits))


def _check_word(w: BinaryWord, base: BaseSpec) -> None:
    if len(w) != base.n:
        raise ValueError(f"word {w} has length {len(w)}, base needs {base.n}")


def word_value(w: BinaryWord, base: BaseSpec) -> complex:
    _check_word(w, base)
    total = 0j
    for k, x in enumerate(w.digits):
        if x:
            total += base.power(k)
    return total


def circular_shift(w: BinaryWord, h: int = 1) -> BinaryWord:
    """sigma**h: rotate the digits left by h places."""
    if not w.digits:
        return w
    h %= len(w)
    return BinaryWord(w.digits[h:] + w.digits[:h])


def orbit(w: BinaryWord) -> list[BinaryWord]:
    seen: list[BinaryWord] = []
    for h in range(max(len(w), 1)):
        s = circular_shift(w, h)
        if s not in seen:
            seen.append(s)
    return seen


def orbit_values(w: BinaryWord, base: BaseSpec, tol: ToleranceConfig = DEFAULT_TOL) -> list[complex]:
    _check_word(w, base)
    values = [word_value(circular_shift(w, h), base) for h in range(base.n)]
    eps = tol.coord_tol * max(1.0, max(abs(v) for v in values))
    out: list[complex] = []
    for v in values:
        if all(abs(v - u) > eps for u in out):
            out.append(v)
    return out


def generate_X(base: BaseSpec) -> np.ndarray:
    """All 2**n binary sums, words in lexicographic order (x_0 most significant)."""
    if base.n > ENUMERATION_CAP:
        raise ValueError(f"enumeration cap exceeded: n={base.n} > {ENUMERATION_CAP}")
    pts = np.array([0j, base.power(0)])
    for k in range(1, base.n):
        pts = (pts[:, None] + np.array([0j, base.power(k)])[None, :]).ravel()
    return pts


# -- translation hull ------------------------------------------------------


def _locate(values: Sequence, d, period, eps) -> int:
    """Index i with values[i] <= d < values[i+1] on the circle."""
    H = len(values)
    for i in range(H):
        width = (values[(i + 1) % H] - values[i]) % period
        delta = (d - values[i]) % period
        if eps:
            if width >= period - eps:
                width = 0
            if delta >= period - eps:
                delta = 0
        if delta < width - eps:
            return i
    raise ArithmeticError("no normal interval contains the translation direction")


def _translate(verts: Sequence[complex], values: Sequence, t: complex, d_minus, d_plus, period, eps):
    """Vertex and normal lists of conv(P u (P + t)) for counter-clockwise P."""
    H = len(verts)
    if H == 1:
        return [verts[0], verts[0] + t], [d_minus, d_plus]
    i1 = _locate(values, d_minus, period, eps)
    i2 = _locate(values, d_plus, period, eps)
    if i1 == i2:
        raise ArithmeticError("translation directions fell in one normal interval")
    k12 = (i2 - i1) % H
    k21 = (i1 - i2) % H
    new_verts = [verts[(i1 + j) % H] for j in range(k12 + 1)]
    new_verts += [verts[(i2 + j) % H] + t for j in range(k21 + 1)]
    new_values = [d_minus] + [values[(i1 + j) % H] for j in range(1, k12 + 1)]
    new_values += [d_plus] + [values[(i2 + j) % H] for j in range(1, k21 + 1)]
    return new_verts, new_values


def translate_hull(P: Polygon, t: complex, tol: ToleranceConfig = DEFAULT_TOL) -> Polygon:
    """conv(P u (P + t)) from P's vertex list; H + 2 vertices, possibly degenerate."""
    t = complex(t)
    if t == 0:
        raise ValueError("undefined translation direction")
    P = ccw(P, tol)
    if len(P) == 1:
        return Polygon((P.vertices[0], P.vertices[0] + t))
    if P.normal_classes is not None:
        # exact classes do not extend to an arbitrary t
        P = Polygon(P.vertices)
    values, period, eps = _normal_angles(P, tol)
    verts, _ = _translate(P.vertices, values, t, arg(perp(-t)), arg(perp(t)), period, eps)
    return Polygon(tuple(verts))


def _parallel(u: complex, v: complex, tol: ToleranceConfig) -> bool:
    return abs(cross(u, v)) <= tol.angle_tol * abs(u) * abs(v)


def predict_counts(P: Polygon, t: complex, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[int, int]:
    """(edges, extremal points) of conv(P u (P + t)) predicted from P alone."""
    t = complex(t)
    if t == 0:
        raise ValueError("undefined translation direction")
    P = ccw(P, tol)
    H = len(P)
    if H == 1:
        return 2, 2
    E = extremal_points(P, tol)
    edges = [E[h] - E[h - 1] for h in range(len(E))]
    k = sum(_parallel(e, t, tol) for e in edges)
    return H + 2, len(E) + 2 - k


def build_P(base: BaseSpec) -> Polygon:
    """P_{n,p} by the translation recursion, starting from the segment [0, 1].

    Normal directions are tracked as exact classes in units of pi/(2n):
    the normal of an edge along q**k is class 4k - n, along -q**k class 4k + n.
    """
    n = base.n
    period = 4 * n
    verts = [0j, 1 + 0j]
    values = [n, 3 * n]
    for m in range(1, n):
        t = base.power(m)
        verts, values = _translate(verts, values, t, (4 * m + n) % period, (4 * m - n) % period, period, 0)
    return Polygon(tuple(verts), tuple(values), period)


# -- closed form ------------------------------------------------------------


@dataclass(frozen=True)
class VertexFamily:
    h: int
    low_word: BinaryWord
    high_word: BinaryWord
    low_vertex: complex
    high_vertex: complex
    low_indices: frozenset[int]
    high_indices: frozenset[int]
    odd_normal: complex | None
    even_normal: complex | None


def _index_set(h: int, size: int, n: int) -> frozenset[int]:
    # {k : (k - h + 1) mod n <= size - 1}
    return frozenset((h - 1 + j) % n for j in range(size))


def closed_form_vertices(base: BaseSpec) -> list[VertexFamily]:
    n = base.n
    lo, hi = n // 2, (n + 1) // 2
    normals = closed_form_normals(base) if n >= 2 else [(None, None)] * n
    out = []
    for h in range(1, n + 1):
        K_lo, K_hi = _index_set(h, lo, n), _index_set(h, hi, n)
        w_lo = BinaryWord(tuple(int(k in K_lo) for k in range(n)))
        w_hi = BinaryWord(tuple(int(k in K_hi) for k in range(n)))
        out.append(
            VertexFamily(
                h=h,
                low_word=w_lo,
                high_word=w_hi,
                low_vertex=sum((base.power(k) for k in sorted(K_lo)), 0j),
                high_vertex=sum((base.power(k) for k in sorted(K_hi)), 0j),
                low_indices=K_lo,
                high_indices=K_hi,
                odd_normal=normals[h - 1][0],
                even_normal=normals[h - 1][1],
            )
        )
    return out


def closed_form_normals(base: BaseSpec) -> list[tuple[complex, complex]]:
    """Pairs (n_{2h-1}, n_{2h}) for h = 1..n."""
    n = base.n
    if n < 2:
        raise ValueError("normals undefined for segment by closed form")
    out = []
    for h in range(1, n + 1):
        odd = perp(-base.power((h - 2) % n))
        if n % 2:
            even = perp(base.power((h - 2 + (n + 1) // 2) % n))
        else:
            odd = (1.0 - base.p ** (-n / 2)) * odd
            even = 0j
        out.append((odd, even))
    return out


def closed_form_polygon(base: BaseSpec) -> Polygon:
    """conv{v_1, ..., v_2n} listed counter-clockwise; for even n only the v_2h."""
    fams = closed_form_vertices(base)
    if base.n % 2:
        verts = [v for f in fams for v in (f.low_vertex, f.high_vertex)]
    else:
        verts = [f.high_vertex for f in fams]
    return Polygon(tuple(verts))


def conv_lambda(base: BaseSpec, alphabet) -> Polygon:
    """Convex hull of the representable numbers for ``alphabet``."""
    from .numsys import Alphabet

    A = alphabet if isinstance(alphabet, Alphabet) else Alphabet.of(alphabet)
    scale, shift = hull_affine(base, A)
    if A.span == 0.0:
        return Polygon((shift,))
    return closed_form_polygon(base).affine(scale, shift)


def hull_affine(base: BaseSpec, alphabet) -> tuple[float, complex]:
    """(scale, shift) with conv(Lambda) = scale * P_{n,p} + shift."""
    from .numsys import Alphabet

    A = alphabet if isinstance(alphabet, Alphabet) else Alphabet.of(alphabet)
    denom = base.p_to_n - 1.0
    s = sum((base.power(k) for k in range(base.n)), 0j)
    return A.span / denom, A.min * s / denom
