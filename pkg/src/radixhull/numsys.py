"""Alphabet-level results: the digit-gap convexity criterion, the slice test
for unions of horizontal translates, digit folding and the product
decomposition of a box point into cube corners.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence


from .geometry import DEFAULT_TOL, Polygon, ToleranceConfig, ccw, cross, extremal_points
from .hull import BaseSpec, build_P


@dataclass(frozen=True)
class Alphabet:
    digits: tuple[float, ...]

    def __post_init__(self):
        digits = tuple(float(a) for a in self.digits)
        if not digits:
            raise ValueError("an alphabet needs at least one digit")
        if not all(math.isfinite(a) for a in digits):
            raise ValueError("digits must be finite reals")
        if any(b <= a for a, b in zip(digits, digits[1:])):
            raise ValueError("digits must be strictly increasing")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def of(cls, digits: Iterable[float]) -> Alphabet:
        """Build from any iterable; sorts and rejects repeated digits."""
        ds = sorted(float(a) for a in digits)
        if len(set(ds)) != len(ds):
            raise ValueError("repeated digit in alphabet")
        return cls(tuple(ds))

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @property
    def min(self) -> float:
        return self.digits[0]

    @property
    def max(self) -> float:
        return self.digits[-1]

    @property
    def span(self) -> float:
        return self.digits[-1] - self.digits[0]

    def gaps(self) -> list[float]:
        return [b - a for a, b in zip(self.digits, self.digits[1:])]


def _alphabet(A) -> Alphabet:
    return A if isinstance(A, Alphabet) else Alphabet.of(A)


@dataclass(frozen=True)
class ConvexityReport:
    is_convex: bool
    max_gap: float
    threshold: float
    witness_gap_index: int | None = None


def horizontal_edge_length(base: BaseSpec) -> float:
    """Length of the edges of P_{n,p} parallel to the real axis.

    Only q**0 is real for odd n; for even n the edges along q**0 and
    q**(n/2) = -p**(n/2) merge.
    """
    if base.n % 2:
        return 1.0
    return 1.0 + base.p ** (base.n // 2)


def is_convex_lambda(
    base: BaseSpec, A, tol: ToleranceConfig = DEFAULT_TOL, rule: str = "gap"
) -> ConvexityReport:
    """Convexity of the representable set from the digit gaps alone.

    ``rule="gap"`` compares the largest gap with (max A - min A)/(p**n - 1).
    ``rule="slice"`` scales that threshold by the horizontal edge length of
    P_{n,p}, which is the exact condition for the union of translates to
    have interval slices; the two agree for odd n.
    """
    A = _alphabet(A)
    if rule not in ("gap", "slice"):
        raise ValueError(f"unknown rule {rule!r}")
    if len(A) < 2:
        return ConvexityReport(True, 0.0, 0.0, None)
    gaps = A.gaps()
    max_gap = max(gaps)
    threshold = A.span / (base.p_to_n - 1.0)
    if rule == "slice":
        threshold *= horizontal_edge_length(base)
    ok = max_gap <= threshold * (1.0 + tol.coord_tol)
    witness = None if ok else gaps.index(max_gap)
    return ConvexityReport(ok, max_gap, threshold, witness)


def _slice(E: Sequence[complex], y: float, eps: float) -> tuple[float, float] | None:
    xs = []
    for h in range(len(E)):
        u, v = E[h - 1], E[h]
        y0, y1 = u.imag, v.imag
        if abs(y1 - y0) <= eps:
            if abs(y - y0) <= eps:
                xs += [u.real, v.real]
        elif min(y0, y1) - eps <= y <= max(y0, y1) + eps:
            s = min(1.0, max(0.0, (y - y0) / (y1 - y0)))
            xs.append(u.real + s * (v.real - u.real))
    if not xs:
        return None
    return min(xs), max(xs)


def union_slices_convex(
    P: Polygon, ts: Sequence[float], samples: int = 64, tol: ToleranceConfig = DEFAULT_TOL
) -> bool:
    """Whether the union of P + t_i (real t_i) is convex, judged slice by slice.

    Slice widths are piecewise linear in the height with breaks at vertex
    heights, so checking those heights is already exact; ``samples`` extra
    uniform levels are a redundancy check.
    """
    P = ccw(P, tol)
    E = extremal_points(P, tol)
    ts = [float(t) for t in ts]
    if any(b < a for a, b in zip(ts, ts[1:])):
        raise ValueError("translations must be sorted ascending")
    if len(E) < 2:
        raise ValueError("proposition hypotheses not met: P is a single point")
    horiz = []
    for h in range(len(E)):
        e = E[h] - E[h - 1]
        if abs(cross(e, 1.0)) <= tol.angle_tol * abs(e):
            horiz.append(abs(e))
    if len(horiz) < 2 or min(horiz) < 1.0 - 1e-9:
        raise ValueError("proposition hypotheses not met: need two horizontal edges of length >= 1")
    if len(ts) < 2:
        return True
    diam = P.diameter
    eps = tol.coord_tol * max(diam, 1.0)
    ys = [v.imag for v in E]
    lo, hi = min(ys), max(ys)
    levels = sorted(set(ys) | {lo + (hi - lo) * j / (samples + 1) for j in range(1, samples + 1)})
    gap = max(b - a for a, b in zip(ts, ts[1:]))
    span_eps = eps + tol.coord_tol * max(abs(ts[0]), abs(ts[-1]))
    for y in levels:
        s = _slice(E, y, eps)
        if s is None:
            continue
        if gap > (s[1] - s[0]) + span_eps:
            return False
    return True


def criterion_verdicts(base: BaseSpec, A, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[bool, bool]:
    """(digit-gap criterion, slice geometry of the union of translates of P_{n,p})."""
    A = _alphabet(A)
    if len(A) < 2 or base.n < 2:
        raise ValueError("needs at least two digits and n >= 2")
    stated = is_convex_lambda(base, A, tol).is_convex
    factor = (base.p_to_n - 1.0) / A.span
    geo = union_slices_convex(build_P(base), [a * factor for a in A], tol=tol)
    return stated, geo


def criterion_matches_geometry(base: BaseSpec, A, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    stated, geo = criterion_verdicts(base, A, tol)
    return stated == geo


# -- folding and decomposition ---------------------------------------------


def fold_expansion(digits: Sequence[float], base: BaseSpec) -> list[float]:
    """Collapse digits x_1, x_2, ... into n real coordinates.

    Uses q**n = p**n: sum_j x_j q**-j = sum_k q**k * lam_k with
    lam_k = sum_J x_{Jn-k} p**(-Jn).
    """
    n = base.n
    if len(digits) % n:
        raise ValueError(f"digit count {len(digits)} is not a multiple of n={n}")
    blocks = len(digits) // n
    out = []
    for k in range(n):
        terms = [digits[J * n - k - 1] * base.p ** (-J * n) for J in range(1, blocks + 1)]
        out.append(math.fsum(terms))
    return out


def expansion_value(digits: Sequence[float], base: BaseSpec) -> complex:
    """sum_{j>=1} x_j q**-j over the finite digit list."""
    re = math.fsum(x * base.power(-j).real for j, x in enumerate(digits, start=1))
    im = math.fsum(x * base.power(-j).imag for j, x in enumerate(digits, start=1))
    return complex(re, im)


@dataclass(frozen=True)
class FarkasDecomposition:
    weights: dict[tuple[float, ...], float]

    def total(self) -> float:
        return math.fsum(self.weights.values())

    def value(self, base: BaseSpec) -> complex:
        """sum_h mu_h * sum_k q**k x_k^(h)."""
        re, im = [], []
        for seq, mu in self.weights.items():
            z = sum((x * base.power(k) for k, x in enumerate(seq)), 0j)
            re.append(mu * z.real)
            im.append(mu * z.imag)
        return complex(math.fsum(re), math.fsum(im))


def farkas_decompose(
    lambdas: Sequence[float], bounds: tuple[float, float], base: BaseSpec | None = None, cutoff: float = 1e-15
) -> FarkasDecomposition:
    """Write (lam_0, ..., lam_{n-1}) as a convex combination of corner sequences.

    Each coordinate is lam_k = a_k * hi + (1 - a_k) * lo; the corner weight
    is the product of a_k (hi taken) or 1 - a_k (lo taken).
    """
    lo, hi = (float(b) for b in bounds)
    if not lo < hi:
        raise ValueError("need lambda_min < lambda_max")
    if base is not None and len(lambdas) != base.n:
        raise ValueError(f"expected {base.n} coordinates, got {len(lambdas)}")
    slack = 1e-12 * max(1.0, abs(lo), abs(hi))
    alphas = []
    for lam in lambdas:
        if not (lo - slack <= lam <= hi + slack):
            raise ValueError(f"coordinate {lam!r} outside [{lo!r}, {hi!r}]")
        alphas.append(min(1.0, max(0.0, (lam - lo) / (hi - lo))))
    weights: dict[tuple[float, ...], float] = {}
    for corner in itertools.product((0, 1), repeat=len(alphas)):
        mu = 1.0
        for c, a in zip(corner, alphas):
            mu *= a if c else 1.0 - a
        if mu >= cutoff:
            weights[tuple(hi if c else lo for c in corner)] = mu
    return FarkasDecomposition(weights)
