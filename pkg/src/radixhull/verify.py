"""Seeded invariant suites driven by ``radixhull verify``."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .geometry import DEFAULT_TOL, Polygon, canonical_equal, contains_points, dot, extremal_points, hull_oracle
from .hull import (
    BaseSpec,
    _parallel,
    build_P,
    closed_form_normals,
    closed_form_polygon,
    closed_form_vertices,
    conv_lambda,
    generate_X,
    predict_counts,
    translate_hull,
)
from .ifs import cloud, hausdorff_to_hull, hutchinson_step, same_point_set, tail_bound
from .numsys import criterion_verdicts, farkas_decompose, is_convex_lambda


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def parity_ok(n: int, parity: str) -> bool:
    return parity == "all" or (parity == "odd") == bool(n % 2)


def p_grid(n: int) -> list[float]:
    return [2.0 ** (1.0 / n), 1.2, 1.5, 2.0]


def base_grid(ns, parity: str = "all") -> Iterator[BaseSpec]:
    for n in ns:
        if parity_ok(n, parity):
            for p in p_grid(n):
                yield BaseSpec(n, p)


# -- random inputs ----------------------------------------------------------


def random_convex_polygon(rng: np.random.Generator) -> Polygon:
    """Hull of random points; a third of the time centrally symmetric."""
    kind = int(rng.integers(3))
    k = int(rng.integers(3, 13))
    pts = rng.uniform(-1, 1, k) + 1j * rng.uniform(-1, 1, k)
    if kind == 1:
        pts = np.concatenate([pts[: max(2, k // 2)], -pts[: max(2, k // 2)]])
    elif kind == 2:
        # points on an ellipse give many extremal points
        ang = np.sort(rng.uniform(0, 2 * np.pi, k))
        pts = np.cos(ang) * rng.uniform(0.5, 2) + 1j * np.sin(ang)
    return hull_oracle(pts)


def random_translation(rng: np.random.Generator, P: Polygon) -> complex:
    """Generic half the time, otherwise parallel to an extremal edge."""
    if rng.random() < 0.5:
        while True:
            t = complex(rng.normal(), rng.normal()) * rng.uniform(0.1, 3)
            if abs(t) > 1e-3:
                return t
    E = extremal_points(P)
    h = int(rng.integers(len(E)))
    return (E[h] - E[h - 1]) * float(rng.choice([-1, 1])) * rng.uniform(0.2, 2.5)


def random_alphabet(rng: np.random.Generator) -> list[float]:
    m = int(rng.integers(2, 6))
    if rng.random() < 0.5:
        return sorted(float(a) for a in rng.choice(np.arange(0, 12), m, replace=False))
    return sorted(float(a) for a in np.round(rng.uniform(-2, 5, m), 6))


def _base_info(base: BaseSpec) -> dict:
    return {"n": base.n, "p": base.p}


# -- suites -----------------------------------------------------------------


def oracle_suite(parity="all", seed=0) -> SuiteResult:
    r = SuiteResult("oracle-equivalence")
    for base in base_grid(range(1, 13), parity):
        a, b, c = build_P(base), hull_oracle(generate_X(base)), closed_form_polygon(base)
        r.cases += 1
        for name, u, v in (("build/oracle", a, b), ("build/closed", a, c), ("oracle/closed", b, c)):
            if not canonical_equal(u, v):
                r.counterexample = {**_base_info(base), "pair": name}
                return r
    return r


def counts_suite(parity="all", seed=0) -> SuiteResult:
    r = SuiteResult("extremal-counts")
    for base in base_grid(range(1, 13), parity):
        n = base.n
        E = extremal_points(build_P(base))
        want = 2 if n == 1 else (2 * n if n % 2 else n)
        r.cases += 1
        if len(E) != want:
            r.counterexample = {**_base_info(base), "count": len(E), "expected": want}
            return r
        dirs = [base.power(k) for k in range(n)]
        for h in range(len(E)):
            e = E[h] - E[h - 1]
            if not any(_parallel(e, d, DEFAULT_TOL) for d in dirs):
                r.counterexample = {**_base_info(base), "edge": h, "direction": [e.real, e.imag]}
                return r
    r.notes.append("counts " + ("2n" if parity == "odd" else "n" if parity == "even" else "2n (odd) / n (even)"))
    return r


def translation_suite(parity="all", seed=0, cases=1000) -> SuiteResult:
    r = SuiteResult("translation")
    rng = np.random.default_rng(seed)
    for _ in range(cases):
        P = random_convex_polygon(rng)
        t = random_translation(rng, P)
        got = translate_hull(P, t)
        want = hull_oracle(np.concatenate([np.array(P.vertices), np.array(P.vertices) + t]))
        r.cases += 1
        counts = (len(got), len(extremal_points(got)))
        if not canonical_equal(got, want) or counts != predict_counts(P, t):
            r.counterexample = {
                "polygon": [[v.real, v.imag] for v in P.vertices],
                "t": [t.real, t.imag],
                "counts": list(counts),
                "predicted": list(predict_counts(P, t)),
            }
            return r
    return r


def support_suite(parity="all", seed=0) -> SuiteResult:
    """Support inequality at every closed-form vertex plus the one-sided index signs it rests on."""
    r = SuiteResult("support-inequality")
    for base in base_grid(range(2, 13), parity):
        X = generate_X(base)
        P = build_P(base)
        slack = DEFAULT_TOL.coord_tol * max(1.0, P.diameter)
        fams = closed_form_vertices(base)
        normals = closed_form_normals(base)
        for f, (n_odd, n_even) in zip(fams, normals):
            pairs = [(f.low_vertex, n_odd, f.low_indices)]
            if base.n % 2:
                pairs.append((f.high_vertex, n_even, f.high_indices))
            for v, nv, K in pairs:
                u = nv / abs(nv)
                r.cases += 1
                worst = float(np.max((X - v).real * u.real + (X - v).imag * u.imag))
                if worst > slack:
                    r.counterexample = {**_base_info(base), "h": f.h, "excess": worst}
                    return r
                for k in range(base.n):
                    s = dot(base.power(k), u)
                    bad = s < -slack if k in K else s > slack
                    if bad:
                        r.counterexample = {**_base_info(base), "h": f.h, "k": k, "dot": s}
                        return r
    return r


def criterion_suite(parity="all", seed=0, cases=200) -> SuiteResult:
    """Digit-gap criterion against the slice geometry of the union of translates.

    Even n is expected to fail: there the horizontal edges of P_{n,p} are
    longer than 1, so the gap bound is sufficient but not necessary.
    """
    r = SuiteResult("criterion-agreement")
    rng = np.random.default_rng(seed)
    ns = [n for n in range(2, 9) if parity_ok(n, parity)]
    for _ in range(cases):
        base = BaseSpec(int(rng.choice(ns)), float(rng.uniform(1.01, 2.5)))
        A = random_alphabet(rng)
        stated, geo = criterion_verdicts(base, A)
        r.cases += 1
        if stated != geo:
            r.counterexample = {**_base_info(base), "alphabet": A, "criterion": stated, "geometry": geo}
            return r
    return r


def farkas_suite(parity="all", seed=0, cases=500) -> SuiteResult:
    r = SuiteResult("farkas")
    rng = np.random.default_rng(seed)
    ns = [n for n in range(1, 9) if parity_ok(n, parity)]
    for _ in range(cases):
        base = BaseSpec(int(rng.choice(ns)), float(rng.uniform(1.05, 3)))
        lo = float(rng.uniform(-3, 1))
        hi = lo + float(rng.uniform(0.1, 4))
        lam = rng.uniform(lo, hi, base.n)
        k = rng.random(base.n) < 0.2
        lam[k] = rng.choice([lo, hi], int(k.sum()))
        dec = farkas_decompose(list(lam), (lo, hi), base)
        target = sum((float(l) * base.power(j) for j, l in enumerate(lam)), 0j)
        scale = max(1.0, sum(max(abs(lo), abs(hi)) * abs(base.power(j)) for j in range(base.n)))
        r.cases += 1
        resid = abs(dec.value(base) - target) / scale
        w = list(dec.weights.values())
        if resid > 1e-12 or min(w) < 0 or abs(dec.total() - 1) > 1e-12:
            r.counterexample = {**_base_info(base), "lambdas": list(map(float, lam)), "residual": resid}
            return r
    return r


def fixed_point_suite(parity="all", seed=0) -> SuiteResult:
    r = SuiteResult("fixed-point")
    rng = np.random.default_rng(seed)
    ns = [n for n in range(1, 7) if parity_ok(n, parity)]
    for _ in range(12):
        base = BaseSpec(int(rng.choice(ns)), float(rng.uniform(1.1, 2.5)))
        m = int(rng.integers(2, 4))
        A = sorted(float(a) for a in rng.choice(np.arange(-3, 6), m, replace=False))
        hull = conv_lambda(base, A)
        for d in range(0, 9):
            X = cloud(base, A, d).points
            Y = cloud(base, A, d + 1).points
            r.cases += 1
            if not same_point_set(Y, hutchinson_step(base, A, X), 1e-12 * max(1.0, hull.diameter)):
                r.counterexample = {**_base_info(base), "alphabet": A, "depth": d, "check": "hutchinson"}
                return r
            if not contains_points(hull, Y).all():
                r.counterexample = {**_base_info(base), "alphabet": A, "depth": d + 1, "check": "containment"}
                return r
    # Hausdorff bound on nonnegative two-digit alphabets that satisfy the criterion
    done = 0
    while done < 4:
        base = BaseSpec(int(rng.choice(ns)), float(rng.uniform(1.05, 2.0)))
        A = [0.0, float(rng.uniform(0.5, 3))]
        if not is_convex_lambda(base, A).is_convex:
            continue
        done += 1
        for d in (6, 10, 14):
            pc = cloud(base, A, d)
            dist = hausdorff_to_hull(pc)
            bound = tail_bound(base, A, d)
            r.cases += 1
            if dist > bound * (1 + 1e-9):
                r.counterexample = {**_base_info(base), "alphabet": A, "depth": d, "distance": dist, "bound": bound}
                return r
    return r


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "oracle": oracle_suite,
    "counts": counts_suite,
    "translation": translation_suite,
    "support": support_suite,
    "criterion": criterion_suite,
    "farkas": farkas_suite,
    "fixed-point": fixed_point_suite,
}


def run_suites(names=None, parity: str = "all", seed: int = 0) -> list[SuiteResult]:
    if parity not in ("all", "odd", "even"):
        raise ValueError(f"unknown parity {parity!r}")
    names = list(SUITES) if not names else names
    out = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        out.append(SUITES[name](parity=parity, seed=seed))
    return out
