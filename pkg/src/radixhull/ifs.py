"""The contractions f_a(x) = (x + a)/q and point clouds of the representable set."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from .geometry import DEFAULT_TOL, ToleranceConfig, extremal_points
from .hull import BaseSpec, conv_lambda
from .numsys import Alphabet, _alphabet

CLOUD_CAP = 2**24


@dataclass(frozen=True)
class IfsMap:
    digit: float
    base: BaseSpec

    def __call__(self, x):
        return apply_map(self, x)


def apply_map(f: IfsMap, x):
    return (x + f.digit) / f.base.q


def ifs_maps(base: BaseSpec, A) -> list[IfsMap]:
    return [IfsMap(a, base) for a in _alphabet(A)]


def _xy(points: np.ndarray) -> np.ndarray:
    return np.column_stack([points.real, points.imag])


def dedupe(points, tol: float) -> np.ndarray:
    """Keep the first point of every cluster of points closer than ``tol``."""
    pts = np.asarray(points, dtype=complex).ravel()
    if pts.size < 2:
        return pts.copy()
    pairs = cKDTree(_xy(pts)).query_pairs(tol, output_type="ndarray")
    if len(pairs) == 0:
        return pts.copy()
    graph = coo_matrix((np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(pts.size, pts.size))
    _, labels = connected_components(graph, directed=False)
    _, first = np.unique(labels, return_index=True)
    return pts[np.sort(first)]


def hutchinson_step(base: BaseSpec, A, X, dedup: bool = True, tol: float = 1e-12) -> np.ndarray:
    """F(X): the union of the images of X under every digit map."""
    X = np.asarray(X, dtype=complex).ravel()
    out = np.concatenate([(X + a) / base.q for a in _alphabet(A)])
    return dedupe(out, tol) if dedup else out


def same_point_set(X, Y, tol: float = 1e-12) -> bool:
    """Every point of each set lies within ``tol`` of the other set."""
    X = np.asarray(X, dtype=complex).ravel()
    Y = np.asarray(Y, dtype=complex).ravel()
    if X.size == 0 or Y.size == 0:
        return X.size == Y.size
    dx, _ = cKDTree(_xy(Y)).query(_xy(X))
    dy, _ = cKDTree(_xy(X)).query(_xy(Y))
    return bool(max(dx.max(), dy.max()) <= tol)


@dataclass(frozen=True)
class PointCloud:
    points: np.ndarray = field(repr=False)
    depth: int
    base: BaseSpec
    alphabet: Alphabet
    anchor: complex = 0j

    def __len__(self) -> int:
        return len(self.points)

    def words(self) -> list[str]:
        """Digit-index strings in the enumeration order of ``points``."""
        return digit_words(len(self.alphabet), self.depth)


def digit_words(m: int, depth: int) -> list[str]:
    if depth == 0:
        return [""]
    sep = "" if m <= 10 else "."
    words = [""]
    for _ in range(depth):
        words = [w + sep + str(i) if w and sep else w + str(i) for w in words for i in range(m)]
    return words


def max_depth(m: int, cap: int = CLOUD_CAP) -> int:
    if m <= 1:
        return 64
    d = 0
    while m ** (d + 1) <= cap:
        d += 1
    return d


def cloud(
    base: BaseSpec, A, depth: int, anchor: complex | None = None, dedup: bool = False, tol: float = 1e-12
) -> PointCloud:
    """All expansions of length ``depth`` in lexicographic digit order.

    Each digit string x_1..x_d gives ``sum x_j q**-j + q**-d * anchor``.  The
    default anchor is min(A)/(q - 1), the expansion repeating the smallest
    digit forever, so every point belongs to the representable set; for
    alphabets with least digit 0 this is the plain truncated sum.
    """
    A = _alphabet(A)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    m = len(A)
    if m**depth > CLOUD_CAP:
        raise ValueError(
            f"cloud cap exceeded: {m}**{depth} > 2**24; smallest violating depth is {max_depth(m) + 1}"
        )
    if anchor is None:
        anchor = A.min / (base.q - 1)
    digits = np.array(A.digits, dtype=float)
    pts = np.zeros(1, dtype=complex)
    for j in range(1, depth + 1):
        pts = (pts[:, None] + digits[None, :] * base.power(-j)).ravel()
    pts = pts + base.power(-depth) * complex(anchor)
    if dedup:
        pts = dedupe(pts, tol)
    return PointCloud(pts, depth, base, A, complex(anchor))


def hausdorff_to_hull(pc: PointCloud, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Largest distance from an extremal point of the hull to the cloud."""
    if len(pc) == 0:
        raise ValueError("empty cloud")
    E = extremal_points(conv_lambda(pc.base, pc.alphabet), tol)
    # few hull vertices, so a direct scan beats building a tree over the cloud
    return max(float(np.min(np.abs(pc.points - e))) for e in E)


def tail_bound(base: BaseSpec, A, depth: int) -> float:
    """max|A| * p**-depth / (p - 1), the size of any expansion tail."""
    A = _alphabet(A)
    return max(abs(A.min), abs(A.max)) * base.p ** (-depth) / (base.p - 1.0)


@dataclass(frozen=True)
class Witness:
    first: complex
    second: complex
    midpoint: complex
    distance: float
    radius: float


def nonconvexity_witness(
    base: BaseSpec,
    A,
    coarse_depth: int = 10,
    fine_depth: int = 14,
    max_pairs: int = 1 << 20,
    seed: int = 0,
    fine_cap: int = 1 << 22,
) -> Witness | None:
    """Search for a midpoint of two representable numbers that is not representable.

    A point of the representable set is within ``r = p**-fine * diam(hull)``
    of the fine cloud, so a midpoint of two coarse-cloud points farther than
    ``r`` from every fine point proves the set is not convex.  ``None`` means
    no witness was visible at this resolution.  The fine depth is lowered
    when the alphabet is too large for ``fine_cap`` points.
    """
    A = _alphabet(A)
    m = len(A)
    if m < 2:
        return None
    fine_depth = min(fine_depth, max_depth(m, fine_cap))
    coarse_depth = min(coarse_depth, fine_depth)
    hull = conv_lambda(base, A)
    radius = base.p ** (-fine_depth) * hull.diameter
    coarse = cloud(base, A, coarse_depth).points
    fine = dedupe(cloud(base, A, fine_depth).points, 1e-13 * max(hull.diameter, 1.0))
    tree = cKDTree(_xy(fine))
    k = coarse.size
    if k * (k - 1) // 2 <= max_pairs:
        i, j = np.triu_indices(k, 1)
    else:
        rng = np.random.default_rng(seed)
        i = rng.integers(0, k, max_pairs)
        j = rng.integers(0, k, max_pairs)
    best = None
    chunk = 1 << 18
    for s in range(0, len(i), chunk):
        ii, jj = i[s : s + chunk], j[s : s + chunk]
        mids = (coarse[ii] + coarse[jj]) / 2
        d, _ = tree.query(_xy(mids))
        a = int(np.argmax(d))
        if best is None or d[a] > best[0]:
            best = (float(d[a]), int(ii[a]), int(jj[a]))
    dist, a, b = best
    if dist <= radius * (1.0 + 1e-9) + 1e-12:
        return None
    return Witness(complex(coarse[a]), complex(coarse[b]), complex((coarse[a] + coarse[b]) / 2), dist, radius)
