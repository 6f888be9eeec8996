"""The weaker index-sign statement and the edge-length-aware convexity rule."""
import numpy as np
import pytest
from scipy.spatial import cKDTree

from radixhull.geometry import dot, extremal_points
from radixhull.hull import BaseSpec, build_P, closed_form_normals, closed_form_vertices, conv_lambda
from radixhull.ifs import cloud, nonconvexity_witness
from radixhull.numsys import criterion_verdicts, horizontal_edge_length, is_convex_lambda


@pytest.mark.parametrize("n", range(2, 13))
def test_index_signs_one_sided(n):
    # k in K gives a nonnegative product, k outside K a nonpositive one;
    # the product vanishes at k = (h-2) mod n, the direction of the incoming edge
    base = BaseSpec(n, 1.4)
    for f, (nv, _) in zip(closed_form_vertices(base), closed_form_normals(base)):
        for k in range(n):
            s = dot(base.power(k), nv) / (abs(nv) * abs(base.power(k)))
            if k in f.low_indices:
                assert s >= -1e-12
            else:
                assert s <= 1e-12
            if k == (f.h - 2) % n:
                assert abs(s) <= 1e-12


@pytest.mark.parametrize("n", range(2, 12, 2))
def test_even_horizontal_edges(n):
    base = BaseSpec(n, 1.3)
    E = extremal_points(build_P(base))
    horiz = [abs(E[h] - E[h - 1]) for h in range(len(E)) if abs((E[h] - E[h - 1]).imag) < 1e-9]
    assert horiz == pytest.approx([horizontal_edge_length(base)] * 2)


def test_n2_interval_threshold():
    # Lambda_{2,p,{0,1}} is a real set; it is an interval exactly for p <= 2
    for p in (1.5, 1.8, 1.99):
        base = BaseSpec(2, p)
        assert is_convex_lambda(base, [0, 1], rule="slice").is_convex
        assert criterion_verdicts(base, [0, 1])[1]
    for p in (2.05, 2.5):
        base = BaseSpec(2, p)
        assert not is_convex_lambda(base, [0, 1], rule="slice").is_convex
        assert nonconvexity_witness(base, [0, 1], coarse_depth=8, fine_depth=12) is not None
    assert nonconvexity_witness(BaseSpec(2, 1.8), [0, 1], coarse_depth=8, fine_depth=12) is None


def test_base_2i_fills_its_rectangle():
    base = BaseSpec(4, 2.0)
    A = [0, 1, 2, 3]
    hull = conv_lambda(base, A)
    assert len(extremal_points(hull)) == 4
    pts = cloud(base, A, 8).points
    E = np.array(extremal_points(hull))
    rng = np.random.default_rng(7)
    w = rng.dirichlet(np.ones(4), 4000)
    samples = w @ E
    d, _ = cKDTree(np.column_stack([pts.real, pts.imag])).query(np.column_stack([samples.real, samples.imag]))
    # every sampled point of the rectangle is within the depth-8 tail of an expansion
    assert d.max() <= 3 * 2.0**-8 / (2.0 - 1)
    assert is_convex_lambda(base, A, rule="slice").is_convex
