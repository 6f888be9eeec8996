import math

import numpy as np
import pytest

from radixhull.geometry import (
    Polygon,
    ToleranceConfig,
    arg,
    canonical_equal,
    ccw,
    contains_point,
    contains_points,
    dot,
    edge_normals,
    extremal_points,
    hull_oracle,
    is_convex,
    orientation,
    perp,
)

SQUARE = Polygon((0, 1, 1 + 1j, 1j))
L_SHAPE = Polygon((0, 2, 2 + 1j, 1 + 1j, 1 + 2j, 2j))


def close(u, v, eps=1e-12):
    return abs(complex(u) - complex(v)) <= eps


def test_dot():
    assert dot(1, 1j) == 0
    assert dot(1, 1) == 1
    w = complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
    assert dot(1, w) == pytest.approx(-0.5)


def test_perp():
    assert perp(1) == -1j
    assert perp(1j) == 1
    assert perp(1 + 1j) == 1 - 1j


def test_arg_range():
    assert arg(1) == 0
    assert arg(-1j) == pytest.approx(1.5 * math.pi)
    assert 0 <= arg(complex(1, -1e-300)) < 2 * math.pi


@pytest.mark.parametrize(
    "verts, normals",
    [
        ((0, 1, 1 + 1j, 1j), (-1j, 1, 1j, -1)),
        ((0, 1), (-1j, 1j)),
        ((0, 1, 1j), (-1j, 1 + 1j, -1)),
    ],
)
def test_edge_normals(verts, normals):
    # normal h belongs to the edge ending at vertex h, so the list starting
    # with the edge v_1 -> v_2 is the result rotated by one
    got = edge_normals(Polygon(verts))
    got = got[1:] + got[:1]
    assert all(close(a, b) for a, b in zip(got, normals))


def test_zero_length_edge():
    with pytest.raises(ValueError, match="zero-length edge"):
        edge_normals(Polygon((0, 1, 1, 1j)))


def test_orientation():
    assert orientation(SQUARE) == "ccw"
    assert orientation(SQUARE.reversed()) == "cw"
    assert orientation(L_SHAPE) == "neither"
    assert orientation(Polygon((0, 1))) == "ccw"


def test_is_convex():
    assert is_convex(SQUARE)
    assert not is_convex(L_SHAPE)
    assert is_convex(Polygon((0, 0.5, 1, 1 + 1j, 1j)))


def test_self_intersecting_star_is_not_convex():
    star = Polygon(tuple(np.exp(2j * np.pi * 2 * k / 5) for k in range(5)))
    assert not is_convex(star)


def test_ccw_rejects_nonconvex():
    with pytest.raises(ValueError, match="convexity precondition violated"):
        ccw(L_SHAPE)
    assert orientation(ccw(SQUARE.reversed())) == "ccw"


def test_contains_point():
    assert contains_point(SQUARE, 0.5 + 0.5j)
    assert contains_point(SQUARE, 1 + 1j)
    assert not contains_point(SQUARE, 1.5 + 0.5j)


def test_contains_point_degenerate():
    seg = Polygon((0, 2))
    assert contains_point(seg, 1)
    assert not contains_point(seg, 1 + 0.1j)
    assert contains_point(Polygon((3j,)), 3j)


def test_contains_points_matches_scalar():
    rng = np.random.default_rng(0)
    xs = rng.uniform(-0.5, 1.5, 200) + 1j * rng.uniform(-0.5, 1.5, 200)
    assert list(contains_points(SQUARE, xs)) == [contains_point(SQUARE, x) for x in xs]


def test_hull_oracle_drops_interior():
    H = hull_oracle([0, 1, 1 + 1j, 1j, 0.5 + 0.5j])
    assert canonical_equal(H, SQUARE)
    assert len(H) == 4


def test_hull_oracle_collinear():
    H = hull_oracle([0, 1, 2])
    assert sorted(H.vertices, key=lambda z: z.real) == [0, 2]


def test_hull_oracle_single_point_and_empty():
    assert hull_oracle([1j, 1j]).vertices == (1j,)
    with pytest.raises(ValueError):
        hull_oracle([])


def test_extremal_points():
    sq_mid = Polygon((0, 0.5, 1, 1 + 1j, 1j))
    assert extremal_points(sq_mid) == [0, 1, 1 + 1j, 1j]
    hexagon = Polygon(tuple(np.exp(1j * np.pi * k / 3) for k in range(6)))
    assert extremal_points(hexagon) == list(hexagon.vertices)


def test_canonical_equal():
    assert canonical_equal(SQUARE, Polygon((1 + 1j, 1j, 0, 1)))
    assert canonical_equal(SQUARE, Polygon((0, 0.5, 1, 1 + 1j, 1j)))
    assert canonical_equal(SQUARE, SQUARE.reversed())
    assert not canonical_equal(SQUARE, Polygon((0, 1 + 1e-3, 1 + 1j, 1j)))


def test_polygon_validation():
    with pytest.raises(ValueError):
        Polygon(())
    with pytest.raises(ValueError):
        Polygon((0, complex(math.inf, 0)))


def test_tolerance_validation():
    with pytest.raises(ValueError):
        ToleranceConfig(0.0, 1e-9)
    with pytest.raises(ValueError):
        ToleranceConfig(1e-9, 1e-2)


def test_affine_keeps_classes_only_for_positive_scale():
    P = Polygon((0, 1), (1, 3), 4)
    assert P.affine(2.0, 1j).normal_classes == (1, 3)
    assert P.affine(-1.0).normal_classes is None
