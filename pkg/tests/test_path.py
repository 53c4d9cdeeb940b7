import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subwarp import (
    InputError,
    WarpingPath,
    build_cost_matrix,
    dtw,
    linear_path_cost,
    optimal_path_cost,
    path_segment_cost,
    rasterize_chain,
    rasterize_linear,
    rasterize_simplified,
    validate_path,
)


def P(*pairs):
    return WarpingPath.from_pairs(pairs)


def test_validate_examples():
    assert validate_path(P((1, 1), (2, 2)), 2, 2) is None
    v = validate_path(P((1, 1), (2, 2)), 3, 2)
    assert v.condition == "boundary" and v.position == 2
    v = validate_path(P((1, 1), (1, 2), (2, 2), (2, 1)), 2, 2)
    assert v.condition == "monotonicity" and v.position == 4


@pytest.mark.parametrize("pairs,n,m,cond,pos", [
    ([(2, 1), (2, 2)], 2, 2, "boundary", 1),
    ([(1, 1), (3, 3)], 3, 3, "continuity", 2),
    ([(1, 1), (1, 1), (2, 2)], 2, 2, "continuity", 2),
    ([(1, 1), (2, 1), (3, 1)], 2, 1, "boundary", 3),
])
def test_validate_violations(pairs, n, m, cond, pos):
    v = validate_path(pairs, n, m)
    assert (v.condition, v.position) == (cond, pos)
    assert cond in str(v)


def test_path_container():
    p = P((1, 1), (2, 2), (2, 3))
    assert len(p) == 3 and p.point(3) == (2, 3) and p.shape == (2, 3)
    assert p == WarpingPath.from_pairs(list(p)) and hash(p) == hash(WarpingPath(p.pairs))
    with pytest.raises(InputError):
        p.point(0)
    with pytest.raises(InputError):
        WarpingPath(np.zeros((0, 2)))


def test_corner_count():
    assert P((1, 1), (2, 2), (3, 3)).corner_count() == 0
    assert P((1, 1), (1, 2), (2, 3), (3, 3)).corner_count() == 2
    assert P((1, 1)).corner_count() == 0


def test_segment_costs_examples():
    r = dtw([0, 2, 1, 3], [0, 1, 2, 1, 3])
    path, C, D = r.path, r.cost_matrix, r.accumulated
    for e in range(2, len(path) + 1):
        i, j = path.point(e)
        assert path_segment_cost(path, C, e - 1, e) == C[i - 1, j - 1]
        assert optimal_path_cost(path, D, e - 1, e) == pytest.approx(C[i - 1, j - 1], abs=1e-12)
    same = dtw([1, 2, 3], [1, 2, 3])
    assert optimal_path_cost(same.path, same.accumulated, 1, 3) == 0.0
    assert linear_path_cost(same.path, same.cost_matrix, 1, 3) == 0.0


def test_segment_cost_range_checked():
    r = dtw([0, 1], [0, 1])
    for b, e in ((0, 2), (2, 2), (1, 3)):
        with pytest.raises(InputError):
            path_segment_cost(r.path, r.cost_matrix, b, e)


def test_segment_costs_match_direct_sums():
    rng = np.random.default_rng(7)
    for _ in range(50):
        r = dtw(rng.normal(size=rng.integers(2, 15)), rng.normal(size=rng.integers(2, 15)))
        L = len(r.path)
        if L < 2:
            continue
        b = int(rng.integers(1, L))
        e = int(rng.integers(b + 1, L + 1))
        direct = sum(r.cost_matrix[i - 1, j - 1] for i, j in r.path.to_list()[b:e])
        assert path_segment_cost(r.path, r.cost_matrix, b, e) == pytest.approx(direct, abs=1e-9)
        assert optimal_path_cost(r.path, r.accumulated, b, e) == pytest.approx(direct, abs=1e-9)


def test_linear_cost_never_below_optimal():
    rng = np.random.default_rng(8)
    for _ in range(1000):
        r = dtw(rng.normal(size=rng.integers(2, 20)), rng.normal(size=rng.integers(2, 20)))
        L = len(r.path)
        b = int(rng.integers(1, L))
        e = int(rng.integers(b + 1, L + 1))
        opt = path_segment_cost(r.path, r.cost_matrix, b, e)
        assert linear_path_cost(r.path, r.cost_matrix, b, e) >= opt - 1e-9


def test_linear_cost_equals_optimal_on_straight_subpath():
    r = dtw([0, 1, 2, 3, 4, 5], [0, 1, 2, 3, 4, 5])
    assert linear_path_cost(r.path, r.cost_matrix, 2, 5) == path_segment_cost(r.path, r.cost_matrix, 2, 5)


def test_rasterize_examples():
    assert rasterize_linear((1, 1), (4, 4)) == [(2, 2), (3, 3), (4, 4)]
    assert rasterize_linear((1, 1), (1, 4)) == [(1, 2), (1, 3), (1, 4)]
    assert rasterize_linear((1, 1), (4, 1)) == [(2, 1), (3, 1), (4, 1)]
    assert rasterize_linear((2, 2), (2, 2)) == []
    # hand trace of the integer error loop: err starts at di - dj = -3
    assert rasterize_linear((1, 1), (3, 6)) == [(1, 2), (2, 3), (2, 4), (3, 5), (3, 6)]


def test_rasterize_requires_dominating_end():
    with pytest.raises(InputError):
        rasterize_linear((3, 3), (2, 5))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 60), st.integers(1, 60), st.integers(0, 60), st.integers(0, 60))
def test_rasterized_points_hug_the_line(i0, j0, di, dj):
    pts = [(i0, j0)] + rasterize_linear((i0, j0), (i0 + di, j0 + dj))
    assert pts[-1] == (i0 + di, j0 + dj)
    steps = {(b[0] - a[0], b[1] - a[1]) for a, b in zip(pts, pts[1:])}
    assert steps <= {(1, 1), (1, 0), (0, 1)}
    # an 8-connected raster of a line stays within one cell of it
    norm = math.hypot(di, dj) or 1.0
    for i, j in pts:
        assert abs((i - i0) * dj - (j - j0) * di) / norm <= 1.0
    # minimal length: a straight raster takes max(di, dj) steps
    assert len(pts) - 1 == max(di, dj)


def test_rasterize_chain_and_simplified():
    assert rasterize_chain([(1, 1), (4, 4)]).to_list() == [(1, 1), (2, 2), (3, 3), (4, 4)]
    r = dtw([0, 2, 1, 3, 0], [0, 1, 2, 1, 1, 3, 0])
    assert rasterize_simplified(r.path.to_list()) == r.path
    assert rasterize_chain([(1, 1)]).to_list() == [(1, 1)]
