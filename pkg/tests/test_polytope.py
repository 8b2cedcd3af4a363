import itertools

import numpy as np
import pytest

from arbors.arbor import enumerate_arbors, parse_arbor
from arbors.invariants import ehrhart
from arbors.polytope import (
    GuardError,
    check_minkowski,
    contains,
    count_points,
    defects,
    height_histogram,
    lattice_points,
    layout,
    newton_check,
    vertices,
    vertices_by_rank,
)

SMALL = [t for n in range(1, 6) for t in enumerate_arbors(n)]


def subtree_ranges(t, start=0):
    """Independent preorder walk: (start, end) of every subtree block."""
    out = []
    pos = start + t.mult
    for c in t.children:
        sub = subtree_ranges(c, pos)
        out.extend(sub)
        pos = sub[0][1]
    return [(start, pos)] + out


def box_points(t, m):
    ranges = subtree_ranges(t)
    n = t.size
    pts = []
    for z in itertools.product(range(m * n + 1), repeat=n):
        if all(sum(z[s:e]) <= m * (e - s) for s, e in ranges):
            pts.append(z)
    return sorted(pts)


@pytest.mark.parametrize("t", [t for t in SMALL if t.size <= 4], ids=str)
@pytest.mark.parametrize("m", [1, 2])
def test_lattice_points_match_box_scan(t, m):
    assert [tuple(r) for r in lattice_points(t, m).tolist()] == box_points(t, m)


def test_running_example_layout_and_counts():
    t = parse_arbor("(2 (2) (1) (1))")
    lay = layout(t)
    assert lay.n == 6
    root = lay.block(())
    assert root.own == (0, 2) and root.down == (0, 6) and root.up == (0, 1)
    child = lay.blocks[1]
    assert child.down[1] - child.down[0] == child.mult
    assert set(child.up) >= {0, 1}
    assert count_points(t) == 330
    assert sum(height_histogram(lattice_points(t))) == 330


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_point_counts_follow_ehrhart(t):
    e = ehrhart(t)
    for m in (1, 2, 3):
        assert count_points(t, m) == e(m)


@pytest.mark.parametrize("t", [t for n in range(1, 7) for t in enumerate_arbors(n)], ids=str)
def test_vertex_recursion_matches_rank_oracle(t):
    rec = {tuple(v) for v in vertices(t).tolist()}
    oracle = {tuple(v) for v in vertices_by_rank(t).tolist()}
    assert rec == oracle
    # one fiber of (mult + 1) choices per vertex of the arbor
    expected = 1
    for _, node in t.vertices():
        expected *= node.mult + 1
    assert len(rec) == expected


def test_quadrilateral_example():
    t = parse_arbor("(1 (1))")
    assert sorted(map(tuple, vertices(t).tolist())) == [(0, 0), (0, 1), (1, 1), (2, 0)]
    assert count_points(t) == 5


def test_running_example_vertex_count():
    assert len(vertices(parse_arbor("(2 (2) (1) (1))"))) == 36


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_no_interior_lattice_point(t):
    pts = lattice_points(t)
    a, c = layout(t).inequalities()
    tight = (pts == 0).any(axis=1) | ((pts @ a.T) == c).any(axis=1)
    assert tight.all()


def test_contains_and_defects():
    t = parse_arbor("(1 (1))")
    assert contains(t, np.array([[1, 1], [2, 1], [0, 2]])).tolist() == [True, False, False]
    assert defects(t, [1, 1]) == {(): 0, (0,): 0}
    assert defects(t, [0, 0]) == {(): 2, (0,): 1}


@pytest.mark.parametrize("t", [t for n in range(1, 6) for t in enumerate_arbors(n)], ids=str)
def test_minkowski_and_newton(t):
    assert check_minkowski(t).passed
    assert newton_check(t).passed


def test_running_example_minkowski_newton():
    t = parse_arbor("(2 (2) (1) (1))")
    assert check_minkowski(t).passed
    rep = newton_check(t).to_json()
    assert rep["passed"] and rep["exponents_inside"]


def test_guard_trips():
    with pytest.raises(GuardError):
        lattice_points(parse_arbor("(2 (2) (1) (1))"), 1, guard=100)
    with pytest.raises(ValueError):
        lattice_points(parse_arbor("(1)"), 0)
