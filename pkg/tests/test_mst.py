import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.sparse.csgraph import minimum_spanning_tree
from scipy.spatial.distance import cdist

from conftest import brute_force_best
from degtree.errors import InvalidInputError
from degtree.geometry import PointSet
from degtree.instances import gen_pentagon_centroid, gen_random_uniform, gen_square_center, gen_staircase_bad
from degtree.mst import SpanningTree, compute_mst, max_degree, root_at_leaf, validate_mst_angles


def scipy_mst_weight(ps):
    return float(minimum_spanning_tree(cdist(ps.coords, ps.coords)).sum())


def test_collinear_path():
    ps = PointSet.from_points([(0, 0), (1, 0), (2, 0)])
    t = compute_mst(ps)
    assert t.pairs() == [(0, 1), (1, 2)]
    assert t.total_weight == 2.0


def test_square_center_star():
    ps = gen_square_center()
    t = compute_mst(ps)
    assert t.pairs() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    # brute force over all 125 labelled trees
    assert t.total_weight == pytest.approx(brute_force_best(ps.coords), abs=1e-9)
    assert t.total_weight == pytest.approx(2 * math.sqrt(2), abs=1e-12)


def test_pentagon_centroid_star():
    ps = gen_pentagon_centroid(1.0)
    t = compute_mst(ps)
    assert t.pairs() == [(i, 5) for i in range(5)]
    assert t.total_weight == pytest.approx(brute_force_best(ps.coords), abs=1e-9)
    assert t.total_weight == pytest.approx(5.0, abs=1e-12)


def test_single_point_and_empty():
    t = compute_mst(PointSet.from_points([(1.0, 2.0)]))
    assert (t.n, t.edges, t.total_weight) == (1, (), 0.0)
    with pytest.raises(InvalidInputError):
        compute_mst(PointSet.from_points([]))


def test_tie_breaking_is_deterministic():
    # a unit square has four equal sides; the tie-break picks the smallest index pairs
    ps = PointSet.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert compute_mst(ps).pairs() == [(0, 1), (0, 3), (1, 2)]


@pytest.mark.parametrize("seed", range(20))
def test_matches_scipy(seed):
    rng = np.random.default_rng(seed)
    ps = gen_random_uniform(int(rng.integers(2, 300)), int(rng.integers(1, 6)), seed)
    t = compute_mst(ps)
    assert t.total_weight == pytest.approx(scipy_mst_weight(ps), abs=1e-9)
    for u, v, w in t.edges:
        assert w == pytest.approx(ps.dist(u, v), rel=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_matches_brute_force_small(seed):
    rng = np.random.default_rng(100 + seed)
    n = int(rng.integers(2, 7))
    ps = gen_random_uniform(n, int(rng.integers(2, 4)), seed)
    assert compute_mst(ps).total_weight == pytest.approx(brute_force_best(ps.coords), abs=1e-9)


def test_spanning_tree_validation():
    with pytest.raises(InvalidInputError):
        SpanningTree.from_edges(3, [(0, 1, 1.0)])
    with pytest.raises(InvalidInputError):
        SpanningTree.from_edges(4, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])
    with pytest.raises(InvalidInputError):
        SpanningTree.from_edges(2, [(0, 5, 1.0)])


def test_max_degree():
    path = SpanningTree.from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
    star = SpanningTree.from_edges(6, [(0, i, 1) for i in range(1, 6)])
    assert max_degree(path) == 2
    assert max_degree(star) == 5


def test_random_planar_degree_at_most_six():
    for seed in range(30):
        assert max_degree(compute_mst(gen_random_uniform(300, 2, seed))) <= 6


def test_root_path():
    t = SpanningTree.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)])
    rt = root_at_leaf(t, 0)
    assert rt.children[0] == (1,)
    assert rt.children[1] == (2,)
    assert rt.parent == (None, 0, 1)


def test_root_star_center_has_three_children():
    ps = PointSet.from_points([(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)])
    t = compute_mst(ps)
    for leaf in (1, 2, 3, 4):
        rt = root_at_leaf(t, leaf)
        assert len(rt.children[0]) == 3


def test_root_staircase_child_of_root_has_three_children():
    ps, root = gen_staircase_bad(5)
    rt = root_at_leaf(compute_mst(ps), root)
    (child,) = rt.children[root]
    assert len(rt.children[child]) == 3


def test_root_rejects_non_leaf():
    ps = gen_square_center()
    with pytest.raises(InvalidInputError):
        root_at_leaf(compute_mst(ps), 4)


def test_root_default_is_lowest_leaf_and_children_by_distance():
    ps = PointSet.from_points([(5, 0), (0, 0), (2, 0), (0, 1.5), (-1, 0)])
    t = compute_mst(ps)
    rt = root_at_leaf(t)
    assert rt.root == min(t.leaves())
    for v, kids in enumerate(rt.children):
        d = [ps.dist(v, c) for c in kids]
        assert d == sorted(d)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 60), st.integers(1, 4), st.integers(0, 10**6))
def test_rooted_tree_consistency(n, d, seed):
    ps = gen_random_uniform(n, d, seed)
    t = compute_mst(ps)
    rt = root_at_leaf(t)
    assert rt.parent[rt.root] is None
    assert len(rt.children[rt.root]) == 1
    assert sorted(rt.preorder()) == list(range(n))
    seen = sorted(c for kids in rt.children for c in kids)
    assert seen == [v for v in range(n) if v != rt.root]
    deg = t.degrees()
    for v, kids in enumerate(rt.children):
        for c in kids:
            assert rt.parent[c] == v
        if v != rt.root:
            assert len(kids) == deg[v] - 1


def test_angle_validator_flags_non_mst():
    ps = PointSet.from_points([(0, 0), (1, 0), (1, 0.05)])
    t = SpanningTree.from_pairs(ps, [(0, 1), (0, 2)])
    bad = validate_mst_angles(t, ps)
    assert len(bad) == 1
    assert bad[0].b == 0 and bad[0].kind == "below-60"


def test_angle_validator_single_edge():
    ps = PointSet.from_points([(0, 0), (1, 0)])
    assert validate_mst_angles(compute_mst(ps), ps) == []


@pytest.mark.parametrize("seed", range(40))
def test_angle_validator_clean_on_mst(seed):
    ps = gen_random_uniform(200, 2 + seed % 3, seed)
    assert validate_mst_angles(compute_mst(ps), ps) == []
