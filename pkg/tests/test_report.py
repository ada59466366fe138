import json

import numpy as np
import pytest

from degtree.errors import InvalidInputError, ResourceLimitError
from degtree.geometry import PointSet
from degtree.instances import gen_pentagon_centroid, gen_random_uniform, gen_square_center, gen_staircase_bad
from degtree.report import METHODS, evaluate_instance, run_method

PLANAR = ["tree3_strict", "tree3_preorder", "tree4"]


@pytest.mark.parametrize("seed", range(12))
def test_fields_consistent(seed):
    ps = gen_random_uniform(40 + seed * 7, 2, seed)
    rep = evaluate_instance(ps, list(METHODS))
    assert [r.method for r in rep.results] == list(METHODS)
    for r in rep.results:
        assert r.ratio_vs_mst == pytest.approx(r.weight / rep.mst_weight, rel=1e-12)
        assert r.max_degree <= (4 if r.method == "tree4" else 3)
        if r.guarantee_proven:
            assert r.ratio_vs_mst <= r.guarantee_ratio * (1 + 1e-9)
    assert rep.checks.angle_violations == 0
    assert rep.checks.per_vertex_violations == 0


def test_oracle_below_same_k_methods():
    for ps in (gen_square_center(), gen_pentagon_centroid(), gen_random_uniform(7, 2, 3)):
        rep = evaluate_instance(ps, PLANAR, oracle_k=3)
        assert rep.oracle.k == 3
        for m in ("tree3_strict", "tree3_preorder"):
            assert rep.oracle.weight <= rep.result(m).weight + 1e-9
        rep4 = evaluate_instance(ps, ["tree4"], oracle_k=4)
        assert rep4.oracle.weight <= rep4.result("tree4").weight + 1e-9


def test_collinear_all_ones():
    ps = PointSet.from_points([(x, 0.0) for x in (0, 1, 2.5, 3, 7)])
    rep = evaluate_instance(ps, list(METHODS), oracle_k=3)
    assert all(r.ratio_vs_mst == 1.0 for r in rep.results)
    assert rep.oracle.ratio_vs_mst == pytest.approx(1.0)
    assert rep.checks.angle_violations == 0 and rep.checks.per_vertex_violations == 0


def test_try_all_roots_is_argmin():
    ps, _ = gen_staircase_bad(3)
    rep = evaluate_instance(ps, ["tree3_strict"], root_strategy="try_all")
    r = rep.result("tree3_strict")
    from degtree.mst import compute_mst

    mst = compute_mst(ps)
    weights = {leaf: run_method("tree3_strict", ps, mst, "given", leaf).weight for leaf in mst.leaves()}
    best = min(weights.values())
    assert r.weight == pytest.approx(best, abs=1e-12)
    assert r.root == min(k for k, w in weights.items() if w == best)


def test_given_root_and_errors():
    ps, root = gen_staircase_bad(2)
    rep = evaluate_instance(ps, ["tree3_strict"], root_strategy="given", root=root)
    assert rep.result("tree3_strict").root == root
    with pytest.raises(InvalidInputError):
        evaluate_instance(ps, ["tree5"])
    with pytest.raises(InvalidInputError):
        evaluate_instance(ps, ["tree4"], root_strategy="given")
    with pytest.raises(ResourceLimitError):
        evaluate_instance(ps, ["tree4"], oracle_k=3)


def test_json_deterministic_and_rounded():
    ps = gen_random_uniform(30, 2, 5)
    a = evaluate_instance(ps, list(METHODS), instance_id="x").to_json()
    b = evaluate_instance(ps, list(METHODS), instance_id="x").to_json()
    assert a == b
    data = json.loads(a)
    assert set(data) == {"instance_id", "n", "d", "mst_weight", "results", "oracle", "checks", "root_strategy"}
    assert data["oracle"] is None
    w = data["results"][0]["weight"]
    assert float(f"{w:.12g}") == w


def test_highdim_group3_proven():
    ps = gen_random_uniform(200, 3, 11)
    rep = evaluate_instance(ps, ["tree3_highdim_group3", "tree3_highdim_permute"])
    for r in rep.results:
        assert r.guarantee_proven and r.guarantee_ratio == pytest.approx(5 / 3)
        assert r.ratio_vs_mst <= 5 / 3
    assert rep.result("tree3_highdim_permute").weight <= rep.result("tree3_highdim_group3").weight + 1e-9


def test_zero_weight_instance():
    ps = PointSet.from_points(np.zeros((4, 2)))
    rep = evaluate_instance(ps, PLANAR)
    assert rep.mst_weight == 0.0
    assert all(r.ratio_vs_mst == 1.0 for r in rep.results)
