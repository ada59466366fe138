"""Per-instance evaluation: MST, constructions, optional oracle and checks."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Literal

from .degree_bounded import (
    DegreeBoundedTree,
    build_tree3,
    build_tree3_highdim,
    build_tree4,
    per_vertex_guarantee_check,
    try_all_roots,
)
from .errors import InvalidInputError, ResourceLimitError
from .geometry import PointSet
from .mst import SpanningTree, compute_mst, max_degree, root_at_leaf, validate_mst_angles
from .oracle import optimal_degree_k_tree, oracle_cap

METHODS = {
    "tree3_strict": lambda ps, mst, root: build_tree3(ps, mst, root, "strict"),
    "tree3_preorder": lambda ps, mst, root: build_tree3(ps, mst, root, "preorder_relaxed"),
    "tree4": build_tree4,
    "tree3_highdim_permute": lambda ps, mst, root: build_tree3_highdim(ps, mst, root, "permute"),
    "tree3_highdim_group3": lambda ps, mst, root: build_tree3_highdim(ps, mst, root, "group3"),
}

RootStrategy = Literal["default", "given", "try_all"]


def _r12(x: float) -> float:
    return float(f"{x:.12g}")


@dataclass
class MethodResult:
    method: str
    weight: float
    max_degree: int
    ratio_vs_mst: float
    guarantee_ratio: float
    guarantee_proven: bool
    root: int


@dataclass
class OracleSummary:
    k: int
    weight: float
    ratio_vs_mst: float


@dataclass
class Checks:
    angle_violations: int
    per_vertex_violations: int


@dataclass
class RatioReport:
    instance_id: str
    n: int
    d: int
    mst_weight: float
    results: list[MethodResult] = field(default_factory=list)
    oracle: OracleSummary | None = None
    checks: Checks = field(default_factory=lambda: Checks(0, 0))
    root_strategy: str = "default"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["mst_weight"] = _r12(self.mst_weight)
        for r in d["results"]:
            for key in ("weight", "ratio_vs_mst", "guarantee_ratio"):
                r[key] = _r12(r[key])
        if d["oracle"] is not None:
            d["oracle"]["weight"] = _r12(d["oracle"]["weight"])
            d["oracle"]["ratio_vs_mst"] = _r12(d["oracle"]["ratio_vs_mst"])
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def result(self, method: str) -> MethodResult:
        for r in self.results:
            if r.method == method:
                return r
        raise KeyError(method)


def _ratio(w: float, base: float) -> float:
    return 1.0 if base == 0.0 else w / base


def run_method(
    method: str,
    ps: PointSet,
    mst: SpanningTree,
    root_strategy: RootStrategy = "default",
    root: int | None = None,
) -> DegreeBoundedTree:
    if method not in METHODS:
        raise InvalidInputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    build = METHODS[method]
    if root_strategy == "try_all":
        return try_all_roots(lambda p, m, root: build(p, m, root), ps, mst)
    if root_strategy == "given":
        if root is None:
            raise InvalidInputError("root strategy 'given' needs a root index")
        return build(ps, mst, root)
    if root_strategy != "default":
        raise InvalidInputError(f"unknown root strategy {root_strategy!r}")
    return build(ps, mst, None)


def evaluate_instance(
    ps: PointSet,
    methods: Iterable[str],
    oracle_k: int | None = None,
    root_strategy: RootStrategy = "default",
    root: int | None = None,
    instance_id: str = "instance",
    mst: SpanningTree | None = None,
) -> RatioReport:
    """Run the MST, the requested constructions, the optional oracle and both checkers."""
    methods = [m for m in METHODS if m in set(methods)] + sorted(set(methods) - set(METHODS))
    if oracle_k is not None and ps.n > oracle_cap():
        raise ResourceLimitError(f"oracle enumeration is capped at n <= {oracle_cap()} points (got n={ps.n})")
    if mst is None:
        mst = compute_mst(ps)
    report = RatioReport(instance_id, ps.n, ps.dim, mst.total_weight, root_strategy=root_strategy)
    per_vertex = 0
    for m in methods:
        t = run_method(m, ps, mst, root_strategy, root)
        report.results.append(
            MethodResult(m, t.weight, max_degree(t.tree), t.ratio, t.guarantee_ratio, t.guarantee_proven, t.root)
        )
        if t.guarantee_proven:
            rt = root_at_leaf(mst, t.root)
            per_vertex += len(per_vertex_guarantee_check(rt, t.paths, ps, t.guarantee_ratio))
    if oracle_k is not None:
        res = optimal_degree_k_tree(ps, oracle_k)
        report.oracle = OracleSummary(oracle_k, res.best_weight, _ratio(res.best_weight, mst.total_weight))
    report.checks = Checks(len(validate_mst_angles(mst, ps)), per_vertex)
    return report
