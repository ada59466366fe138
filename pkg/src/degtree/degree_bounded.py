"""Degree-3 and degree-4 spanning trees by path replacement.

Every vertex ``v`` of a leaf-rooted MST gives up the star of edges to its
children and is connected to them by a single covering path instead.  The
union of those paths is a spanning tree in which each vertex lies on at most
two paths (its parent's and its own), which bounds the degree:

* anchored paths (starting at ``v``) give degree <= 3;
* free paths (any endpoints) give degree <= 4.

In the plane the anchored path weighs at most 1.5 times the star it replaces
and the free path at most 1.25 times, provided ``v`` has at most four
children.  In any dimension, an anchored path built three children at a time
weighs at most 5/3 of the star, whatever the number of children.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Literal, Mapping, NamedTuple, Sequence

import numpy as np

from .errors import InvalidInputError
from .geometry import TOL, PointSet
from .mst import RootedTree, SpanningTree, max_degree, root_at_leaf

#: Exhaustive permutation search is used up to this many children per vertex.
PERMUTATION_BUDGET = 8

RATIO_TREE3 = 1.5
RATIO_TREE4 = 1.25
RATIO_HIGHDIM = 5.0 / 3.0

Variant = Literal["strict", "preorder_relaxed"]
HighdimMode = Literal["permute", "group3"]


@dataclass(frozen=True)
class CoveringPath:
    vertices: tuple[int, ...]
    weight: float
    anchored: bool

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class DegreeBoundedTree:
    tree: SpanningTree
    degree_bound: int
    source_mst_weight: float
    guarantee_ratio: float
    guarantee_proven: bool
    root: int
    method: str
    paths: Mapping[int, CoveringPath] = field(repr=False, compare=False)

    @property
    def weight(self) -> float:
        return self.tree.total_weight

    @property
    def ratio(self) -> float:
        if self.source_mst_weight == 0.0:
            return 1.0
        return self.tree.total_weight / self.source_mst_weight


@lru_cache(maxsize=None)
def _perm_table(k: int) -> np.ndarray:
    """All permutations of ``range(k)`` in lexicographic order, shape (k!, k)."""
    return np.array(list(permutations(range(k))), dtype=np.intp).reshape(-1, k)


@lru_cache(maxsize=None)
def _free_perm_table(k: int) -> np.ndarray:
    # one orientation per undirected path: first label below last
    table = _perm_table(k)
    if k < 2:
        return table
    return table[table[:, 0] < table[:, -1]]


def _pick(weights: np.ndarray) -> int:
    # first (lexicographically smallest) ordering within rounding of the minimum
    best = weights.min()
    return int(np.flatnonzero(weights <= best + 1e-12 * best)[0])


def _path_weight(ps: PointSet, seq: Sequence[int]) -> float:
    return math.fsum(ps.dist(a, b) for a, b in zip(seq, seq[1:]))


def _check_star(v: int, children: Sequence[int], ps: PointSet) -> list[int]:
    kids = sorted(int(c) for c in children)
    if len(set(kids)) != len(kids):
        raise InvalidInputError("children must be distinct")
    if v in kids:
        raise InvalidInputError("a vertex cannot be its own child")
    for i in [v, *kids]:
        if not 0 <= i < ps.n:
            raise InvalidInputError(f"index {i} out of range for {ps.n} points")
    return kids


def _best_from(start: int, group: Sequence[int], ps: PointSet) -> list[int]:
    """Cheapest ordering of ``group`` for a path that begins at ``start``."""
    nodes = [start, *group]
    dm = ps.distance_matrix(nodes)
    perms = _perm_table(len(group)) + 1
    w = dm[0, perms[:, 0]]
    for i in range(len(group) - 1):
        w = w + dm[perms[:, i], perms[:, i + 1]]
    return [nodes[j] for j in perms[_pick(w)]]


def grouped_anchored_path(v: int, children: Sequence[int], ps: PointSet) -> CoveringPath:
    """Anchored path built from the children in groups of three.

    Children are sorted by distance from ``v``; the ``k mod 3`` nearest form
    the first group and the rest follow in threes, each group appended in
    its cheapest order from the current end of the path.  Runs in time
    linear in the number of children and weighs at most 5/3 of the star.
    """
    kids = _check_star(v, children, ps)
    kids.sort(key=lambda c: (ps.dist(v, c), c))
    first = len(kids) % 3
    groups = [kids[:first]] if first else []
    groups += [kids[i:i + 3] for i in range(first, len(kids), 3)]
    seq = [v]
    for g in groups:
        seq += _best_from(seq[-1], sorted(g), ps)
    return CoveringPath(tuple(seq), _path_weight(ps, seq), True)


def shortest_anchored_path(v: int, children: Sequence[int], ps: PointSet) -> CoveringPath:
    """Minimum-weight path that starts at ``v`` and visits every child.

    Ties go to the lexicographically smallest vertex sequence.  Beyond
    :data:`PERMUTATION_BUDGET` children the grouped construction is used.
    """
    kids = _check_star(v, children, ps)
    if len(kids) > PERMUTATION_BUDGET:
        return grouped_anchored_path(v, kids, ps)
    if not kids:
        return CoveringPath((v,), 0.0, True)
    seq = [v, *_best_from(v, kids, ps)]
    return CoveringPath(tuple(seq), _path_weight(ps, seq), True)


def shortest_covering_path(v: int, children: Sequence[int], ps: PointSet) -> CoveringPath:
    """Minimum-weight Hamiltonian path on ``{v} | children`` with free endpoints."""
    kids = _check_star(v, children, ps)
    if len(kids) > PERMUTATION_BUDGET:
        p = grouped_anchored_path(v, kids, ps)
        return CoveringPath(p.vertices, p.weight, False)
    nodes = sorted([v, *kids])
    if len(nodes) == 1:
        return CoveringPath((v,), 0.0, False)
    dm = ps.distance_matrix(nodes)
    perms = _free_perm_table(len(nodes))
    w = np.zeros(perms.shape[0])
    for i in range(len(nodes) - 1):
        w = w + dm[perms[:, i], perms[:, i + 1]]
    seq = [nodes[j] for j in perms[_pick(w)]]
    return CoveringPath(tuple(seq), _path_weight(ps, seq), False)


def _assemble(
    ps: PointSet,
    mst: SpanningTree,
    rt: RootedTree,
    paths: dict[int, CoveringPath],
    degree_bound: int,
    ratio: float,
    proven: bool,
    method: str,
) -> DegreeBoundedTree:
    pairs = [e for p in paths.values() for e in p.edges()]
    tree = SpanningTree.from_pairs(ps, pairs)
    return DegreeBoundedTree(tree, degree_bound, mst.total_weight, ratio, proven, rt.root, method, paths)


def _check_inputs(ps: PointSet, mst: SpanningTree) -> None:
    if mst.n != ps.n:
        raise InvalidInputError(f"tree has {mst.n} vertices but there are {ps.n} points")


def _planar(ps: PointSet) -> bool:
    return ps.dim <= 2


def build_tree3(
    ps: PointSet,
    mst: SpanningTree,
    root: int | None = None,
    variant: Variant = "strict",
) -> DegreeBoundedTree:
    """Degree-3 tree from anchored covering paths.

    ``preorder_relaxed`` scans vertices in preorder and only anchors the path
    at ``v`` when ``v`` already has degree two in the partial tree; otherwise
    the free shortest path is used.  It is never heavier than ``strict``.
    """
    if variant not in ("strict", "preorder_relaxed"):
        raise InvalidInputError(f"unknown tree-3 variant {variant!r}")
    _check_inputs(ps, mst)
    rt = root_at_leaf(mst, root)
    deg = [0] * ps.n
    paths: dict[int, CoveringPath] = {}
    for v in rt.preorder():
        kids = rt.children[v]
        if not kids:
            continue
        if variant == "strict" or deg[v] >= 2:
            p = shortest_anchored_path(v, kids, ps)
        else:
            p = shortest_covering_path(v, kids, ps)
        for a, b in p.edges():
            deg[a] += 1
            deg[b] += 1
        paths[v] = p
    if _planar(ps) and rt.max_children() <= 4:
        ratio = RATIO_TREE3
    else:
        ratio = RATIO_HIGHDIM
    method = "tree3_strict" if variant == "strict" else "tree3_preorder"
    return _assemble(ps, mst, rt, paths, 3, ratio, True, method)


def build_tree4(ps: PointSet, mst: SpanningTree, root: int | None = None) -> DegreeBoundedTree:
    """Degree-4 tree from free (unanchored) covering paths."""
    _check_inputs(ps, mst)
    rt = root_at_leaf(mst, root)
    paths = {v: shortest_covering_path(v, rt.children[v], ps) for v in rt.preorder() if rt.children[v]}
    proven = _planar(ps) and rt.max_children() <= 4
    return _assemble(ps, mst, rt, paths, 4, RATIO_TREE4, proven, "tree4")


def build_tree3_highdim(
    ps: PointSet,
    mst: SpanningTree,
    root: int | None = None,
    mode: HighdimMode = "group3",
) -> DegreeBoundedTree:
    """Degree-3 tree within 5/3 of the MST in any dimension.

    ``group3`` uses :func:`grouped_anchored_path` everywhere; ``permute``
    searches all orderings when the child count is within budget.
    """
    if mode == "group3":
        make = grouped_anchored_path
    elif mode == "permute":
        make = shortest_anchored_path
    else:
        raise InvalidInputError(f"unknown high-dimension mode {mode!r}")
    _check_inputs(ps, mst)
    rt = root_at_leaf(mst, root)
    paths = {v: make(v, rt.children[v], ps) for v in rt.preorder() if rt.children[v]}
    return _assemble(ps, mst, rt, paths, 3, RATIO_HIGHDIM, True, f"tree3_highdim_{mode}")


class PathViolation(NamedTuple):
    vertex: int
    path_weight: float
    star_weight: float


def per_vertex_guarantee_check(
    rt: RootedTree,
    paths: Mapping[int, CoveringPath],
    ps: PointSet,
    ratio: float,
) -> list[PathViolation]:
    """Vertices whose replacement path exceeds ``ratio`` times the star it replaced."""
    out = []
    for v, kids in enumerate(rt.children):
        if not kids:
            continue
        if v not in paths:
            raise InvalidInputError(f"no covering path for vertex {v}")
        star = math.fsum(ps.dist(v, c) for c in kids)
        w = paths[v].weight
        if w > ratio * star + TOL * star:
            out.append(PathViolation(v, w, star))
    return out


def try_all_roots(
    build: Callable[..., DegreeBoundedTree],
    ps: PointSet,
    mst: SpanningTree,
    **kwargs,
) -> DegreeBoundedTree:
    """Run ``build`` from every leaf and keep the lightest tree (lowest root on ties)."""
    best = None
    for leaf in mst.leaves() or [0]:
        cand = build(ps, mst, root=leaf, **kwargs)
        if best is None or cand.weight < best.weight:
            best = cand
    return best


def check_degree(t: DegreeBoundedTree) -> bool:
    return max_degree(t.tree) <= t.degree_bound
