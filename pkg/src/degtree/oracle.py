"""Exhaustive search over all labelled spanning trees for small point sets.

Trees are enumerated through their Pruefer sequences (n^(n-2) of them), so
the enumeration is complete and duplicate-free by construction.  Decoding is
vectorised over blocks of sequences.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import InfeasibleError, InvalidInputError, ResourceLimitError
from .geometry import PointSet
from .mst import SpanningTree

DEFAULT_CAP = 9
CAP_ENV = "DEGTREE_ORACLE_CAP"
BLOCK = 1 << 18


def oracle_cap() -> int:
    """Largest ``n`` the oracle accepts; ``$DEGTREE_ORACLE_CAP`` overrides it."""
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class OracleResult:
    best_tree: SpanningTree
    best_weight: float
    degree_bound: int
    trees_enumerated: int


def _decode_block(n: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    """Decode Pruefer sequences with lexicographic ranks ``start..stop-1``.

    Returns ``edges`` of shape (m, n-1, 2) with the smaller endpoint first,
    and vertex ``degrees`` of shape (m, n).
    """
    m = stop - start
    rank = np.arange(start, stop, dtype=np.int64)
    seq = np.empty((m, n - 2), dtype=np.intp)
    for pos in range(n - 3, -1, -1):
        rank, seq[:, pos] = np.divmod(rank, n)
    deg = np.ones((m, n), dtype=np.intp)
    rows = np.arange(m)
    for pos in range(n - 2):
        np.add.at(deg, (rows, seq[:, pos]), 1)
    degrees = deg.copy()

    edges = np.empty((m, n - 1, 2), dtype=np.intp)
    for pos in range(n - 2):
        leaf = np.argmax(deg == 1, axis=1)
        nxt = seq[:, pos]
        edges[:, pos, 0] = np.minimum(leaf, nxt)
        edges[:, pos, 1] = np.maximum(leaf, nxt)
        deg[rows, leaf] = 0
        deg[rows, nxt] -= 1
    # the two vertices left with degree one form the last edge
    last = np.argsort(deg != 1, axis=1, kind="stable")[:, :2]
    edges[:, n - 2, 0] = last[:, 0]
    edges[:, n - 2, 1] = last[:, 1]
    return edges, degrees


@lru_cache(maxsize=8)
def _all_trees(n: int) -> tuple[np.ndarray, np.ndarray]:
    return _decode_block(n, 0, n ** (n - 2))


def _blocks(n: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    total = n ** (n - 2)
    if total <= BLOCK:
        yield _all_trees(n)
        return
    for start in range(0, total, BLOCK):
        yield _decode_block(n, start, min(total, start + BLOCK))


def _check_n(n: int) -> None:
    cap = oracle_cap()
    if n > cap:
        raise ResourceLimitError(f"oracle enumeration is capped at n <= {cap} points (got n={n})")


def enumerate_spanning_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """Yield every labelled spanning tree on ``n`` vertices as a list of edges."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise InvalidInputError(f"n must be an integer >= 2, got {n!r}")
    _check_n(n)
    if n == 2:
        yield [(0, 1)]
        return
    for edges, _ in _blocks(n):
        for tree in edges:
            yield [(int(u), int(v)) for u, v in tree]


def _scan(ps: PointSet, ks: Sequence[int]) -> dict[int, tuple[float, list[tuple[int, int]]] | None]:
    """Best (weight, sorted edge list) for each degree bound in ``ks``."""
    n = ps.n
    dm = ps.distance_matrix()
    if n == 2:
        return {k: (float(dm[0, 1]), [(0, 1)]) if k >= 1 else None for k in ks}
    cands: dict[int, list] = {k: [] for k in ks}
    best = {k: np.inf for k in ks}
    for edges, degrees in _blocks(n):
        w = dm[edges[:, :, 0], edges[:, :, 1]].sum(axis=1)
        maxdeg = degrees.max(axis=1)
        for k in ks:
            ok = maxdeg <= k
            if not ok.any():
                continue
            wk = np.where(ok, w, np.inf)
            bmin = wk.min()
            if bmin > best[k] + 1e-12 * best[k]:
                continue
            best[k] = min(best[k], bmin)
            hits = np.flatnonzero(wk <= bmin + 1e-12 * bmin)
            cands[k].extend((float(w[i]), sorted(map(tuple, edges[i].tolist()))) for i in hits)
    out = {}
    for k in ks:
        if best[k] == np.inf:
            out[k] = None
            continue
        tol = best[k] + 1e-12 * best[k]
        near = [c for c in cands[k] if c[0] <= tol]
        out[k] = min(near, key=lambda c: c[1])
    return out


def optimal_degree_k_trees(ps: PointSet, ks: Sequence[int]) -> dict[int, OracleResult]:
    """Like :func:`optimal_degree_k_tree` for several bounds with one enumeration."""
    n = ps.n
    _check_n(n)
    for k in ks:
        if k < 1:
            raise InvalidInputError(f"degree bound must be >= 1, got {k}")
    count = 1 if n <= 2 else n ** (n - 2)
    if n == 1:
        t = SpanningTree(1, (), 0.0)
        return {k: OracleResult(t, 0.0, k, 1) for k in ks}
    found = _scan(ps, list(ks))
    out = {}
    for k in ks:
        if found[k] is None:
            raise InfeasibleError(f"no spanning tree on {n} points has maximum degree <= {k}")
        tree = SpanningTree.from_pairs(ps, found[k][1])
        out[k] = OracleResult(tree, tree.total_weight, k, count)
    return out


def optimal_degree_k_tree(ps: PointSet, k: int) -> OracleResult:
    """Minimum-weight spanning tree with maximum degree at most ``k``.

    Exhaustive over all n^(n-2) labelled trees; ties go to the
    lexicographically smallest sorted edge list.
    """
    return optimal_degree_k_trees(ps, [k])[k]
