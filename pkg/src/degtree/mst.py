"""Euclidean minimum spanning trees, leaf rooting and MST sanity checks."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import InvalidInputError
from .geometry import TOL, PointSet


class Edge(NamedTuple):
    u: int
    v: int
    w: float


@dataclass(frozen=True)
class SpanningTree:
    """Edge list over point indices ``0..n-1``; edges are stored with ``u < v``, sorted."""

    n: int
    edges: tuple[Edge, ...]
    total_weight: float

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError("a spanning tree needs at least one vertex")
        if len(self.edges) != self.n - 1:
            raise InvalidInputError(f"expected {self.n - 1} edges, got {len(self.edges)}")
        parent = list(range(self.n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for u, v, _ in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise InvalidInputError(f"bad edge ({u}, {v}) for n={self.n}")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise InvalidInputError(f"edge ({u}, {v}) closes a cycle")
            parent[ru] = rv

    @classmethod
    def from_pairs(cls, ps: PointSet, pairs: Iterable[tuple[int, int]]) -> "SpanningTree":
        """Build a tree from index pairs, computing edge lengths from ``ps``."""
        edges = []
        for a, b in pairs:
            u, v = (int(a), int(b)) if a < b else (int(b), int(a))
            edges.append(Edge(u, v, ps.dist(u, v)))
        return cls.from_edges(ps.n, edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, float]]) -> "SpanningTree":
        norm = sorted(Edge(min(u, v), max(u, v), float(w)) for u, v, w in edges)
        return cls(n, tuple(norm), math.fsum(e.w for e in norm))

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def leaves(self) -> list[int]:
        return [i for i, d in enumerate(self.degrees()) if d == 1]


def max_degree(t: SpanningTree) -> int:
    return max(t.degrees()) if t.n > 1 else 0


def compute_mst(ps: PointSet) -> SpanningTree:
    """Prim's algorithm on the complete Euclidean graph, O(n^2) time, O(n) memory.

    Edges are compared by ``(length, min index, max index)`` so the result is
    the unique minimum tree under that total order.
    """
    if not isinstance(ps, PointSet):
        ps = PointSet.from_points(ps)
    n, pts = ps.n, ps.coords
    if n == 1:
        return SpanningTree(1, (), 0.0)

    idx = np.arange(n)
    in_tree = np.zeros(n, dtype=bool)
    key_w = np.full(n, np.inf)
    key_a = np.full(n, n, dtype=np.int64)  # smaller endpoint of best edge
    key_b = np.full(n, n, dtype=np.int64)
    best_from = np.full(n, -1, dtype=np.int64)
    edges: list[Edge] = []

    cur = 0
    in_tree[0] = True
    for _ in range(n - 1):
        diff = pts - pts[cur]
        w = np.sqrt(np.sum(diff * diff, axis=1))
        lo = np.minimum(idx, cur)
        hi = np.maximum(idx, cur)
        better = (w < key_w) | ((w == key_w) & ((lo < key_a) | ((lo == key_a) & (hi < key_b))))
        better &= ~in_tree
        key_w[better] = w[better]
        key_a[better] = lo[better]
        key_b[better] = hi[better]
        best_from[better] = cur

        outside = np.flatnonzero(~in_tree)
        m = key_w[outside].min()
        tied = outside[key_w[outside] == m]
        if tied.size > 1:
            order = np.lexsort((key_b[tied], key_a[tied]))
            nxt = int(tied[order[0]])
        else:
            nxt = int(tied[0])
        u = int(best_from[nxt])
        edges.append(Edge(min(u, nxt), max(u, nxt), float(key_w[nxt])))
        in_tree[nxt] = True
        cur = nxt
    return SpanningTree.from_edges(n, edges)


@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    def preorder(self) -> list[int]:
        out, stack = [], [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return out

    def max_children(self) -> int:
        return max((len(c) for c in self.children), default=0)


def root_at_leaf(t: SpanningTree, preferred_leaf: int | None = None) -> RootedTree:
    """Root ``t`` at a leaf (lowest-index leaf by default).

    Children are listed by ascending distance from their parent, ties by index.
    """
    adj = t.adjacency()
    length = {(u, v): w for u, v, w in t.edges}
    if t.n == 1:
        root = 0
        if preferred_leaf not in (None, 0):
            raise InvalidInputError(f"vertex {preferred_leaf} is not in a 1-vertex tree")
    elif preferred_leaf is None:
        root = min(i for i in range(t.n) if len(adj[i]) == 1)
    else:
        if not (0 <= preferred_leaf < t.n) or len(adj[preferred_leaf]) != 1:
            raise InvalidInputError(f"vertex {preferred_leaf} is not a leaf of the tree")
        root = int(preferred_leaf)

    parent: list[int | None] = [None] * t.n
    children: list[tuple[int, ...]] = [()] * t.n
    seen = [False] * t.n
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        kids = [c for c in adj[v] if not seen[c]]
        kids.sort(key=lambda c: (length[(min(v, c), max(v, c))], c))
        for c in kids:
            seen[c] = True
            parent[c] = v
            queue.append(c)
        children[v] = tuple(kids)
    return RootedTree(root, tuple(parent), tuple(children))


class AngleViolation(NamedTuple):
    a: int
    b: int
    c: int
    angle_b: float
    kind: str  # "below-60" or "not-largest"


def _triangle_angles(pa: np.ndarray, pb: np.ndarray, pc: np.ndarray) -> tuple[np.ndarray, ...]:
    def ang(p, q, r):
        u, v = q - p, r - p
        cos = np.sum(u * v, axis=1) / (np.sqrt(np.sum(u * u, axis=1)) * np.sqrt(np.sum(v * v, axis=1)))
        return np.arccos(np.clip(cos, -1.0, 1.0))

    return ang(pb, pa, pc), ang(pa, pb, pc), ang(pc, pa, pb)


def validate_mst_angles(t: SpanningTree, ps: PointSet, tol: float = TOL) -> list[AngleViolation]:
    """Check that every pair of tree edges meeting at B spans an angle of at
    least 60 degrees and that this angle is the largest of triangle ABC.

    Returns the violating triples; an MST yields an empty list.
    """
    triples = []
    for b, nbrs in enumerate(t.adjacency()):
        nbrs = sorted(nbrs)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                triples.append((nbrs[i], b, nbrs[j]))
    if not triples:
        return []
    tri = np.asarray(triples)
    pts = ps.coords
    pa, pb, pc = pts[tri[:, 0]], pts[tri[:, 1]], pts[tri[:, 2]]
    with np.errstate(invalid="ignore", divide="ignore"):
        at_b, at_a, at_c = _triangle_angles(pa, pb, pc)
    out = []
    for k, (a, b, c) in enumerate(triples):
        ab = float(at_b[k])
        if math.isnan(ab):
            continue  # coincident points, angle undefined
        if ab < math.pi / 3 - tol:
            out.append(AngleViolation(a, b, c, ab, "below-60"))
        elif ab < max(float(at_a[k]), float(at_c[k])) - tol:
            out.append(AngleViolation(a, b, c, ab, "not-largest"))
    return out
