"""Floating-point geometry shared by the tree constructions.

Points are plain coordinate sequences (anything ``numpy.asarray`` accepts);
a :class:`PointSet` freezes a list of them into an ``(n, d)`` array that the
rest of the package indexes into.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateAngleError, InvalidInputError

#: Absolute tolerance, multiplied by a length scale where one exists.
TOL = 1e-9

PERIMETER_COEFF = 3.0 * math.sqrt(3.0) - 4.0
TETRAHEDRON_MAX = 4.0 * math.sqrt(6.0)


def _as_point(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidInputError(f"a point must be a non-empty 1-d coordinate list, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"point has non-finite coordinates: {arr.tolist()}")
    return arr


def _same_dim(*pts: np.ndarray) -> None:
    dims = {p.shape[0] for p in pts}
    if len(dims) != 1:
        raise InvalidInputError(f"dimension mismatch: {sorted(dims)}")


@dataclass(frozen=True, eq=False)
class PointSet:
    """Indexed, immutable collection of ``n >= 1`` points in R^d."""

    coords: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coords, dtype=float, copy=True)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidInputError(f"a point set needs shape (n>=1, d>=1), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError("point set contains non-finite coordinates")
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    @classmethod
    def from_points(cls, points: Sequence[Sequence[float]]) -> "PointSet":
        if len(points) == 0:
            raise InvalidInputError("empty point set")
        dims = {len(p) for p in points}
        if len(dims) != 1:
            raise InvalidInputError(f"points have mixed dimensions {sorted(dims)}")
        return cls(np.asarray(points, dtype=float))

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def dim(self) -> int:
        return self.coords.shape[1]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> np.ndarray:
        return self.coords[i]

    def dist(self, i: int, j: int) -> float:
        return distance(self.coords[i], self.coords[j])

    def distance_matrix(self, idx: Sequence[int] | None = None) -> np.ndarray:
        """Pairwise distances among ``idx`` (all points when omitted)."""
        pts = self.coords if idx is None else self.coords[np.asarray(idx, dtype=int)]
        diff = pts[:, None, :] - pts[None, :, :]
        return np.sqrt(np.sum(diff * diff, axis=-1))

    def diameter_scale(self) -> float:
        """Cheap diameter proxy: length of the bounding-box diagonal."""
        span = self.coords.max(axis=0) - self.coords.min(axis=0)
        return float(np.sqrt(np.sum(span * span)))

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and np.array_equal(self.coords, other.coords)

    __hash__ = None


def distance(a, b) -> float:
    a, b = _as_point(a), _as_point(b)
    _same_dim(a, b)
    diff = a - b
    return float(np.sqrt(np.sum(diff * diff)))


def angle_at(b, a, c) -> float:
    """Angle ABC at vertex ``b`` in radians, in [0, pi]."""
    a, b, c = _as_point(a), _as_point(b), _as_point(c)
    _same_dim(a, b, c)
    u, v = a - b, c - b
    nu, nv = float(np.sqrt(u @ u)), float(np.sqrt(v @ v))
    if nu == 0.0 or nv == 0.0:
        raise DegenerateAngleError("angle with a zero-length arm is undefined")
    cos = float(u @ v) / (nu * nv)
    return math.acos(min(1.0, max(-1.0, cos)))


def polygon_perimeter(vertices) -> float:
    """Closed perimeter v1 -> v2 -> ... -> vk -> v1."""
    pts = [_as_point(p) for p in vertices]
    if len(pts) < 2:
        raise InvalidInputError("a polygon needs at least 2 vertices")
    _same_dim(*pts)
    return math.fsum(distance(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts)))


def _norms(v: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(v * v, axis=-1))


def triangle_bound_slack_many(x, a, b, c) -> np.ndarray:
    """Vectorised :func:`triangle_bound_slack` over rows of ``(m, d)`` arrays."""
    x, a, b, c = (np.atleast_2d(np.asarray(p, dtype=float)) for p in (x, a, b, c))
    if not (x.shape == a.shape == b.shape == c.shape):
        raise InvalidInputError("dimension mismatch between quadruple arrays")
    xa, xb, xc = _norms(x - a), _norms(x - b), _norms(x - c)
    scale = np.maximum(np.maximum(xa, xb), xc)
    if np.any(xa > np.minimum(xb, xc) + 1e-12 * scale):
        raise InvalidInputError("x must be at least as close to a as to b and c")
    perim = _norms(a - b) + _norms(b - c) + _norms(c - a)
    return PERIMETER_COEFF * xa + 2.0 * (xb + xc) - perim


def triangle_bound_slack(x, a, b, c) -> float:
    """RHS minus LHS of  P(abc) <= (3*sqrt(3) - 4)|xa| + 2(|xb| + |xc|).

    ``a`` must be the point of the triangle nearest to ``x``.  The inequality
    holds in every dimension, so the result is non-negative up to rounding
    and zero for an equilateral triangle centred on ``x``.
    """
    x, a, b, c = (_as_point(p) for p in (x, a, b, c))
    _same_dim(x, a, b, c)
    return float(triangle_bound_slack_many(x, a, b, c)[0])


def tetrahedron_sum_slack_many(p1, p2, p3, p4) -> np.ndarray:
    """Vectorised :func:`tetrahedron_sum_slack` over rows of ``(m, d)`` arrays."""
    pts = [np.atleast_2d(np.asarray(p, dtype=float)) for p in (p1, p2, p3, p4)]
    if len({p.shape for p in pts}) != 1:
        raise InvalidInputError("dimension mismatch between quadruple arrays")
    if pts[0].shape[1] < 3:
        raise InvalidInputError("tetrahedron bound needs dimension >= 3")
    for p in pts:
        if np.any(np.abs(_norms(p) - 1.0) > 1e-9):
            raise InvalidInputError("all points must lie on the unit sphere")
    total = np.zeros(pts[0].shape[0])
    for i in range(4):
        for j in range(i + 1, 4):
            total += _norms(pts[i] - pts[j])
    return TETRAHEDRON_MAX - total


def tetrahedron_sum_slack(p1, p2, p3, p4) -> float:
    """4*sqrt(6) minus the six pairwise distances of four unit vectors."""
    pts = [_as_point(p) for p in (p1, p2, p3, p4)]
    _same_dim(*pts)
    return float(tetrahedron_sum_slack_many(*pts)[0])
