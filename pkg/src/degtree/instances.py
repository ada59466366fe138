"""Point-set generators: the known hard instances plus seeded random clouds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import InvalidInputError
from .geometry import PointSet

# Staircase realisation: chain steps have length `unit`, the leaf hanging
# opposite each step is shortened by this fraction so every intended MST edge
# is strictly shorter than any competing edge (margin ~0.011 * unit).
STAIRCASE_LEAF_SHRINK = 0.15
# Directions (degrees) of the non-chain arms around the branching vertex.
_STAIR_ARMS = {"up": 94.0, "root": 155.0, "low": 218.0}


def gen_square_center() -> PointSet:
    """Unit square corners followed by the centre (index 4)."""
    return PointSet.from_points([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5)])


def gen_pentagon_centroid(circumradius: float = 1.0) -> PointSet:
    """Regular pentagon (vertices at 90 + 72k degrees) followed by its centre (index 5)."""
    if not circumradius > 0:
        raise InvalidInputError(f"circumradius must be positive, got {circumradius}")
    pts = []
    for k in range(5):
        a = math.radians(90.0 + 72.0 * k)
        pts.append((circumradius * math.cos(a), circumradius * math.sin(a)))
    pts.append((0.0, 0.0))
    return PointSet.from_points(pts)


def _staircase(levels: int, unit: float) -> tuple[list[tuple[float, float]], list[tuple[int, int]]]:
    if not isinstance(levels, (int, np.integer)) or levels < 1:
        raise InvalidInputError(f"levels must be an integer >= 1, got {levels!r}")
    if not unit > 0:
        raise InvalidInputError(f"unit must be positive, got {unit}")

    def arm(deg):
        a = math.radians(deg)
        return (unit * math.cos(a), unit * math.sin(a))

    # 0 = root leaf, 1 = branching vertex, 2/3 = its two leaf children
    pts = [arm(_STAIR_ARMS["root"]), (0.0, 0.0), arm(_STAIR_ARMS["up"]), arm(_STAIR_ARMS["low"])]
    edges = [(0, 1), (1, 2), (1, 3)]
    leaf_len = (1.0 - STAIRCASE_LEAF_SHRINK) * unit
    prev = 1
    x, y = unit, 0.0
    for i in range(2 * levels):
        dx, dy = (0.0, -1.0) if i % 2 == 0 else (1.0, 0.0)
        ci = len(pts)
        pts.append((x, y))
        pts.append((x - leaf_len * dx, y - leaf_len * dy))
        edges += [(prev, ci), (ci, ci + 1)]
        prev = ci
        x, y = x + unit * dx, y + unit * dy
    pts.append((x, y))
    edges.append((prev, len(pts) - 1))
    return pts, sorted((min(e), max(e)) for e in edges)


def gen_staircase_bad(levels: int, unit: float = 1.0) -> tuple[PointSet, int]:
    """Staircase family on which the anchored Tree-3 ratio keeps climbing.

    The root leaf hangs off a vertex with three children; one of them starts
    a zig-zag chain (down, right, down, ...) of ``2 * levels`` vertices, each
    carrying one leaf on the far side of its step, so every chain vertex has
    two collinear children in opposite directions.  With leaves shortened by
    a factor ``1 - s`` the ratio tends to ``(3 - 2s) / (2 - s)``, which is
    about 1.459 for the default shrink and reaches 1.5 only as ``s -> 0``.
    Returns the points and the designated root (index 0, also the
    lowest-index leaf).
    """
    pts, _ = _staircase(levels, unit)
    return PointSet.from_points(pts), 0


def staircase_intended_edges(levels: int, unit: float = 1.0) -> list[tuple[int, int]]:
    """The tree the staircase geometry is built to have as its unique MST."""
    return _staircase(levels, unit)[1]


def gen_random_uniform(n: int, d: int, seed: int) -> PointSet:
    """``n`` points uniform in the unit cube [0, 1)^d."""
    if n < 1 or d < 1:
        raise InvalidInputError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    return PointSet(np.random.default_rng(seed).random((n, d)))


def gen_grid(rows: int, cols: int, jitter: float = 0.0, seed: int = 0) -> PointSet:
    """Integer lattice points, each displaced uniformly within +-jitter per axis."""
    if rows < 1 or cols < 1:
        raise InvalidInputError(f"need rows, cols >= 1, got {rows}x{cols}")
    if jitter < 0:
        raise InvalidInputError(f"jitter must be non-negative, got {jitter}")
    r, c = np.meshgrid(np.arange(rows, dtype=float), np.arange(cols, dtype=float), indexing="ij")
    pts = np.column_stack([c.ravel(), r.ravel()])
    if jitter:
        pts = pts + np.random.default_rng(seed).uniform(-jitter, jitter, pts.shape)
    return PointSet(pts)


def gen_sphere_shell(n: int, d: int, seed: int) -> PointSet:
    """``n`` points uniform on the unit sphere in R^d (d >= 3)."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    if d < 3:
        raise InvalidInputError(f"sphere_shell needs d >= 3, got {d}")
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((n, d))
    norms = np.linalg.norm(pts, axis=1)
    while np.any(norms == 0):  # practically unreachable
        bad = norms == 0
        pts[bad] = rng.standard_normal((int(bad.sum()), d))
        norms = np.linalg.norm(pts, axis=1)
    return PointSet(pts / norms[:, None])


FAMILIES = ("square_center", "pentagon_centroid", "staircase_bad", "random_uniform", "grid", "sphere_shell")

_DEFAULTS: dict[str, dict[str, Any]] = {
    "square_center": {},
    "pentagon_centroid": {"radius": 1.0},
    "staircase_bad": {"levels": 5, "unit": 1.0},
    "random_uniform": {"n": 100, "d": 2, "seed": 0},
    "grid": {"rows": 5, "cols": 5, "jitter": 0.0, "seed": 0},
    "sphere_shell": {"n": 50, "d": 3, "seed": 0},
}


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        unknown = set(self.params) - set(_DEFAULTS[self.family])
        if unknown:
            raise InvalidInputError(f"unexpected parameters for {self.family}: {sorted(unknown)}")

    def resolved(self) -> dict[str, Any]:
        return {**_DEFAULTS[self.family], **self.params}

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "params": self.resolved()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "InstanceSpec":
        if "family" not in data:
            raise InvalidInputError("instance spec needs a 'family' field")
        return cls(data["family"], dict(data.get("params", {})))


def generate(spec: InstanceSpec) -> tuple[PointSet, int | None]:
    """Build the instance; the second item is the designated root, if the family has one."""
    p = spec.resolved()
    fam = spec.family
    if fam == "square_center":
        return gen_square_center(), None
    if fam == "pentagon_centroid":
        return gen_pentagon_centroid(float(p["radius"])), None
    if fam == "staircase_bad":
        return gen_staircase_bad(int(p["levels"]), float(p["unit"]))
    if fam == "random_uniform":
        return gen_random_uniform(int(p["n"]), int(p["d"]), int(p["seed"])), None
    if fam == "grid":
        return gen_grid(int(p["rows"]), int(p["cols"]), float(p["jitter"]), int(p["seed"])), None
    return gen_sphere_shell(int(p["n"]), int(p["d"]), int(p["seed"])), None
