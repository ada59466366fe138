"""Plain-text point and tree files.

Point file::

    # optional comments; '#root=<idx>' marks a designated root
    0.0 0.0
    1.0 0.5

Tree file::

    # n=3 weight=2
    0 1 1
    1 2 1
"""

from __future__ import annotations

import math
import os
import re
import tempfile
from pathlib import Path

from .errors import InvalidInputError
from .geometry import PointSet
from .mst import SpanningTree

_ROOT_RE = re.compile(r"^#\s*root\s*=\s*(\d+)\s*$")
_HEADER_RE = re.compile(r"^#\s*n\s*=\s*(\d+)\s+weight\s*=\s*(\S+)\s*$")


class FileFormatError(InvalidInputError):
    def __init__(self, path, lineno: int | None, msg: str):
        where = f"{path}:{lineno}" if lineno is not None else str(path)
        super().__init__(f"{where}: {msg}")
        self.lineno = lineno


def atomic_write(path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def g12(x: float) -> str:
    return f"{x:.12g}"


def format_points(ps: PointSet, root: int | None = None, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    if root is not None:
        lines.append(f"#root={root}")
    for row in ps.coords:
        lines.append(" ".join(repr(float(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_points(text: str, source="<string>") -> tuple[PointSet, int | None]:
    """Parse a point file; returns the points and the ``#root=`` index, if any."""
    rows: list[list[float]] = []
    root = None
    dim = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _ROOT_RE.match(line)
            if m:
                root = int(m.group(1))
            continue
        fields = line.split()
        try:
            vals = [float(f) for f in fields]
        except ValueError:
            raise FileFormatError(source, lineno, f"cannot parse coordinates {line!r}") from None
        if not all(math.isfinite(v) for v in vals):
            raise FileFormatError(source, lineno, "coordinates must be finite")
        if dim is None:
            dim = len(vals)
        elif len(vals) != dim:
            raise FileFormatError(source, lineno, f"expected {dim} coordinates, got {len(vals)}")
        rows.append(vals)
    if not rows:
        raise FileFormatError(source, None, "no points found")
    if root is not None and root >= len(rows):
        raise FileFormatError(source, None, f"root index {root} out of range")
    return PointSet.from_points(rows), root


def read_points(path) -> tuple[PointSet, int | None]:
    return parse_points(Path(path).read_text(), source=path)


def write_points(path, ps: PointSet, root: int | None = None, comments: list[str] | None = None) -> None:
    atomic_write(path, format_points(ps, root, comments))


def format_tree(t: SpanningTree) -> str:
    lines = [f"# n={t.n} weight={g12(t.total_weight)}"]
    lines += [f"{u} {v} {g12(w)}" for u, v, w in t.edges]
    return "\n".join(lines) + "\n"


def parse_tree(text: str, source="<string>") -> SpanningTree:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER_RE.match(line)
            if m and n is None:
                n = int(m.group(1))
            continue
        fields = line.split()
        if len(fields) != 3:
            raise FileFormatError(source, lineno, f"expected 'u v w', got {line!r}")
        try:
            u, v, w = int(fields[0]), int(fields[1]), float(fields[2])
        except ValueError:
            raise FileFormatError(source, lineno, f"cannot parse edge {line!r}") from None
        edges.append((u, v, w))
    if n is None:
        raise FileFormatError(source, None, "missing '# n=<n> weight=<w>' header")
    try:
        return SpanningTree.from_edges(n, edges)
    except InvalidInputError as exc:
        raise FileFormatError(source, None, str(exc)) from None


def read_tree(path) -> SpanningTree:
    return parse_tree(Path(path).read_text(), source=path)


def write_tree(path, t: SpanningTree) -> None:
    atomic_write(path, format_tree(t))
