"""SVG drawing of planar point sets and trees."""

from __future__ import annotations

from .errors import InvalidInputError
from .geometry import PointSet
from .mst import SpanningTree


def render_svg(
    ps: PointSet,
    tree: SpanningTree,
    mst: SpanningTree | None = None,
    size: int = 600,
    margin: int = 20,
) -> str:
    """Points as dots, ``tree`` as solid lines, ``mst`` (optional) dashed underneath."""
    if ps.dim != 2:
        raise InvalidInputError(f"SVG rendering is planar only; got dimension {ps.dim}")
    xs, ys = ps.coords[:, 0], ps.coords[:, 1]
    x0, y0 = float(xs.min()), float(ys.min())
    span = max(float(xs.max()) - x0, float(ys.max()) - y0) or 1.0
    scale = (size - 2 * margin) / span

    def xy(i):
        # SVG's y axis points down
        return margin + (ps.coords[i, 0] - x0) * scale, size - margin - (ps.coords[i, 1] - y0) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if mst is not None:
        out.append('<g stroke="#999999" stroke-width="1" stroke-dasharray="4 3">')
        for u, v, _ in mst.edges:
            (x1, y1), (x2, y2) = xy(u), xy(v)
            out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
        out.append("</g>")
    out.append('<g stroke="#1f4e9c" stroke-width="2">')
    for u, v, _ in tree.edges:
        (x1, y1), (x2, y2) = xy(u), xy(v)
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append("</g>")
    out.append('<g fill="#c0392b">')
    for i in range(ps.n):
        cx, cy = xy(i)
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="3"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
