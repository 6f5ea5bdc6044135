"""Static SVG of a polygon, its inscribed circle and (optionally) the probed nodes."""

from __future__ import annotations

from typing import Iterable, Optional

from .geometry import Point, Polygon, bounding_box
from .result import PiaResult


def _f(v: float) -> str:
    return format(v + 0.0, ".10g")


def render_svg(
    poly: Polygon,
    result: PiaResult,
    nodes: Optional[Iterable[tuple[Point, bool]]] = None,
) -> str:
    """SVG document with exactly one <polygon> and one <circle>.

    The y axis is flipped so the drawing has the usual mathematical
    orientation.  ``nodes`` are (point, inside) pairs drawn as small squares.
    """
    box = bounding_box(poly)
    pad = 0.05 * max(box.width, box.height)
    x0, y0 = box.min_x - pad, -(box.max_y + pad)
    w, h = box.width + 2 * pad, box.height + 2 * pad
    unit = max(w, h) / 400.0

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_f(x0)} {_f(y0)} {_f(w)} {_f(h)}" '
        f'width="600" height="{_f(600 * h / w)}">',
        f'<polygon points="{" ".join(f"{_f(x)},{_f(-y)}" for x, y in poly.vertices)}" '
        f'fill="#eef3fb" stroke="#1f3b73" stroke-width="{_f(1.5 * unit)}"/>',
    ]
    if nodes is not None:
        s = unit
        inside_d, outside_d = [], []
        for (x, y), inside in nodes:
            (inside_d if inside else outside_d).append(f"M{_f(x - s / 2)} {_f(-y - s / 2)}h{_f(s)}v{_f(s)}h{_f(-s)}z")
        if inside_d:
            parts.append(f'<path class="nodes-inside" d="{"".join(inside_d)}" fill="#2b8cbe"/>')
        if outside_d:
            parts.append(f'<path class="nodes-outside" d="{"".join(outside_d)}" fill="#bbbbbb"/>')
    cx, cy = result.center
    parts.append(
        f'<circle cx="{_f(cx)}" cy="{_f(-cy)}" r="{_f(result.radius)}" fill="none" '
        f'stroke="#d7301f" stroke-width="{_f(1.5 * unit)}"/>'
    )
    m = 4 * unit
    parts.append(
        f'<path class="center" d="M{_f(cx - m)} {_f(-cy)}h{_f(2 * m)}M{_f(cx)} {_f(-cy - m)}v{_f(2 * m)}" '
        f'stroke="#d7301f" stroke-width="{_f(unit)}"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
