"""Reference answers used to score the solvers.

``triangle_incenter`` is exact (closed form).  ``brute_force_pia`` handles
any simple polygon but is only as accurate as its lattice spacing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import Degenerate, DegenerateInterior
from .geometry import Point, Polygon, bounding_box, probe_many, signed_area


@dataclass(frozen=True)
class ExactCircle:
    center: Point
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("inscribed circle radius must be positive")


def triangle_incenter(t: Union[Polygon, Sequence[Sequence[float]]]) -> ExactCircle:
    """Incircle of a triangle: side-length weighted vertex average, r = 2*area/perimeter."""
    pts = [Point(float(x), float(y)) for x, y in (t.vertices if isinstance(t, Polygon) else t)]
    if len(pts) != 3:
        raise ValueError(f"triangle needs 3 vertices, got {len(pts)}")
    area = abs(signed_area(pts))
    if area <= 1e-12:
        raise Degenerate("triangle vertices are collinear")
    A, B, C = pts
    a = math.dist(B, C)
    b = math.dist(C, A)
    c = math.dist(A, B)
    per = a + b + c
    center = Point((a * A.x + b * B.x + c * C.x) / per, (a * A.y + b * B.y + c * C.y) / per)
    return ExactCircle(center, 2.0 * area / per)


def brute_force_pia(poly: Polygon, resolution: int = 1001) -> ExactCircle:
    """Best interior node of a resolution x resolution lattice over the bounding box.

    Error is bounded by the lattice spacing.  Ties go to the first node in
    row-major order, matching the grid solver.
    """
    if resolution < 100:
        raise ValueError("resolution must be at least 100")
    box = bounding_box(poly)
    xs = box.min_x + np.arange(resolution) * (box.width / (resolution - 1))
    ys = box.min_y + np.arange(resolution) * (box.height / (resolution - 1))
    best_d = -math.inf
    best = None
    chunk = max(1, 2_000_000 // resolution)
    for start in range(0, resolution, chunk):
        yy = ys[start:start + chunk, None]
        inside, dist = probe_many(poly, xs[None, :], yy)
        scored = np.where(inside, dist, -np.inf)
        k = int(np.argmax(scored))
        d = float(scored.flat[k])
        if d > best_d:
            row, col = divmod(k, resolution)
            best_d = d
            best = Point(float(xs[col]), float(yy[row, 0]))
    if best is None:
        raise DegenerateInterior(f"no interior node at resolution {resolution}")
    # rescore with the scalar path so radius == clearance(center) exactly
    return ExactCircle(best, poly.probe(best.x, best.y)[1])
