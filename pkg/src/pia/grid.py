"""Sequential lattice refinement for the pole of inaccessibility.

Each iteration evaluates an n-by-m lattice spanning the current region,
keeps the best interior node seen so far, then recentres the region on it
and shrinks every side by sqrt(2) (the same update as the randomized
search, so the two are comparable node for node).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInterior
from .geometry import Point, Polygon, Region, bounding_box
from .random_search import shrink_region
from .result import IncumbentHook, NodeHook, PiaResult

MAX_DOUBLINGS = 3


@dataclass(frozen=True)
class GridConfig:
    n: int = 12
    m: int = 12
    min_accuracy: float = 1e-9
    max_iterations: int = 1000

    def __post_init__(self):
        if self.n < 2 or self.m < 2:
            raise ValueError("lattice needs n >= 2 and m >= 2")
        if not self.min_accuracy > 0:
            raise ValueError("min_accuracy must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


def grid_nodes(r: Region, n: int, m: int) -> list[Point]:
    """Lattice of n columns by m rows including the corners, row-major (y outer)."""
    sx = (r.max_x - r.min_x) / (n - 1)
    sy = (r.max_y - r.min_y) / (m - 1)
    xs = [r.min_x + i * sx for i in range(n)]
    return [Point(x, r.min_y + j * sy) for j in range(m) for x in xs]


def solve_grid(
    poly: Polygon,
    cfg: GridConfig = GridConfig(),
    *,
    on_node: NodeHook = None,
    on_incumbent: IncumbentHook = None,
) -> PiaResult:
    region = bounding_box(poly)
    best: Point | None = None
    best_d = -math.inf
    trace = []
    evaluated = 0
    iterations = 0
    converged = False
    probe = poly.probe

    while iterations < cfg.max_iterations:
        iterations += 1
        n, m = cfg.n, cfg.m
        for _ in range(MAX_DOUBLINGS + 1):
            interior = 0
            for node in grid_nodes(region, n, m):
                inside, d = probe(node.x, node.y)
                evaluated += 1
                if on_node is not None:
                    on_node(node, inside, d)
                if not inside:
                    continue
                interior += 1
                if d > best_d:
                    best, best_d = node, d
                    if on_incumbent is not None:
                        on_incumbent(node, d)
            if interior:
                break
            n, m = 2 * n, 2 * m
        else:
            raise DegenerateInterior(
                f"no interior lattice node in iteration {iterations} even at {n // 2}x{m // 2}"
            )
        trace.append(best_d)
        if region.min_dimension <= cfg.min_accuracy:
            converged = True
            break
        region = shrink_region(region, best)

    return PiaResult(best, best_d, iterations, evaluated, converged, tuple(trace))
