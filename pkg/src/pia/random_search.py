"""Randomized shrinking-region search for the pole of inaccessibility.

Nodes are drawn uniformly from the current region.  Each interior node is
scored by its clearance and replaces the incumbent only if it improves the
maximin value.  After ``k`` consecutive interior non-improvements the region
is recentred on the incumbent and shrunk by a factor of sqrt(2) per side.
Exterior draws are discarded without counting as misses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInterior
from .geometry import Point, Polygon, Region, bounding_box
from .result import IncumbentHook, NodeHook, PiaResult

_SHRINK = 2.0 * math.sqrt(2.0)


@dataclass(frozen=True)
class RandomConfig:
    k: int = 15
    min_accuracy: float = 1e-9
    sample_cap: int = 10_000
    seed: int = 0
    max_iterations: int = 1000

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not self.min_accuracy > 0:
            raise ValueError("min_accuracy must be positive")
        if self.sample_cap < self.k:
            raise ValueError("sample_cap must be >= k")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 stream for ``seed``; the bit stream is identical on every platform."""
    return np.random.Generator(np.random.PCG64(seed))


def sample_point(r: Region, rng: np.random.Generator) -> Point:
    u = rng.random()
    v = rng.random()
    return Point(r.min_x + u * (r.max_x - r.min_x), r.min_y + v * (r.max_y - r.min_y))


def shrink_region(r: Region, incumbent: Point) -> Region:
    """Recentre ``r`` on ``incumbent`` with every side divided by sqrt(2).

    Both half-extents come from the bounds before the update.  The result is
    not clipped to the polygon.
    """
    hx = (r.max_x - r.min_x) / _SHRINK
    hy = (r.max_y - r.min_y) / _SHRINK
    x, y = incumbent
    return Region(x - hx, x + hx, y - hy, y + hy)


def solve_random(
    poly: Polygon,
    cfg: RandomConfig = RandomConfig(),
    *,
    on_node: NodeHook = None,
    on_incumbent: IncumbentHook = None,
) -> PiaResult:
    rng = make_rng(cfg.seed)
    region = bounding_box(poly)
    best: Point | None = None
    best_d = -math.inf
    trace = []
    samples = 0
    iterations = 0
    converged = False
    probe = poly.probe

    while iterations < cfg.max_iterations:
        iterations += 1
        misses = 0
        drawn = 0
        interior = 0
        while misses < cfg.k and drawn < cfg.sample_cap:
            node = sample_point(region, rng)
            drawn += 1
            inside, d = probe(node.x, node.y)
            if on_node is not None:
                on_node(node, inside, d)
            if not inside:
                continue
            interior += 1
            if d > best_d:
                best, best_d = node, d
                misses = 0
                if on_incumbent is not None:
                    on_incumbent(node, d)
            else:
                misses += 1
        samples += drawn
        if interior == 0:
            raise DegenerateInterior(
                f"no interior sample among {drawn} draws in iteration {iterations}"
            )
        trace.append(best_d)
        if region.min_dimension <= cfg.min_accuracy:
            converged = True
            break
        region = shrink_region(region, best)

    return PiaResult(best, best_d, iterations, samples, converged, tuple(trace))
