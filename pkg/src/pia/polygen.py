"""Seeded random test polygons.

Corpus instance ``i`` draws from its own PCG64 stream derived from
``(seed, i)``, so any instance can be regenerated on its own.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import GenerationFailed, InvalidPolygon
from .geometry import COLLINEAR_TOL, Polygon, Region, is_convex, signed_area

UNIT_BOUNDS = Region(0.0, 1.0, 0.0, 1.0)
MAX_ATTEMPTS = 100
# relative to the bounds area; only excludes numerically flat triangles
MIN_AREA_FRACTION = 1e-9


def substream(seed: int, *key: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *key])))


def derive_seed(seed: int, *key: int) -> int:
    """A 64-bit seed determined by ``seed`` and the integer ``key`` path."""
    return int(np.random.SeedSequence([seed, *key]).generate_state(1, np.uint64)[0])


def random_triangle(rng: np.random.Generator, bounds: Region = UNIT_BOUNDS) -> Polygon:
    floor = MIN_AREA_FRACTION * bounds.area
    for _ in range(MAX_ATTEMPTS):
        u = rng.random(6)
        pts = [
            (bounds.min_x + u[2 * i] * bounds.width, bounds.min_y + u[2 * i + 1] * bounds.height)
            for i in range(3)
        ]
        if abs(signed_area(pts)) < floor:
            continue
        try:
            return Polygon(pts)
        except InvalidPolygon:
            continue
    raise GenerationFailed(f"no usable triangle after {MAX_ATTEMPTS} attempts")


def random_convex_polygon(rng: np.random.Generator, n: int, bounds: Region = UNIT_BOUNDS) -> Polygon:
    """Convex n-gon from angle-sorted points on a random axis-aligned ellipse.

    Each vertex is pushed radially by up to 10%.  Vertices that break
    convexity get their jitter redrawn at half the amplitude (neighbours
    too) until the ring is strictly convex.
    """
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    cx, cy = bounds.center
    rx = bounds.width / 2 * rng.uniform(0.6, 0.9)
    ry = bounds.height / 2 * rng.uniform(0.6, 0.9)
    min_gap = min(1e-4, math.pi / n)
    for _ in range(MAX_ATTEMPTS):
        theta = np.sort(rng.uniform(0.0, 2 * math.pi, n))
        gaps = np.diff(np.append(theta, theta[0] + 2 * math.pi))
        if gaps.min() < min_gap:
            continue
        jitter = rng.uniform(-0.1, 0.1, n)
        for _ in range(64):
            scale = 1.0 + jitter
            pts = np.column_stack([cx + rx * scale * np.cos(theta), cy + ry * scale * np.sin(theta)])
            bad = _non_convex_vertices(pts)
            if not bad:
                poly = Polygon(pts.tolist())
                if is_convex(poly):
                    return poly
                break
            for i in bad:
                for j in (i - 1, i, (i + 1) % n):
                    jitter[j] = rng.uniform(-0.5, 0.5) * abs(jitter[j])
    raise GenerationFailed(f"no convex {n}-gon after {MAX_ATTEMPTS} attempts")


def _non_convex_vertices(pts: np.ndarray) -> list[int]:
    prev = np.roll(pts, 1, axis=0)
    nxt = np.roll(pts, -1, axis=0)
    cross = (pts[:, 0] - prev[:, 0]) * (nxt[:, 1] - prev[:, 1]) - (pts[:, 1] - prev[:, 1]) * (nxt[:, 0] - prev[:, 0])
    return [int(i) for i in np.flatnonzero(cross <= COLLINEAR_TOL)]


def generate_corpus(
    shape: str, count: int, seed: int, *, n: int = 12, bounds: Region = UNIT_BOUNDS
) -> list[Polygon]:
    if count < 1:
        raise ValueError("count must be >= 1")
    if shape == "triangle":
        return [random_triangle(substream(seed, i), bounds) for i in range(count)]
    if shape == "convex":
        return [random_convex_polygon(substream(seed, i), n, bounds) for i in range(count)]
    raise ValueError(f"unknown shape {shape!r}; expected 'triangle' or 'convex'")
