"""Planar primitives: points, segments, polygons, regions and distances.

All distances are Euclidean and measured to closed edge segments, not to
their supporting lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import InvalidPolygon

# Points closer than this to an edge are treated as lying on the boundary.
BOUNDARY_TOL = 1e-12
# |cross| below this counts as a collinear turn in the convexity test.
COLLINEAR_TOL = 1e-12


class Point(NamedTuple):
    x: float
    y: float


class Segment(NamedTuple):
    a: Point
    b: Point


@dataclass(frozen=True)
class SphericalPoint:
    """Longitude ``lam`` and latitude ``phi``, both in radians."""

    lam: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.lam) and math.isfinite(self.phi)):
            raise ValueError("spherical coordinates must be finite")
        if not -math.pi / 2 <= self.phi <= math.pi / 2:
            raise ValueError(f"latitude {self.phi} outside [-pi/2, pi/2]")
        if not -math.pi <= self.lam < math.pi:
            raise ValueError(f"longitude {self.lam} outside [-pi, pi)")


@dataclass(frozen=True)
class Region:
    """Axis-aligned search rectangle."""

    min_x: float
    max_x: float
    min_y: float
    max_y: float

    def __post_init__(self):
        if not (self.min_x < self.max_x and self.min_y < self.max_y):
            raise ValueError(f"empty region {self!r}")

    @property
    def width(self) -> float:
        return self.max_x - self.min_x

    @property
    def height(self) -> float:
        return self.max_y - self.min_y

    @property
    def min_dimension(self) -> float:
        return min(self.width, self.height)

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def center(self) -> Point:
        return Point((self.min_x + self.max_x) / 2, (self.min_y + self.max_y) / 2)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.min_x, self.max_x, self.min_y, self.max_y)


def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def _on_collinear_segment(px, py, ax, ay, bx, by):
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def segments_intersect(s: Segment, t: Segment) -> bool:
    """True if the closed segments share at least one point."""
    (ax, ay), (bx, by) = s
    (cx, cy), (dx, dy) = t
    d1 = _cross(cx, cy, dx, dy, ax, ay)
    d2 = _cross(cx, cy, dx, dy, bx, by)
    d3 = _cross(ax, ay, bx, by, cx, cy)
    d4 = _cross(ax, ay, bx, by, dx, dy)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and _on_collinear_segment(ax, ay, cx, cy, dx, dy):
        return True
    if d2 == 0 and _on_collinear_segment(bx, by, cx, cy, dx, dy):
        return True
    if d3 == 0 and _on_collinear_segment(cx, cy, ax, ay, bx, by):
        return True
    if d4 == 0 and _on_collinear_segment(dx, dy, ax, ay, bx, by):
        return True
    return False


def signed_area(vertices: Sequence[tuple[float, float]]) -> float:
    """Shoelace area, positive for counter-clockwise rings."""
    total = 0.0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total / 2


class Polygon:
    """A simple polygon stored counter-clockwise.

    Construction validates the ring (at least three vertices, finite
    coordinates, no consecutive duplicates, no self-intersections, non-zero
    area) and reverses clockwise input.  Instances are immutable.
    """

    __slots__ = ("_vertices", "_edge_data", "_area")

    def __init__(self, vertices: Iterable[Sequence[float]]):
        pts = []
        for v in vertices:
            try:
                x, y = (float(c) for c in v)
            except (TypeError, ValueError) as exc:
                raise InvalidPolygon(f"bad vertex {v!r}") from exc
            if not (math.isfinite(x) and math.isfinite(y)):
                raise InvalidPolygon(f"non-finite vertex {v!r}")
            pts.append(Point(x, y))
        if len(pts) < 3:
            raise InvalidPolygon(f"need at least 3 vertices, got {len(pts)}")
        for i, p in enumerate(pts):
            if p == pts[(i + 1) % len(pts)]:
                raise InvalidPolygon(f"duplicate consecutive vertex {tuple(p)}")

        area = signed_area(pts)
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        diag2 = (max(xs) - min(xs)) ** 2 + (max(ys) - min(ys)) ** 2
        if abs(area) <= 1e-14 * diag2:
            raise InvalidPolygon("polygon has zero area")
        if area < 0:
            pts = [pts[0]] + pts[:0:-1]
            area = -area
        _check_simple(pts)

        self._vertices = tuple(pts)
        self._area = area
        edges = []
        n = len(pts)
        for i in range(n):
            ax, ay = pts[i]
            bx, by = pts[(i + 1) % n]
            dx, dy = bx - ax, by - ay
            edges.append((ax, ay, bx, by, dx, dy, dx * dx + dy * dy))
        self._edge_data = tuple(edges)

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self._vertices

    @property
    def area(self) -> float:
        return self._area

    def edges(self) -> list[Segment]:
        n = len(self._vertices)
        return [Segment(self._vertices[i], self._vertices[(i + 1) % n]) for i in range(n)]

    def translated(self, dx: float, dy: float) -> "Polygon":
        return Polygon((x + dx, y + dy) for x, y in self._vertices)

    def scaled(self, factor: float) -> "Polygon":
        return Polygon((x * factor, y * factor) for x, y in self._vertices)

    def to_list(self) -> list[list[float]]:
        return [[x, y] for x, y in self._vertices]

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polygon):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"Polygon({[tuple(v) for v in self._vertices]!r})"

    def probe(self, x: float, y: float) -> tuple[bool, float]:
        """Return ``(inside, clearance)`` for a point in a single pass over the edges.

        ``inside`` uses the closed-region convention.  This is the hot path of
        both search solvers, hence the unpacked edge tuples.
        """
        inside = False
        best = math.inf
        for ax, ay, bx, by, dx, dy, len2 in self._edge_data:
            if (ay > y) != (by > y) and x < dx * (y - ay) / dy + ax:
                inside = not inside
            t = ((x - ax) * dx + (y - ay) * dy) / len2
            if t <= 0.0:
                ex, ey = x - ax, y - ay
            elif t >= 1.0:
                ex, ey = x - bx, y - by
            else:
                ex, ey = x - (ax + t * dx), y - (ay + t * dy)
            d2 = ex * ex + ey * ey
            if d2 < best:
                best = d2
        d = math.sqrt(best)
        return inside or d <= BOUNDARY_TOL, d


def _check_simple(pts: Sequence[Point]) -> None:
    n = len(pts)
    segs = [Segment(pts[i], pts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        # adjacent edges may only share their common vertex: reject a fold-back
        (ax, ay), (bx, by) = segs[i]
        cx, cy = segs[(i + 1) % n].b
        if _cross(ax, ay, bx, by, cx, cy) == 0 and (bx - ax) * (cx - bx) + (by - ay) * (cy - by) < 0:
            raise InvalidPolygon(f"edge {i} folds back onto edge {(i + 1) % n}")
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if segments_intersect(segs[i], segs[j]):
                raise InvalidPolygon(f"edges {i} and {j} intersect")


def point_segment_distance(p: Point, s: Segment) -> float:
    """Distance from ``p`` to the closest point of the closed segment ``s``."""
    px, py = p
    (ax, ay), (bx, by) = s
    dx, dy = bx - ax, by - ay
    len2 = dx * dx + dy * dy
    if len2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / len2
    if t <= 0.0:
        return math.hypot(px - ax, py - ay)
    if t >= 1.0:
        return math.hypot(px - bx, py - by)
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def point_in_polygon(p: Point, poly: Polygon) -> bool:
    """Ray-casting containment; points on the boundary count as inside."""
    return poly.probe(p[0], p[1])[0]


def clearance(p: Point, poly: Polygon) -> float:
    """Distance from ``p`` to the nearest edge of ``poly``."""
    return poly.probe(p[0], p[1])[1]


def bounding_box(poly: Polygon) -> Region:
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    return Region(min(xs), max(xs), min(ys), max(ys))


def is_convex(poly: Polygon) -> bool:
    """True if no vertex of the (counter-clockwise) ring turns clockwise.

    Collinear consecutive edges are tolerated.
    """
    v = poly.vertices
    n = len(v)
    for i in range(n):
        ox, oy = v[i - 1]
        ax, ay = v[i]
        bx, by = v[(i + 1) % n]
        if _cross(ox, oy, ax, ay, bx, by) < -COLLINEAR_TOL:
            return False
    return True


def great_circle_distance(a: SphericalPoint, b: SphericalPoint) -> float:
    """Central angle between two points on the unit sphere (spherical law of cosines)."""
    c = math.sin(a.phi) * math.sin(b.phi) + math.cos(a.phi) * math.cos(b.phi) * math.cos(a.lam - b.lam)
    return math.acos(max(-1.0, min(1.0, c)))


def probe_many(poly: Polygon, xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :meth:`Polygon.probe` over broadcastable coordinate arrays."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    xs, ys = np.broadcast_arrays(xs, ys)
    inside = np.zeros(xs.shape, dtype=bool)
    best = np.full(xs.shape, np.inf)
    for ax, ay, bx, by, dx, dy, len2 in poly._edge_data:
        if dy != 0.0:
            crosses = ((ay > ys) != (by > ys)) & (xs < dx * (ys - ay) / dy + ax)
            inside ^= crosses
        t = np.clip(((xs - ax) * dx + (ys - ay) * dy) / len2, 0.0, 1.0)
        ex = xs - (ax + t * dx)
        ey = ys - (ay + t * dy)
        np.minimum(best, ex * ex + ey * ey, out=best)
    dist = np.sqrt(best)
    return inside | (dist <= BOUNDARY_TOL), dist
