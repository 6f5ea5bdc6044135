"""Exact largest inscribed circle of a convex polygon as a linear program.

Each edge becomes a half-plane ``a x + b y <= c`` with ``(a, b)`` the unit
outward normal, so ``c - (a x + b y)`` is the distance from an interior
point to that edge's supporting line.  Maximizing a common lower bound Z on
those distances gives the Chebyshev center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import Infeasible, NotConvex, Unbounded
from .geometry import Point, Polygon, bounding_box, is_convex
from .result import PiaResult
from .simplex import LpProblem, LpStatus, solve_lp


@dataclass(frozen=True)
class HalfPlane:
    """``a*x + b*y <= c`` where ``(a, b)`` is the unit outward normal."""

    a: float
    b: float
    c: float

    @property
    def inward_normal(self) -> tuple[float, float]:
        return (-self.a, -self.b)

    def distance(self, p: Point) -> float:
        """Signed distance to the boundary line, positive on the interior side."""
        return self.c - (self.a * p[0] + self.b * p[1])


def edges_to_halfplanes(poly: Polygon) -> list[HalfPlane]:
    if not is_convex(poly):
        raise NotConvex("polygon has a reflex vertex")
    out = []
    for (ax, ay), (bx, by) in poly.edges():
        dx, dy = bx - ax, by - ay
        length = math.hypot(dx, dy)
        # counter-clockwise ring: the interior lies to the left of each edge
        a, b = dy / length, -dx / length
        out.append(HalfPlane(a, b, a * ax + b * ay))
    return out


def build_chebyshev_lp(halfplanes: Sequence[HalfPlane], shift: Point) -> LpProblem:
    """LP over ``(x - shift.x, y - shift.y, Z)``, all nonnegative, maximizing Z."""
    if not halfplanes:
        raise ValueError("need at least one half-plane")
    sx, sy = shift
    rows = tuple((h.a, h.b, 1.0) for h in halfplanes)
    rhs = tuple(h.c - h.a * sx - h.b * sy for h in halfplanes)
    return LpProblem((0.0, 0.0, 1.0), rows, rhs)


def solve_chebyshev(poly: Polygon) -> PiaResult:
    halfplanes = edges_to_halfplanes(poly)
    box = bounding_box(poly)
    shift = Point(box.min_x, box.min_y)
    sol = solve_lp(build_chebyshev_lp(halfplanes, shift))
    if sol.status is LpStatus.INFEASIBLE:
        raise Infeasible("Chebyshev LP infeasible; half-plane construction is inconsistent")
    if sol.status is LpStatus.UNBOUNDED:
        raise Unbounded("Chebyshev LP unbounded; half-plane construction is inconsistent")
    xs, ys, z = sol.variables
    center = Point(xs + shift.x, ys + shift.y)
    return PiaResult(center, z, sol.pivots, 0, True, (z,))


def tight_constraints(halfplanes: Sequence[HalfPlane], center: Point, radius: float, tol: float = 1e-7) -> int:
    """How many edges the circle touches, i.e. constraints active at the optimum."""
    return sum(1 for h in halfplanes if abs(h.distance(center) - radius) <= tol)
