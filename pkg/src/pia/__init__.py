"""Largest inscribed circle (pole of inaccessibility) of simple polygons.

Three solvers share one result type: lattice refinement (:func:`solve_grid`),
randomized shrinking-region search (:func:`solve_random`) and an exact
linear program for convex polygons (:func:`solve_chebyshev`).
"""

from .errors import (
    Degenerate,
    DegenerateInterior,
    GenerationFailed,
    Infeasible,
    InvalidPolygon,
    NotConvex,
    NumericalBreakdown,
    PiaError,
    Unbounded,
)
from .geometry import (
    Point,
    Polygon,
    Region,
    Segment,
    SphericalPoint,
    bounding_box,
    clearance,
    great_circle_distance,
    is_convex,
    point_in_polygon,
    point_segment_distance,
)
from .grid import GridConfig, grid_nodes, solve_grid
from .lp import HalfPlane, build_chebyshev_lp, edges_to_halfplanes, solve_chebyshev
from .oracle import ExactCircle, brute_force_pia, triangle_incenter
from .random_search import RandomConfig, sample_point, shrink_region, solve_random
from .result import PiaResult
from .simplex import LpProblem, LpSolution, LpStatus, enumerate_vertices_oracle, solve_lp

__version__ = "0.1.0"
