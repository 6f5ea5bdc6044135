"""Exception types raised by the solvers and generators."""


class PiaError(Exception):
    """Base class for every error raised by this package."""


class InvalidPolygon(PiaError, ValueError):
    """Input vertices do not describe a simple, non-degenerate polygon."""


class DegenerateInterior(PiaError):
    """A search could not place a single candidate node inside the polygon."""


class NotConvex(PiaError):
    pass


class Degenerate(PiaError, ValueError):
    """Triangle vertices are collinear (zero area)."""


class GenerationFailed(PiaError):
    pass


class LpError(PiaError):
    pass


class Infeasible(LpError):
    pass


class Unbounded(LpError):
    pass


class NumericalBreakdown(LpError):
    """No admissible pivot above the minimum pivot magnitude."""


class InvariantViolation(PiaError, AssertionError):
    """A benchmark run produced a radius larger than the reference allows."""
