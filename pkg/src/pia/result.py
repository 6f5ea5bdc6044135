from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .geometry import Point


@dataclass(frozen=True)
class PiaResult:
    """Center and clearance radius returned by every solver.

    ``trace`` holds the incumbent clearance after each outer iteration (a
    single entry for the LP solver).  ``converged`` is False only when a
    search stopped on its iteration cap before reaching the accuracy target.
    """

    center: Point
    radius: float
    iterations: int
    nodes_evaluated: int
    converged: bool = True
    trace: tuple[float, ...] = field(default=(), repr=False)


# (node, inside, clearance) for every evaluated node
NodeHook = Optional[Callable[[Point, bool, float], None]]
# (new incumbent, its clearance) on every improvement
IncumbentHook = Optional[Callable[[Point, float], None]]
