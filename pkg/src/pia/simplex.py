"""Dense two-phase primal simplex for small LPs.

Problems are in the form: maximize c.v subject to A v <= b, v >= 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import NumericalBreakdown

FEAS_TOL = 1e-9
OPT_TOL = 1e-9
PIVOT_TOL = 1e-11
# column entries at or below this are treated as non-positive
ZERO_TOL = 1e-13


class LpStatus(str, Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class LpProblem:
    """maximize ``objective . v`` s.t. ``rows[i] . v <= rhs[i]``, ``v >= 0``."""

    objective: tuple[float, ...]
    rows: tuple[tuple[float, ...], ...]
    rhs: tuple[float, ...]

    def __post_init__(self):
        n = len(self.objective)
        if n == 0:
            raise ValueError("LP needs at least one variable")
        if len(self.rows) != len(self.rhs):
            raise ValueError("rows and rhs differ in length")
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f"constraint row has {len(row)} coefficients, expected {n}")
        values = [*self.objective, *self.rhs, *(c for row in self.rows for c in row)]
        if not all(math.isfinite(v) for v in values):
            raise ValueError("LP coefficients must be finite")

    @classmethod
    def from_arrays(cls, c, A, b) -> "LpProblem":
        A = np.asarray(A, dtype=float).reshape(len(b), len(c))
        return cls(
            tuple(float(v) for v in c),
            tuple(tuple(float(v) for v in row) for row in A),
            tuple(float(v) for v in b),
        )

    @property
    def variable_count(self) -> int:
        return len(self.objective)

    @property
    def constraints(self) -> list[tuple[tuple[float, ...], str, float]]:
        return [(row, "<=", r) for row, r in zip(self.rows, self.rhs)]

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        n = self.variable_count
        A = np.array(self.rows, dtype=float).reshape(len(self.rows), n)
        return np.array(self.objective, dtype=float), A, np.array(self.rhs, dtype=float)


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    variables: tuple[float, ...]
    objective: float
    pivots: int = 0


# called as (phase, pivot number, objective value) after every pivot
PivotHook = Optional[Callable[[int, int, float], None]]


class _Tableau:
    """Constraint rows in ``T[:-1]`` (rhs last column), objective row in ``T[-1]``.

    The objective row stores ``-reduced cost`` so an entering column has a
    negative entry and ``T[-1, -1]`` is the current objective value.
    """

    def __init__(self, T: np.ndarray, basis: list[int], hook: PivotHook, phase: int):
        self.T = T
        self.basis = basis
        self.hook = hook
        self.phase = phase
        self.pivots = 0

    def pivot(self, r: int, c: int) -> None:
        T = self.T
        T[r] /= T[r, c]
        col = T[:, c].copy()
        col[r] = 0.0
        T -= np.outer(col, T[r])
        T[:, c] = 0.0
        T[r, c] = 1.0
        self.basis[r] = c
        # rhs drift below zero would poison later ratio tests
        rhs = T[:-1, -1]
        rhs[(rhs < 0) & (rhs > -FEAS_TOL)] = 0.0
        self.pivots += 1
        if self.hook is not None:
            self.hook(self.phase, self.pivots, float(T[-1, -1]))

    def run(self, ncols: int, bland_after: int, max_pivots: int) -> bool:
        """Pivot to optimality over columns ``< ncols``.  False means unbounded."""
        T = self.T
        while True:
            obj = T[-1, :ncols]
            candidates = np.flatnonzero(obj < -OPT_TOL)
            if candidates.size == 0:
                return True
            if self.pivots >= max_pivots:
                raise NumericalBreakdown(f"no convergence after {self.pivots} pivots")
            if self.pivots < bland_after:
                # Dantzig: most negative reduced cost, ties to the lowest index
                order = candidates[np.argsort(obj[candidates], kind="stable")]
            else:
                order = candidates
            for c in order:
                col = T[:-1, c]
                if not np.any(col > ZERO_TOL):
                    return False
                eligible = np.flatnonzero(col > PIVOT_TOL)
                if eligible.size == 0:
                    continue
                ratios = T[eligible, -1] / col[eligible]
                best = ratios.min()
                ties = eligible[ratios <= best + FEAS_TOL * max(1.0, abs(best))]
                r = min(ties, key=lambda i: self.basis[i])
                self.pivot(int(r), int(c))
                break
            else:
                raise NumericalBreakdown("every entering column has only sub-tolerance pivots")


def solve_lp(p: LpProblem, *, on_pivot: PivotHook = None) -> LpSolution:
    """Two-phase simplex with Dantzig pricing that falls back to Bland's rule.

    Phase 1 runs only when some right-hand side is negative.  Raises
    :class:`NumericalBreakdown` if pivoting stalls on sub-tolerance pivots.
    """
    c, A, b = p.arrays()
    m, n = A.shape
    neg = [i for i in range(m) if b[i] < 0]
    n_art = len(neg)
    width = n + m + n_art
    T = np.zeros((m + 1, width + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[:m, -1] = b
    basis = [n + i for i in range(m)]
    for k, i in enumerate(neg):
        T[i, :-1] *= -1.0
        T[i, -1] *= -1.0
        T[i, n + m + k] = 1.0
        basis[i] = n + m + k

    bland_after = 2 * (m + width)
    max_pivots = bland_after + min(math.comb(width, m), 100_000)
    pivots = 0

    if n_art:
        # phase 1: maximize -(sum of artificials)
        T[-1, n + m:width] = 1.0
        for i in neg:
            T[-1] -= T[i]
        tab = _Tableau(T, basis, on_pivot, 1)
        tab.run(width, bland_after, max_pivots)
        pivots = tab.pivots
        scale = max(1.0, float(np.abs(b).max()))
        if T[-1, -1] < -FEAS_TOL * scale:
            return LpSolution(LpStatus.INFEASIBLE, (), math.nan, pivots)
        # drive zero-level artificials out of the basis, dropping redundant rows
        keep = []
        for r in range(m):
            if basis[r] < n + m:
                keep.append(r)
                continue
            row = T[r, :n + m]
            cols = np.flatnonzero(np.abs(row) > PIVOT_TOL)
            if cols.size:
                tab.pivot(r, int(cols[0]))
                keep.append(r)
        pivots = tab.pivots
        T = np.zeros((len(keep) + 1, n + m + 1))
        T[:-1, :-1] = tab.T[keep, :n + m]
        T[:-1, -1] = tab.T[keep, -1]
        basis = [basis[r] for r in keep]
        width = n + m

    T[-1, :] = 0.0
    T[-1, :n] = -c
    for r, j in enumerate(basis):
        if T[-1, j] != 0.0:
            T[-1] -= T[-1, j] * T[r]
    tab = _Tableau(T, basis, on_pivot, 2)
    tab.pivots = pivots
    bounded = tab.run(width, bland_after, max_pivots)
    if not bounded:
        return LpSolution(LpStatus.UNBOUNDED, (), math.inf, tab.pivots)

    v = np.zeros(width)
    for r, j in enumerate(tab.basis):
        v[j] = T[r, -1]
    x = tuple(float(t) for t in v[:n])
    return LpSolution(LpStatus.OPTIMAL, x, float(np.dot(c, v[:n])), tab.pivots)


def enumerate_vertices_oracle(p: LpProblem) -> LpSolution:
    """Brute-force LP solution by enumerating basic solutions.

    Every choice of ``variable_count`` active constraints (nonnegativity
    planes included) is solved as a square system and kept if feasible.
    Unboundedness is decided separately by enumerating the extreme rays of
    the recession cone.  Only meant for a handful of variables and rows.
    """
    c, A, b = p.arrays()
    m, n = A.shape
    if n > 4 or m > 8:
        raise ValueError("vertex enumeration is limited to 4 variables and 8 constraints")
    G = np.vstack([A, -np.eye(n)])
    h = np.concatenate([b, np.zeros(n)])
    scale = max(1.0, float(np.abs(b).max()) if m else 1.0)

    best_v = None
    best_obj = -math.inf
    for active in itertools.combinations(range(m + n), n):
        M = G[list(active)]
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        v = np.linalg.solve(M, h[list(active)])
        if np.all(G @ v <= h + FEAS_TOL * scale):
            obj = float(c @ v)
            if obj > best_obj + OPT_TOL:
                best_v, best_obj = v, obj
    if best_v is None:
        return LpSolution(LpStatus.INFEASIBLE, (), math.nan)

    for d in _extreme_rays(G):
        if float(c @ d) > OPT_TOL:
            return LpSolution(LpStatus.UNBOUNDED, (), math.inf)
    return LpSolution(LpStatus.OPTIMAL, tuple(float(t) for t in best_v), best_obj)


def _extreme_rays(G: np.ndarray):
    """Unit extreme rays of the pointed cone ``{d : G d <= 0}``."""
    n = G.shape[1]
    if n == 1:
        for d in (np.ones(1), -np.ones(1)):
            if np.all(G @ d <= FEAS_TOL):
                yield d
        return
    for active in itertools.combinations(range(G.shape[0]), n - 1):
        M = G[list(active)]
        _, s, vt = np.linalg.svd(M)
        if s[-1] < 1e-12:
            continue
        d = vt[-1]
        for cand in (d, -d):
            if np.all(G @ cand <= FEAS_TOL):
                yield cand


def is_primal_feasible(p: LpProblem, v: Sequence[float], tol: float = FEAS_TOL) -> bool:
    _, A, b = p.arrays()
    x = np.asarray(v, dtype=float)
    return bool(np.all(A @ x <= b + tol) and np.all(x >= -tol))
