"""Run solvers over a corpus and bucket their radius errors against a reference."""

from __future__ import annotations

import csv
import math
import statistics
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from .errors import InvariantViolation, PiaError
from .geometry import Polygon, bounding_box
from .grid import GridConfig, solve_grid
from .lp import solve_chebyshev
from .oracle import brute_force_pia, triangle_incenter
from .polygen import derive_seed
from .random_search import RandomConfig, solve_random
from .result import PiaResult

EXACT_TOL = 1e-12
REFERENCE_RESOLUTION = 4001
DOMINANCE_TOL = 1e-9


class ErrorBucket(Enum):
    EXACT = "exact"
    AT_MOST_001_PCT = "<=0.01%"
    AT_MOST_01_PCT = "<=0.1%"
    AT_MOST_1_PCT = "<=1%"
    OVER_1_PCT = ">1%"


_UPPER_BOUNDS = (
    (ErrorBucket.AT_MOST_001_PCT, 1e-4),
    (ErrorBucket.AT_MOST_01_PCT, 1e-3),
    (ErrorBucket.AT_MOST_1_PCT, 1e-2),
)


def relative_error(found: float, exact: float) -> float:
    if not exact > 0:
        raise ValueError("reference radius must be positive")
    return abs(found - exact) / exact


def classify_error(found: float, exact: float) -> ErrorBucket:
    err = relative_error(found, exact)
    if err < EXACT_TOL:
        return ErrorBucket.EXACT
    for bucket, bound in _UPPER_BOUNDS:
        if err <= bound:
            return bucket
    return ErrorBucket.OVER_1_PCT


SolverConfig = Union[GridConfig, RandomConfig, None]


@dataclass(frozen=True)
class SuiteEntry:
    algorithm: str  # "grid", "random" or "lp"
    config: SolverConfig = None

    @property
    def params(self) -> str:
        if isinstance(self.config, GridConfig):
            return f"n={self.config.n} m={self.config.m} accuracy={self.config.min_accuracy:g}"
        if isinstance(self.config, RandomConfig):
            return f"k={self.config.k} accuracy={self.config.min_accuracy:g}"
        return ""

    @property
    def label(self) -> str:
        if isinstance(self.config, GridConfig):
            return f"grid N=M={self.config.n}" if self.config.n == self.config.m else f"grid {self.config.n}x{self.config.m}"
        if isinstance(self.config, RandomConfig):
            return f"random K={self.config.k}"
        return "lp"


DEFAULT_SUITE_NAMES = ("grid12", "grid15", "grid20", "random15", "random30", "random50", "lp")


def parse_suite(text: str, accuracy: float = 1e-9) -> list[SuiteEntry]:
    """Parse ``default`` or a comma list of ``gridN``, ``gridNxM``, ``randomK`` and ``lp``."""
    names = DEFAULT_SUITE_NAMES if text.strip() == "default" else [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise ValueError("empty suite")
    out = []
    for name in names:
        try:
            if name == "lp":
                out.append(SuiteEntry("lp"))
            elif name.startswith("grid"):
                dims = name[4:].split("x")
                n = int(dims[0])
                m = int(dims[1]) if len(dims) == 2 else n
                out.append(SuiteEntry("grid", GridConfig(n=n, m=m, min_accuracy=accuracy)))
            elif name.startswith("random"):
                out.append(SuiteEntry("random", RandomConfig(k=int(name[6:]), min_accuracy=accuracy)))
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise ValueError(f"bad suite entry {name!r}") from None
    return out


@dataclass(frozen=True)
class Reference:
    radius: float
    exact: bool
    # allowed excess of a found radius over ``radius``
    slack: float


def reference_for(poly: Polygon, resolution: int = REFERENCE_RESOLUTION) -> Reference:
    if len(poly) == 3:
        return Reference(triangle_incenter(poly).radius, True, DOMINANCE_TOL)
    box = bounding_box(poly)
    spacing = math.hypot(box.width, box.height) / (resolution - 1)
    return Reference(brute_force_pia(poly, resolution).radius, False, spacing / 2 + DOMINANCE_TOL)


def run_entry(entry: SuiteEntry, poly: Polygon, seed: int = 0) -> PiaResult:
    if entry.algorithm == "lp":
        return solve_chebyshev(poly)
    if entry.algorithm == "grid":
        return solve_grid(poly, entry.config)
    if entry.algorithm == "random":
        cfg = entry.config
        return solve_random(
            poly,
            RandomConfig(k=cfg.k, min_accuracy=cfg.min_accuracy, sample_cap=cfg.sample_cap,
                         seed=seed, max_iterations=cfg.max_iterations),
        )
    raise ValueError(f"unknown algorithm {entry.algorithm!r}")


@dataclass
class BenchRow:
    entry: SuiteEntry
    percentages: dict[ErrorBucket, float]
    median_runtime_us: float
    mean_runtime_us: float
    runs: int
    failures: int
    # per (instance, repeat) in run order; None marks a failed solve
    errors: list[Optional[float]] = field(default_factory=list, repr=False)
    radii: list[Optional[float]] = field(default_factory=list, repr=False)

    def fraction_within(self, bound: float) -> float:
        """Share of runs (failures counted as misses) with relative error <= bound."""
        return sum(1 for e in self.errors if e is not None and e <= bound) / self.runs


@dataclass
class BenchReport:
    rows: list[BenchRow]
    instances: int
    repeats: int
    corpus_seed: int

    def row(self, label: str) -> BenchRow:
        for r in self.rows:
            if r.entry.label == label:
                return r
        raise KeyError(label)

    CSV_FIELDS = (
        "algorithm", "params", "exact_pct", "le_0_01_pct", "le_0_1_pct", "le_1_pct", "gt_1_pct",
        "median_runtime_us", "mean_runtime_us", "failures", "runs", "instances", "repeats", "corpus_seed",
    )

    def write_csv(self, path: Union[str, Path]) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(self.CSV_FIELDS)
            for r in self.rows:
                w.writerow([
                    r.entry.algorithm, r.entry.params,
                    *(f"{r.percentages[b]:.4f}" for b in ErrorBucket),
                    f"{r.median_runtime_us:.1f}", f"{r.mean_runtime_us:.1f}",
                    r.failures, r.runs, self.instances, self.repeats, self.corpus_seed,
                ])

    def format_table(self) -> str:
        header = ["algorithm", *(b.value for b in ErrorBucket), "median us", "mean us", "failures"]
        body = [
            [r.entry.label, *(f"{r.percentages[b]:.2f}" for b in ErrorBucket),
             f"{r.median_runtime_us:.1f}", f"{r.mean_runtime_us:.1f}", str(r.failures)]
            for r in self.rows
        ]
        widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
        lines = []
        for row in [header, *body]:
            cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
            lines.append("  ".join(cells))
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines)


def run_benchmark(
    corpus: Sequence[Polygon],
    suite: Sequence[SuiteEntry],
    repeats: int = 1,
    *,
    seed: int = 0,
    strict: bool = True,
    references: Optional[Sequence[Reference]] = None,
    progress: Optional[Callable[[str], None]] = None,
) -> BenchReport:
    """Solve every corpus instance ``repeats`` times with every suite entry.

    Randomized entries use a fresh seed per (instance, repeat) derived from
    ``seed``, so bucket percentages are reproducible.  Solver errors are
    counted as failures and land in the worst bucket.  With ``strict``, a
    radius above the reference (beyond its slack) raises InvariantViolation.
    """
    if not corpus:
        raise ValueError("empty corpus")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    if references is None:
        references = [reference_for(p) for p in corpus]

    rows = []
    for entry in suite:
        if progress is not None:
            progress(entry.label)
        counts = {b: 0 for b in ErrorBucket}
        times = []
        errors: list[Optional[float]] = []
        radii: list[Optional[float]] = []
        failures = 0
        for i, (poly, ref) in enumerate(zip(corpus, references)):
            for rep in range(repeats):
                run_seed = derive_seed(seed, i, rep)
                t0 = time.perf_counter_ns()
                try:
                    res = run_entry(entry, poly, run_seed)
                except PiaError:
                    times.append((time.perf_counter_ns() - t0) / 1e3)
                    failures += 1
                    counts[ErrorBucket.OVER_1_PCT] += 1
                    errors.append(None)
                    radii.append(None)
                    continue
                times.append((time.perf_counter_ns() - t0) / 1e3)
                if strict and res.radius > ref.radius + ref.slack:
                    raise InvariantViolation(
                        f"{entry.label} on instance {i}: radius {res.radius!r} exceeds reference {ref.radius!r}"
                    )
                counts[classify_error(res.radius, ref.radius)] += 1
                errors.append(relative_error(res.radius, ref.radius))
                radii.append(res.radius)
        runs = len(corpus) * repeats
        rows.append(BenchRow(
            entry,
            {b: 100.0 * c / runs for b, c in counts.items()},
            statistics.median(times),
            statistics.fmean(times),
            runs,
            failures,
            errors,
            radii,
        ))
    return BenchReport(rows, len(corpus), repeats, seed)
