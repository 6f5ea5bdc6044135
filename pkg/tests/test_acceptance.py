"""Exit criteria for the package, run over the fixed 200-triangle corpus.

A pass/fail line per criterion is printed in the "acceptance criteria"
section of the pytest summary.
"""

import math
import time

import numpy as np
import pytest

from pia.bench import DOMINANCE_TOL, REFERENCE_RESOLUTION, parse_suite, reference_for, run_benchmark
from pia.errors import NotConvex
from pia.geometry import Polygon
from pia.grid import GridConfig, solve_grid
from pia.lp import solve_chebyshev
from pia.oracle import brute_force_pia, triangle_incenter
from pia.polygen import derive_seed, generate_corpus
from pia.polyio import format_polygon
from pia.random_search import RandomConfig, solve_random
from pia.simplex import LpProblem, LpStatus, enumerate_vertices_oracle, solve_lp

from conftest import CORPUS_SEED, CORPUS_SIZE, L_SHAPE

ACCURACY = 1e-9


@pytest.fixture(scope="session")
def references(corpus):
    return [reference_for(p) for p in corpus]


@pytest.fixture(scope="session")
def report(corpus, references):
    return run_benchmark(corpus, parse_suite("default", ACCURACY), repeats=1, seed=CORPUS_SEED,
                         references=references)


@pytest.mark.criterion(1, "LP exactness on the 200-triangle corpus")
def test_lp_exactness(corpus, record_property):
    t0 = time.perf_counter()
    results = [solve_chebyshev(p) for p in corpus]
    elapsed = time.perf_counter() - t0
    errors = [abs(r.radius - triangle_incenter(p).radius) / triangle_incenter(p).radius
              for r, p in zip(results, corpus)]
    exact = sum(e <= 1e-9 for e in errors)
    record_property("detail", f"{exact}/{len(corpus)} within 1e-9 rel, max {max(errors):.1e}, {elapsed:.3f}s")
    assert exact == CORPUS_SIZE
    assert elapsed < 1.0


@pytest.mark.criterion(2, "search quality: grid N=M=20 >= 90%, random K=50 >= 85% within 0.1%")
def test_search_quality(report, record_property):
    grid = report.row("grid N=M=20").fraction_within(1e-3)
    rand = report.row("random K=50").fraction_within(1e-3)
    record_property("detail", f"grid20 {100 * grid:.1f}%, random50 {100 * rand:.1f}%")
    assert grid >= 0.90
    assert rand >= 0.85


@pytest.mark.criterion(3, "median runtime ordering LP < random K=15 < grid N=M=12")
def test_runtime_ordering(report, record_property):
    lp = report.row("lp").median_runtime_us
    rand = report.row("random K=15").median_runtime_us
    grid = report.row("grid N=M=12").median_runtime_us
    record_property("detail", f"lp {lp:.0f}us < random15 {rand:.0f}us < grid12 {grid:.0f}us")
    assert lp < rand < grid


def _random_lp(i):
    rng = np.random.default_rng([CORPUS_SEED, 4, i])
    m = int(rng.integers(1, 7))
    return LpProblem.from_arrays(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, (m, 3)), rng.uniform(-1, 1, m))


@pytest.mark.criterion(4, "simplex matches vertex enumeration on 100 random LPs")
def test_simplex_oracle_equivalence(record_property):
    mismatched = []
    optimal = 0
    for i in range(100):
        p = _random_lp(i)
        sol, ref = solve_lp(p), enumerate_vertices_oracle(p)
        if sol.status is not ref.status:
            mismatched.append(i)
        elif sol.status is LpStatus.OPTIMAL:
            optimal += 1
            if abs(sol.objective - ref.objective) > 1e-9:
                mismatched.append(i)
    record_property("detail", f"{100 - len(mismatched)}/100 agree ({optimal} optimal)")
    assert not mismatched


@pytest.mark.criterion(5, "feasibility dominance: radius <= oracle + 1e-9 for every solver and instance")
def test_feasibility_dominance(report, references, record_property):
    violations = 0
    checked = 0
    for row in report.rows:
        for radius, ref in zip(row.radii, references):
            if radius is None:
                continue
            checked += 1
            if radius > ref.radius + DOMINANCE_TOL:
                violations += 1
    record_property("detail", f"{violations} violations over {checked} solves")
    assert checked == len(report.rows) * CORPUS_SIZE
    assert violations == 0


@pytest.mark.criterion(6, "incumbent clearance never decreases (grid and random, every instance)")
def test_monotone_incumbents(corpus, record_property):
    bad = 0
    for i, poly in enumerate(corpus):
        for solve, cfg in (
            (solve_grid, GridConfig(12, 12, ACCURACY)),
            (solve_random, RandomConfig(k=15, min_accuracy=ACCURACY, seed=derive_seed(CORPUS_SEED, i))),
        ):
            seen = []
            res = solve(poly, cfg, on_incumbent=lambda p, d: seen.append(d))
            if any(b <= a for a, b in zip(seen, seen[1:])) or any(b < a for a, b in zip(res.trace, res.trace[1:])):
                bad += 1
    record_property("detail", f"{bad} non-monotone runs out of {2 * len(corpus)}")
    assert bad == 0


@pytest.mark.criterion(7, "determinism of randomized solves, corpus generation and bench buckets")
def test_determinism(corpus, references, report, record_property):
    for i, poly in enumerate(corpus):
        cfg = RandomConfig(k=15, min_accuracy=ACCURACY, seed=derive_seed(CORPUS_SEED, i))
        assert solve_random(poly, cfg) == solve_random(poly, cfg)
    again = generate_corpus("triangle", CORPUS_SIZE, CORPUS_SEED)
    assert [format_polygon(p) for p in again] == [format_polygon(p) for p in corpus]
    rerun = run_benchmark(corpus, parse_suite("random15,random30,random50", ACCURACY), seed=CORPUS_SEED,
                          references=references)
    for row in rerun.rows:
        original = report.row(row.entry.label)
        assert row.percentages == original.percentages
        assert row.radii == original.radii
    record_property("detail", "randomized solves, corpus bytes and bucket percentages identical on rerun")


@pytest.mark.criterion(8, "L-shaped hexagon: searches within 1% of brute force, LP refuses")
def test_non_convex_sanity(record_property):
    lshape = Polygon(L_SHAPE)
    ref = brute_force_pia(lshape, REFERENCE_RESOLUTION).radius
    grid = solve_grid(lshape, GridConfig(12, 12, ACCURACY)).radius
    rand = solve_random(lshape, RandomConfig(k=15, min_accuracy=ACCURACY, seed=CORPUS_SEED)).radius
    record_property("detail", f"reference {ref:.6f}, grid {grid:.6f}, random {rand:.6f}")
    assert abs(grid - ref) / ref <= 0.01
    assert abs(rand - ref) / ref <= 0.01
    with pytest.raises(NotConvex):
        solve_chebyshev(lshape)


@pytest.mark.criterion(9, "equivariance: LP under translation and scaling, random under translation")
def test_equivariance(corpus, record_property):
    dx, dy, scale = 123.25, -47.5, 8.0
    worst_lp = 0.0
    worst_rand = 0.0
    for i, poly in enumerate(corpus):
        base = solve_chebyshev(poly)
        moved = solve_chebyshev(poly.translated(dx, dy))
        grown = solve_chebyshev(poly.scaled(scale))
        for got, want in (
            (moved.radius, base.radius),
            (moved.center.x, base.center.x + dx),
            (moved.center.y, base.center.y + dy),
            (grown.radius, scale * base.radius),
            (grown.center.x, scale * base.center.x),
            (grown.center.y, scale * base.center.y),
        ):
            worst_lp = max(worst_lp, abs(got - want) / max(abs(want), 1e-300))
        cfg = RandomConfig(k=15, min_accuracy=1e-7, seed=derive_seed(CORPUS_SEED, i))
        a = solve_random(poly, cfg)
        b = solve_random(poly.translated(dx, dy), cfg)
        worst_rand = max(worst_rand, math.dist((b.center.x - dx, b.center.y - dy), a.center))
    record_property("detail", f"LP worst rel {worst_lp:.1e}, random worst shift {worst_rand:.1e}")
    assert worst_lp <= 1e-9
    assert worst_rand <= 1e-9
