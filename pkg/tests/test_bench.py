import csv
import math

import pytest

from pia.bench import (
    BenchReport,
    ErrorBucket,
    Reference,
    SuiteEntry,
    classify_error,
    parse_suite,
    reference_for,
    run_benchmark,
)
from pia.errors import InvariantViolation
from pia.geometry import Polygon
from pia.grid import GridConfig
from pia.polygen import generate_corpus
from pia.random_search import RandomConfig

from conftest import L_SHAPE, L_SHAPE_RADIUS


@pytest.mark.parametrize(
    "rel, bucket",
    [
        (0.0, ErrorBucket.EXACT),
        (5e-13, ErrorBucket.EXACT),
        (5e-5, ErrorBucket.AT_MOST_001_PCT),
        (0.999e-4, ErrorBucket.AT_MOST_001_PCT),
        (1.001e-4, ErrorBucket.AT_MOST_01_PCT),
        (0.999e-3, ErrorBucket.AT_MOST_01_PCT),
        (1.001e-3, ErrorBucket.AT_MOST_1_PCT),
        (5e-3, ErrorBucket.AT_MOST_1_PCT),
        (0.02, ErrorBucket.OVER_1_PCT),
    ],
)
def test_classify_error(rel, bucket):
    # exact = 1 keeps relative and absolute error identical
    assert classify_error(1.0 - rel, 1.0) is bucket


def test_classify_is_symmetric_in_sign():
    assert classify_error(1.02, 1.0) is ErrorBucket.OVER_1_PCT


def test_classify_needs_positive_reference():
    with pytest.raises(ValueError):
        classify_error(1.0, 0.0)


def test_parse_suite_default():
    suite = parse_suite("default", 1e-6)
    assert [e.label for e in suite] == [
        "grid N=M=12", "grid N=M=15", "grid N=M=20", "random K=15", "random K=30", "random K=50", "lp",
    ]
    assert suite[0].config == GridConfig(12, 12, 1e-6)
    assert suite[3].config.min_accuracy == 1e-6


def test_parse_suite_list():
    suite = parse_suite("grid8x5, random7,lp")
    assert suite[0].config.n == 8 and suite[0].config.m == 5
    assert suite[1].config.k == 7 and suite[2].algorithm == "lp"
    for bad in ("", "simplex", "gridx", "random"):
        with pytest.raises(ValueError):
            parse_suite(bad)


def test_report_rows_and_percentages():
    corpus = generate_corpus("triangle", 12, 5)
    report = run_benchmark(corpus, parse_suite("grid12,random15,lp", 1e-7), repeats=2, seed=3)
    assert [r.entry.algorithm for r in report.rows] == ["grid", "random", "lp"]
    for row in report.rows:
        assert row.runs == 24
        assert sum(row.percentages.values()) == pytest.approx(100, abs=0.01)
        assert row.median_runtime_us > 0
    assert report.row("lp").fraction_within(1e-9) == 1.0


def test_report_reproducible():
    corpus = generate_corpus("triangle", 10, 8)
    suite = parse_suite("random15,grid12", 1e-6)
    a = run_benchmark(corpus, suite, repeats=3, seed=9)
    b = run_benchmark(corpus, suite, repeats=3, seed=9)
    assert [r.percentages for r in a.rows] == [r.percentages for r in b.rows]
    assert [r.errors for r in a.rows] == [r.errors for r in b.rows]


def test_repeats_use_fresh_seeds():
    corpus = generate_corpus("triangle", 3, 8)
    report = run_benchmark(corpus, parse_suite("random15", 1e-6), repeats=4, seed=1)
    errors = report.rows[0].errors
    assert len(set(errors[:4])) > 1


def test_failures_recorded_not_raised():
    lshape = Polygon(L_SHAPE)
    refs = [Reference(L_SHAPE_RADIUS, True, 1e-9)]
    report = run_benchmark([lshape], parse_suite("lp,grid12", 1e-8), references=refs)
    lp, grid = report.rows
    assert lp.failures == 1 and lp.percentages[ErrorBucket.OVER_1_PCT] == 100
    assert grid.failures == 0 and grid.fraction_within(1e-6) == 1.0


def test_dominance_violation_raises(triangle):
    too_small = [Reference(0.5, True, 1e-9)]
    with pytest.raises(InvariantViolation):
        run_benchmark([triangle], parse_suite("lp"), references=too_small)
    report = run_benchmark([triangle], parse_suite("lp"), references=too_small, strict=False)
    assert report.rows[0].percentages[ErrorBucket.OVER_1_PCT] == 100


def test_reference_for_non_triangle(lshape):
    ref = reference_for(lshape, resolution=801)
    assert not ref.exact
    assert ref.radius <= L_SHAPE_RADIUS <= ref.radius + ref.slack


def test_empty_corpus():
    with pytest.raises(ValueError):
        run_benchmark([], parse_suite("lp"))


def test_csv_and_table(tmp_path):
    corpus = generate_corpus("triangle", 4, 2)
    report = run_benchmark(corpus, parse_suite("grid12,lp", 1e-6), seed=5)
    out = tmp_path / "r.csv"
    report.write_csv(out)
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 2
    assert list(rows[0]) == list(BenchReport.CSV_FIELDS)
    assert rows[1]["algorithm"] == "lp" and float(rows[1]["exact_pct"]) == 100.0
    assert rows[0]["params"] == "n=12 m=12 accuracy=1e-06"
    table = report.format_table().splitlines()
    assert len(table) == 4 and table[0].startswith("algorithm")
    assert len({len(line) for line in table}) == 1
