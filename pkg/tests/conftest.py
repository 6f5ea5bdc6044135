import math

import pytest

from pia.geometry import Polygon
from pia.polygen import generate_corpus

# corpus used by the acceptance suite and the corpus-wide tests
CORPUS_SEED = 7
CORPUS_SIZE = 200

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
TRIANGLE_345 = [(0, 0), (4, 0), (0, 3)]
L_SHAPE = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]
# largest circle sits in the corner square, tangent to x=0, y=0 and the reflex vertex (1, 1)
L_SHAPE_RADIUS = 2 - math.sqrt(2)


@pytest.fixture
def square():
    return Polygon(SQUARE)


@pytest.fixture
def triangle():
    return Polygon(TRIANGLE_345)


@pytest.fixture
def lshape():
    return Polygon(L_SHAPE)


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus("triangle", CORPUS_SIZE, CORPUS_SEED)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = dict(report.user_properties).get("detail", "")
        _criteria[number] = (title, report.outcome, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome, detail = _criteria[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] {number}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
