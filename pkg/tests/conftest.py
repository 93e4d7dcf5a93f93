import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nval.nvmaps import LinearPiece, single, validate_composite  # noqa: E402

TORUS_A = [[1, 0], [3, 4]]
TORUS_B = [[-1, 0], [1, 4]]


@pytest.fixture
def g_piece():
    return LinearPiece(2, TORUS_A)


@pytest.fixture
def h_piece():
    return LinearPiece(2, TORUS_B, (Fraction(1, 4), 0))


@pytest.fixture
def torus_pair(g_piece, h_piece):
    return validate_composite([g_piece, h_piece])


@pytest.fixture
def circle_4_2():
    return single(4, [[2]])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, outcome in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {n}: {title}")
