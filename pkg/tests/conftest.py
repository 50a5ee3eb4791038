import json
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from thetaext.enumeration import Y_LABELS, preorder_tables
from thetaext.maps import DenseMapInstance
from thetaext.ordinal import OMEGA
from thetaext.space import FiniteSpace

DATA = Path(__file__).resolve().parent.parent / "data"

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def load(name):
    return json.loads((DATA / name).read_text())


@pytest.fixture
def sierp():
    return FiniteSpace.from_dict(load("sierp.json"))


@pytest.fixture
def zig5():
    return FiniteSpace.from_dict(load("zig5.json"))


@pytest.fixture
def x3():
    return DenseMapInstance.from_dict(load("x3.json"))


@pytest.fixture
def sierp_ext():
    return DenseMapInstance.from_dict(load("sierp_ext.json"))


@st.composite
def spaces(draw, min_points=1, max_points=5):
    n = draw(st.integers(min_points, max_points))
    tables = preorder_tables(n)
    return FiniteSpace(Y_LABELS[:n], tables[draw(st.integers(0, len(tables) - 1))])


@st.composite
def space_and_set(draw, max_points=5, nonempty=False):
    space = draw(spaces(max_points=max_points))
    m = draw(st.integers(1 if nonempty else 0, space.full))
    return space, m


alphas = st.sampled_from([0, 1, 2, 3, OMEGA])
positive_alphas = st.sampled_from([1, 2, 3, OMEGA])


# acceptance summary: one line per criterion

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    if report.passed:
        detail = ""
    else:
        detail = str(call.excinfo.value).splitlines()[0] if call.excinfo else ""
    if _CRITERIA.get(number, ("PASS",))[0] == "FAIL":
        return
    _CRITERIA[number] = ("PASS" if report.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        verdict, title, detail = _CRITERIA[number]
        line = f"criterion {number:>2}: {verdict}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
