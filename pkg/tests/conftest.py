import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from fuzzysoft.algebra import FuzzyRelationMatrix
from fuzzysoft.cli import fixture_dir
from fuzzysoft.core import FuzzySet, Universe
from fuzzysoft.workspace import load_workspace

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

EPS = 1e-9

grade = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
# grades on a coarse grid make ties and exact equalities likely
coarse_grade = st.integers(0, 10).map(lambda k: k / 10)


def labels(n, prefix="e"):
    return [f"{prefix}{i + 1}" for i in range(n)]


@st.composite
def fuzzy_sets(draw, size=None, grades=grade):
    n = draw(st.integers(1, 8)) if size is None else size
    return FuzzySet(Universe(labels(n)), draw(st.lists(grades, min_size=n, max_size=n)))


@st.composite
def fuzzy_set_pairs(draw, grades=grade):
    n = draw(st.integers(1, 8))
    return draw(fuzzy_sets(n, grades)), draw(fuzzy_sets(n, grades))


@st.composite
def square_relations(draw, max_size=6, grades=grade, min_size=1):
    n = draw(st.integers(min_size, max_size))
    cells = draw(st.lists(st.lists(grades, min_size=n, max_size=n), min_size=n, max_size=n))
    return FuzzyRelationMatrix.square_from(Universe(labels(n)), cells)


def fixture(name):
    return load_workspace(fixture_dir() / name)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if report.when != "call":
                continue
            props = dict(report.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for text, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {text}")
