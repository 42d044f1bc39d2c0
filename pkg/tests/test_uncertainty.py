import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import EPS, labels
from fuzzysoft.algebra import FuzzyRelationMatrix, relation_intersection, relation_union
from fuzzysoft.core import FuzzyError, Universe
from fuzzysoft.uncertainty import (
    DegenerateClass,
    average_uncertainty,
    expected_cardinality,
    row_uncertainties,
    uncertainty_quantity,
)


def square(cells):
    cells = np.asarray(cells, dtype=float)
    return FuzzyRelationMatrix.square_from(Universe(labels(len(cells))), cells)


def test_expected_cardinality_examples():
    assert expected_cardinality(square(np.ones((3, 3))), 1) == 1.0
    assert expected_cardinality(square(np.eye(4)), 2) == 0.25
    t = square([[1, 0.6], [0.6, 1]])
    assert expected_cardinality(t, 0) == pytest.approx(0.8, abs=EPS)
    assert expected_cardinality(t, "e2") == pytest.approx(0.8, abs=EPS)


def test_uncertainty_quantity_examples():
    assert uncertainty_quantity(square(np.ones((3, 3))), 0) == 0.0
    assert uncertainty_quantity(square(np.eye(4)), 3) == 2.0
    t = square([[1, 0.6], [0.6, 1]])
    assert uncertainty_quantity(t, 0) == pytest.approx(-math.log2(0.8), abs=EPS)
    assert uncertainty_quantity(t, 0) == pytest.approx(0.32193, abs=1e-5)


def test_average_uncertainty_examples():
    assert average_uncertainty(square(np.ones((5, 5)))) == 0.0
    assert average_uncertainty(square(np.zeros((0, 0)))) == 0.0
    assert average_uncertainty(square(np.eye(4))) == 2.0


def test_zero_row_raises_degenerate_class():
    t = square([[1, 0], [0, 0]])
    with pytest.raises(DegenerateClass) as info:
        average_uncertainty(t)
    assert info.value.element == "e2"


def test_bad_arguments():
    with pytest.raises(FuzzyError):
        expected_cardinality(square(np.zeros((0, 0))), 0)
    with pytest.raises(FuzzyError):
        expected_cardinality(square(np.eye(2)), 5)
    rect = FuzzyRelationMatrix(Universe(["a"]), Universe(["x", "y"]), [[1, 1]])
    with pytest.raises(FuzzyError):
        average_uncertainty(rect)


def test_row_uncertainties_report_every_row():
    rows = row_uncertainties(square(np.eye(2)))
    assert rows == [("e1", 0.5, 1.0), ("e2", 0.5, 1.0)]


positive = st.floats(0.01, 1.0)
any_grade = st.floats(0.0, 1.0)


@st.composite
def nested_pair(draw, max_size=6):
    """T1 with strictly positive rows and a pointwise larger T2."""
    n = draw(st.integers(1, max_size))
    t1 = np.array(draw(st.lists(st.lists(positive, min_size=n, max_size=n), min_size=n, max_size=n)))
    lift = np.array(draw(st.lists(st.lists(any_grade, min_size=n, max_size=n), min_size=n, max_size=n)))
    return square(t1), square(np.maximum(t1, lift))


@given(nested_pair())
def test_monotonicity_corrected_direction(pair):
    small, large = pair
    assert average_uncertainty(small) >= average_uncertainty(large)


@st.composite
def positive_pair(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    grid = st.lists(st.lists(positive, min_size=n, max_size=n), min_size=n, max_size=n)
    return square(draw(grid)), square(draw(grid))


@given(positive_pair())
def test_intersection_and_union_bounds(pair):
    t1, t2 = pair
    g1, g2 = average_uncertainty(t1), average_uncertainty(t2)
    assert average_uncertainty(relation_intersection(t1, t2)) >= max(g1, g2)
    assert average_uncertainty(relation_union(t1, t2)) <= min(g1, g2)


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(st.floats(0.05, 0.9), min_size=n, max_size=n), min_size=n, max_size=n),
        st.integers(0, n - 1),
        st.integers(0, n - 1),
        st.floats(0.01, 0.1),
    )
))
def test_raising_a_cell_lowers_the_row_uncertainty(args):
    n, cells, i, j, delta = args
    before = square(cells)
    raised = np.array(cells)
    raised[i, j] += delta
    after = square(raised)
    assert uncertainty_quantity(after, i) < uncertainty_quantity(before, i)


def test_all_ones_gives_zero_exactly_for_many_sizes():
    for n in range(1, 20):
        assert average_uncertainty(square(np.ones((n, n)))) == 0.0
