from functools import reduce

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import EPS, coarse_grade, fixture, fuzzy_sets, grade, labels
from fuzzysoft.algebra import FuzzySoftSet
from fuzzysoft.core import FuzzyError, FuzzySet, TNorm, Universe
from fuzzysoft.decision import (
    Criterion,
    DecisionQuery,
    PayoffTable,
    decide,
    expected_value,
    possibility_dominance,
    rank,
    regret_table,
    score_alternatives,
    select_best,
    validate_probability,
)

WINNERS = {"app1": "h7", "app2": "p2", "app3": "i6", "app4": "s1", "app5": "m2", "app6": "t2"}


def app(name):
    doc = fixture(f"{name}.fsr")
    return doc, doc.query("choice").query


def per_cell_scores(doc, query):
    """Independent oracle: combine the criteria grades element by element."""
    u = next(iter(doc.fuzzy_soft_sets.values())).universe
    op = min if query.combiner is TNorm.MIN else (lambda a, b: a * b)
    out = {}
    for e in u:
        grades = [doc.fuzzy_soft_sets[c.set_name][c.parameter][e] for c in query.criteria]
        out[e] = reduce(op, grades)
    return out


# -- scoring ---------------------------------------------------------------

def test_house_min_scores():
    doc, q = app("app1")
    scores = score_alternatives(doc.fuzzy_soft_sets, q.with_combiner("min"))
    expected = [0.2, 0, 0.5, 0.2, 0.2, 0, 0.7]
    assert scores.grades.tolist() == pytest.approx(expected, abs=0.01)
    assert select_best(scores) == ("h7", pytest.approx(0.7))


def test_investment_product_scores():
    doc, q = app("app3")
    scores = score_alternatives(doc.fuzzy_soft_sets, q)
    assert scores["i1"] == pytest.approx(0.25, abs=0.01)
    assert scores["i6"] == pytest.approx(0.36, abs=0.01)


@pytest.mark.parametrize("name", sorted(WINNERS))
def test_scores_match_per_cell_oracle(name):
    doc, q = app(name)
    scores = score_alternatives(doc.fuzzy_soft_sets, q)
    oracle = per_cell_scores(doc, q)
    for e, v in oracle.items():
        assert scores[e] == pytest.approx(v, abs=EPS)


@pytest.mark.parametrize("name", sorted(WINNERS))
def test_announced_winners(name):
    doc, q = app(name)
    result = decide(doc.fuzzy_soft_sets, q)
    assert result.winner[0] == WINNERS[name]
    assert rank(result.scores).labels()[0] == WINNERS[name]


def test_single_criterion_returns_that_set():
    doc, q = app("app1")
    c = q.criteria[0]
    for combiner in ("min", "product"):
        one = DecisionQuery((c,), TNorm(combiner))
        scores = score_alternatives(doc.fuzzy_soft_sets, one)
        assert scores == doc.fuzzy_soft_sets[c.set_name][c.parameter]


def test_unresolvable_criteria_name_the_culprit():
    doc, _ = app("app1")
    with pytest.raises(FuzzyError, match="cost2"):
        score_alternatives(doc.fuzzy_soft_sets, DecisionQuery((Criterion("cost2", "cheap"),), TNorm.MIN))
    with pytest.raises(FuzzyError, match="gold plated"):
        score_alternatives(doc.fuzzy_soft_sets, DecisionQuery((Criterion("F1", "gold plated"),), TNorm.MIN))
    with pytest.raises(FuzzyError):
        DecisionQuery((), TNorm.MIN)


def test_universe_mismatch_is_an_error():
    a = FuzzySoftSet("A", Universe(["x", "y"]), {"p": FuzzySet(Universe(["x", "y"]), [1, 0])})
    b = FuzzySoftSet("B", Universe(["z"]), {"p": FuzzySet(Universe(["z"]), [1])})
    q = DecisionQuery((Criterion("A", "p"), Criterion("B", "p")), TNorm.MIN)
    with pytest.raises(FuzzyError):
        score_alternatives({"A": a, "B": b}, q)


# -- ranking and tie-breaks ------------------------------------------------

def test_all_equal_scores_pick_first_label():
    scores = FuzzySet.constant(Universe(["c", "a", "b"]), 0.4)
    assert select_best(scores) == ("c", 0.4)
    assert rank(scores).labels() == ["c", "a", "b"]


def test_rank_orders_descending_with_stable_ties():
    scores = FuzzySet(Universe(labels(5)), [0.2, 0.7, 0.2, 0.9, 0.7])
    assert rank(scores).labels() == ["e4", "e2", "e5", "e1", "e3"]


def test_empty_universe_errors():
    empty = FuzzySet(Universe([]), [])
    with pytest.raises(FuzzyError):
        select_best(empty)
    with pytest.raises(FuzzyError):
        rank(empty)


@given(fuzzy_sets(grades=coarse_grade))
def test_rank_is_permutation_headed_by_argmax(scores):
    r = rank(scores)
    assert sorted(r.labels()) == sorted(scores.universe.labels)
    values = [s for _, s in r]
    assert values == sorted(values, reverse=True)
    assert r.winner == select_best(scores)
    # ties resolve to the earliest universe position
    top = max(scores.grades)
    assert r.winner[0] == next(e for e, g in scores.items() if g == top)


def soft_sets_for(universe, columns):
    return {
        f"S{k}": FuzzySoftSet(f"S{k}", universe, {"p": FuzzySet(universe, col)})
        for k, col in enumerate(columns)
    }


criteria_case = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(coarse_grade, min_size=n, max_size=n), min_size=1, max_size=5),
        st.sampled_from(["min", "product"]),
        st.randoms(use_true_random=False),
    )
)


@given(criteria_case)
def test_criteria_order_does_not_change_scores(case):
    n, columns, combiner, rnd = case
    u = Universe(labels(n))
    sets = soft_sets_for(u, columns)
    crit = [Criterion(name, "p") for name in sets]
    shuffled = list(crit)
    rnd.shuffle(shuffled)
    a = score_alternatives(sets, DecisionQuery(tuple(crit), TNorm(combiner)))
    b = score_alternatives(sets, DecisionQuery(tuple(shuffled), TNorm(combiner)))
    assert a.isclose(b, EPS)
    assert select_best(a)[0] == select_best(b)[0]


@given(criteria_case)
def test_all_ones_criterion_is_neutral(case):
    n, columns, combiner, _ = case
    u = Universe(labels(n))
    sets = soft_sets_for(u, columns + [[1.0] * n])
    crit = tuple(Criterion(name, "p") for name in sets)
    before = score_alternatives(sets, DecisionQuery(crit[:-1], TNorm(combiner)))
    after = score_alternatives(sets, DecisionQuery(crit, TNorm(combiner)))
    assert after == before
    assert select_best(after) == select_best(before)


def test_decision_result_dict():
    doc, q = app("app1")
    d = decide(doc.fuzzy_soft_sets, q).as_dict()
    assert set(d) >= {"scores", "ranking", "winner"}
    assert d["winner"]["label"] == "h7"
    assert [r["label"] for r in d["ranking"]][0] == "h7"


# -- payoff and regret -----------------------------------------------------

def payoff(rows):
    rows = np.asarray(rows, dtype=float)
    m, n = rows.shape
    return PayoffTable(labels(m, "S"), labels(n, "A"), rows)


def test_regret_single_row():
    assert regret_table(payoff([[3, 1, 2]])).payoffs.tolist() == [[0, 2, 1]]


def test_regret_constant_row():
    assert regret_table(payoff([[5, 5, 5]])).payoffs.tolist() == [[0, 0, 0]]


def test_regret_fixture():
    table = fixture("payoff.fsr").payoff_table("clothing order")
    assert regret_table(table).payoffs.tolist() == [[0, 20, 50], [30, 0, 20], [70, 40, 0]]


def test_payoff_shape_checked():
    with pytest.raises(FuzzyError):
        PayoffTable(("s",), ("a", "b"), [[1.0]])
    with pytest.raises(FuzzyError):
        PayoffTable(("s",), ("a",), [[float("inf")]])


def test_random_regret_matches_row_max_oracle(rng):
    for _ in range(50):
        p = rng.integers(-100, 100, size=(3, 3)).astype(float)
        r = regret_table(payoff(p)).payoffs
        for i in range(3):
            best = max(p[i])
            for j in range(3):
                assert r[i, j] == best - p[i, j]


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=n, max_size=n),
        min_size=1, max_size=5,
    )
))
def test_regret_rows_have_a_zero(rows):
    r = regret_table(payoff(rows)).payoffs
    assert np.all(r >= 0)
    assert np.all(np.any(r == 0, axis=1))


# -- expected value --------------------------------------------------------

def test_expected_value_example():
    ev = expected_value([(0.60, 0.30), (0.80, 0.10)])
    assert ev.values[0] == pytest.approx(0.18, abs=EPS)
    assert ev.values[1] == pytest.approx(0.08, abs=EPS)
    assert ev.winner == 0


def test_expected_value_edge_cases():
    assert expected_value([(0.0, 42.0)]).values == (0.0,)
    assert expected_value([(0.5, 2.0), (1.0, 1.0)]).winner == 0
    with pytest.raises(FuzzyError):
        expected_value([(1.2, 1.0)])
    with pytest.raises(FuzzyError):
        expected_value([])


# -- probability / possibility ---------------------------------------------

def test_validate_probability_examples():
    assert validate_probability([0.25, 0.55, 0.1, 0.1, 0, 0]).valid
    bad = validate_probability([0.5, 0.6])
    assert not bad.valid and any("sum" in v for v in bad.violations)
    ranged = validate_probability([-0.1, 1.1], ["a", "b"])
    assert not ranged.valid
    assert sum("outside" in v for v in ranged.violations) == 2


def test_possibility_dominance_examples():
    assert possibility_dominance([1, 0], [0.5, 1]) == [0]
    assert possibility_dominance([0.2, 0.3], [0.2, 1]) == []
    with pytest.raises(FuzzyError):
        possibility_dominance([1], [1, 1])


@pytest.mark.parametrize("name", ["tables8-9", "tables10-11", "tables12-13", "tables14-15", "tables16-17"])
def test_distribution_tables(name):
    for dist in fixture(f"{name}.fsr").distributions.values():
        labels_ = list(dist.universe)
        prob = [dist.probability[e] for e in labels_]
        poss = [dist.possibility[e] for e in labels_]
        assert validate_probability(prob, labels_).valid
        assert abs(sum(prob) - 1) <= 1e-6
        assert possibility_dominance(prob, poss) == []


@given(st.lists(grade, min_size=1, max_size=8), st.lists(grade, min_size=1, max_size=8))
def test_dominance_matches_brute_force(prob, poss):
    n = min(len(prob), len(poss))
    prob, poss = prob[:n], poss[:n]
    assert possibility_dominance(prob, poss) == [i for i in range(n) if poss[i] < prob[i]]
