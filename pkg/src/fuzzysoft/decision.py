"""Parameterized multi-criteria ranking and classic decision-table helpers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

import numpy as np

from .algebra import FuzzySoftSet, nary_combine
from .core import FuzzyError, FuzzySet, InvariantViolation, TNorm
from .soft import format_param

PROBABILITY_TOL = 1e-6


@dataclass(frozen=True)
class Criterion:
    set_name: str
    parameter: Hashable

    def __str__(self):
        return f"{self.set_name}:{format_param(self.parameter)}"


@dataclass(frozen=True)
class DecisionQuery:
    criteria: tuple[Criterion, ...]
    combiner: TNorm
    name: str = ""

    def __post_init__(self):
        crit = tuple(
            c if isinstance(c, Criterion) else Criterion(*c) for c in self.criteria
        )
        if not crit:
            raise FuzzyError("a decision query needs at least one criterion")
        object.__setattr__(self, "criteria", crit)
        object.__setattr__(self, "combiner", TNorm(self.combiner))

    def with_combiner(self, combiner: TNorm | str) -> DecisionQuery:
        return DecisionQuery(self.criteria, TNorm(combiner), self.name)


def resolve(sets: Mapping[str, FuzzySoftSet], criterion: Criterion) -> FuzzySet:
    try:
        fss = sets[criterion.set_name]
    except KeyError:
        raise FuzzyError(f"unknown fuzzy soft set {criterion.set_name!r}") from None
    if criterion.parameter not in fss:
        raise FuzzyError(
            f"fuzzy soft set {criterion.set_name!r} has no parameter "
            f"{format_param(criterion.parameter)!r}"
        )
    return fss[criterion.parameter]


def score_alternatives(sets: Mapping[str, FuzzySoftSet], query: DecisionQuery) -> FuzzySet:
    """Combine the fuzzy sets named by the query's criteria into one score per alternative."""
    chosen = [resolve(sets, c) for c in query.criteria]
    return nary_combine(chosen, query.combiner)


@dataclass(frozen=True)
class Ranking:
    entries: tuple[tuple[Hashable, float], ...]

    @property
    def winner(self) -> tuple[Hashable, float]:
        return self.entries[0]

    def labels(self) -> list:
        return [label for label, _ in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def rank(scores: FuzzySet) -> Ranking:
    """Alternatives by descending score; ties keep universe order."""
    if len(scores) == 0:
        raise FuzzyError("cannot rank an empty universe")
    # stable sort on the negated score keeps earlier elements first on ties
    order = np.argsort(-scores.grades, kind="stable")
    labels = scores.universe.labels
    ranking = Ranking(tuple((labels[i], float(scores.grades[i])) for i in order))
    _check_ranking(scores, ranking)
    return ranking


def _check_ranking(scores: FuzzySet, ranking: Ranking) -> None:
    if sorted(map(scores.universe.index, ranking.labels())) != list(range(len(scores))):
        raise InvariantViolation("ranking is not a permutation of the universe")
    values = [s for _, s in ranking]
    if any(b > a for a, b in zip(values, values[1:])):
        raise InvariantViolation("ranking scores are not non-increasing")


def select_best(scores: FuzzySet) -> tuple[Hashable, float]:
    if len(scores) == 0:
        raise FuzzyError("cannot select from an empty universe")
    i = int(np.argmax(scores.grades))  # first maximum wins ties
    return scores.universe.labels[i], float(scores.grades[i])


@dataclass(frozen=True)
class DecisionResult:
    query: DecisionQuery
    scores: FuzzySet
    ranking: Ranking

    @property
    def winner(self) -> tuple[Hashable, float]:
        return self.ranking.winner

    def as_dict(self) -> dict:
        label, score = self.winner
        return {
            "query": self.query.name,
            "combiner": self.query.combiner.value,
            "criteria": [
                {"set": c.set_name, "parameter": c.parameter} for c in self.query.criteria
            ],
            "scores": {str(l): g for l, g in self.scores.items()},
            "ranking": [{"label": l, "score": s} for l, s in self.ranking],
            "winner": {"label": label, "score": score},
        }


def decide(sets: Mapping[str, FuzzySoftSet], query: DecisionQuery) -> DecisionResult:
    scores = score_alternatives(sets, query)
    ranking = rank(scores)
    if ranking.winner != select_best(scores):
        raise InvariantViolation("ranking head disagrees with argmax")
    return DecisionResult(query, scores, ranking)


# -- payoff / regret --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PayoffTable:
    """States of nature (rows) by courses of action (columns)."""

    states: tuple[str, ...]
    actions: tuple[str, ...]
    payoffs: np.ndarray
    name: str = ""

    def __post_init__(self):
        states, actions = tuple(self.states), tuple(self.actions)
        payoffs = np.array(self.payoffs, dtype=float)
        if payoffs.shape != (len(states), len(actions)):
            raise FuzzyError(
                f"payoff matrix shape {payoffs.shape} does not match "
                f"{len(states)} states x {len(actions)} actions"
            )
        if not np.all(np.isfinite(payoffs)):
            raise FuzzyError("payoffs must be finite numbers")
        payoffs.setflags(write=False)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "actions", actions)
        object.__setattr__(self, "payoffs", payoffs)

    def __eq__(self, other):
        if not isinstance(other, PayoffTable):
            return NotImplemented
        return (
            (self.name, self.states, self.actions) == (other.name, other.states, other.actions)
            and np.array_equal(self.payoffs, other.payoffs)
        )


def regret_table(table: PayoffTable) -> PayoffTable:
    """Opportunity loss: each state's best payoff minus the payoff taken."""
    if table.payoffs.size == 0:
        regrets = table.payoffs.copy()
    else:
        regrets = table.payoffs.max(axis=1, keepdims=True) - table.payoffs
    if regrets.size and (np.any(regrets < 0) or not np.all(np.any(regrets == 0, axis=1))):
        raise InvariantViolation("regret rows must be non-negative and contain a zero")
    name = f"{table.name} regret" if table.name else "regret"
    return PayoffTable(table.states, table.actions, regrets, name)


@dataclass(frozen=True)
class ExpectedValues:
    values: tuple[float, ...]
    winner: int


def expected_value(options: Sequence[tuple[float, float]]) -> ExpectedValues:
    """Probability times value for each option; the winner is the first maximum."""
    if not options:
        raise FuzzyError("need at least one option")
    values = []
    for k, (prob, value) in enumerate(options):
        if not 0.0 <= prob <= 1.0:
            raise FuzzyError(f"option {k + 1}: probability {prob!r} outside [0, 1]")
        values.append(prob * value)
    return ExpectedValues(tuple(values), int(np.argmax(values)))


# -- probability / possibility diagnostics ----------------------------------

@dataclass(frozen=True)
class ProbabilityCheck:
    valid: bool
    total: float
    violations: tuple[str, ...]


def validate_probability(dist: Sequence[float], labels: Sequence[str] | None = None) -> ProbabilityCheck:
    values = [float(v) for v in dist]
    labels = list(labels) if labels is not None else [str(i + 1) for i in range(len(values))]
    problems = [
        f"{label}: probability {v:g} outside [0, 1]"
        for label, v in zip(labels, values)
        if not 0.0 <= v <= 1.0
    ]
    total = float(sum(values))
    if abs(total - 1.0) > PROBABILITY_TOL:
        problems.append(f"probabilities sum to {total:.6g}, not 1")
    return ProbabilityCheck(not problems, total, tuple(problems))


def possibility_dominance(prob: Sequence[float], poss: Sequence[float]) -> list[int]:
    """Indices where the possibility falls below the probability."""
    if len(prob) != len(poss):
        raise FuzzyError(
            f"distribution lengths differ ({len(prob)} probabilities, {len(poss)} possibilities)"
        )
    return [i for i, (p, q) in enumerate(zip(prob, poss)) if q < p]

