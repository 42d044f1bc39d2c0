"""Fuzzy soft sets, fuzzy relation matrices and their algebra."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Hashable, Mapping, Sequence

import numpy as np

from .core import (
    FuzzyError,
    FuzzySet,
    TNorm,
    Universe,
    UniverseMismatch,
    _frozen,
    align,
    check_grades,
    complement,
)
from .soft import CrispRelationMatrix, _require_square, format_param


@dataclass(frozen=True, eq=False)
class FuzzySoftSet:
    """A named family of fuzzy sets over one universe, keyed by parameter."""

    name: str
    universe: Universe
    members: Mapping[Hashable, FuzzySet]

    def __post_init__(self):
        members = {}
        for param, fs in self.members.items():
            if not isinstance(fs, FuzzySet):
                fs = FuzzySet.from_mapping(self.universe, fs)
            members[param] = align(FuzzySet.constant(self.universe, 0.0), fs)
        object.__setattr__(self, "members", members)

    @property
    def parameters(self) -> tuple:
        return tuple(self.members)

    def __getitem__(self, param) -> FuzzySet:
        try:
            return self.members[param]
        except KeyError:
            raise FuzzyError(
                f"fuzzy soft set {self.name!r} has no parameter {format_param(param)!r}"
            ) from None

    def __contains__(self, param) -> bool:
        return param in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzySoftSet):
            return NotImplemented
        return (
            self.name == other.name
            and self.universe == other.universe
            and list(self.members.items()) == list(other.members.items())
        )

    def __repr__(self) -> str:
        return f"FuzzySoftSet({self.name!r}, parameters={list(self.members)!r})"


@dataclass(frozen=True, eq=False)
class FuzzyRelationMatrix:
    rows: Universe
    cols: Universe
    cells: np.ndarray

    def __post_init__(self):
        cells = _frozen(self.cells)
        if cells.shape != (len(self.rows), len(self.cols)):
            raise FuzzyError(
                f"relation matrix shape {cells.shape} does not match "
                f"{len(self.rows)}x{len(self.cols)} universes"
            )
        check_grades(cells, "relation grade")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def square_from(cls, universe: Universe, cells) -> FuzzyRelationMatrix:
        return cls(universe, universe, cells)

    @property
    def square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, pair: tuple[Hashable, Hashable]) -> float:
        r, c = pair
        return float(self.cells[self.rows.index(r), self.cols.index(c)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyRelationMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.cells, other.cells)
        )

    def __repr__(self) -> str:
        return f"FuzzyRelationMatrix({self.rows.labels}x{self.cols.labels}, {self.cells.tolist()})"


# -- relation algebra -------------------------------------------------------

def _same_shape(t1: FuzzyRelationMatrix, t2: FuzzyRelationMatrix) -> None:
    if t1.rows != t2.rows or t1.cols != t2.cols:
        raise UniverseMismatch("relations are defined over different universes")


def relation_union(t1: FuzzyRelationMatrix, t2: FuzzyRelationMatrix) -> FuzzyRelationMatrix:
    _same_shape(t1, t2)
    return FuzzyRelationMatrix(t1.rows, t1.cols, np.maximum(t1.cells, t2.cells))


def relation_intersection(
    t1: FuzzyRelationMatrix, t2: FuzzyRelationMatrix
) -> FuzzyRelationMatrix:
    _same_shape(t1, t2)
    return FuzzyRelationMatrix(t1.rows, t1.cols, np.minimum(t1.cells, t2.cells))


def relation_contains(t1: FuzzyRelationMatrix, t2: FuzzyRelationMatrix) -> bool:
    """``t1`` is contained in ``t2`` (pointwise less-or-equal)."""
    _same_shape(t1, t2)
    return bool(np.all(t1.cells <= t2.cells))


def alpha_cut_relation(t: FuzzyRelationMatrix, alpha: float) -> CrispRelationMatrix:
    return CrispRelationMatrix(t.rows, t.cols, t.cells >= alpha)


@dataclass(frozen=True)
class FuzzyProperties:
    reflexive: bool
    symmetric: bool
    min_transitive: bool

    @property
    def similarity(self) -> bool:
        return self.reflexive and self.symmetric

    @property
    def equivalence(self) -> bool:
        return self.similarity and self.min_transitive


def maxmin_compose(r: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Max-min product of two grade matrices."""
    r, s = np.asarray(r, dtype=float), np.asarray(s, dtype=float)
    if r.shape[-1] != s.shape[0]:
        raise FuzzyError(f"cannot compose shapes {r.shape} and {s.shape}")
    return np.max(np.minimum(r[:, :, None], s[None, :, :]), axis=1, initial=0.0)


def check_fuzzy_properties(t: FuzzyRelationMatrix) -> FuzzyProperties:
    _require_square(t)
    cells = t.cells
    return FuzzyProperties(
        reflexive=bool(np.all(np.diag(cells) == 1.0)),
        symmetric=bool(np.array_equal(cells, cells.T)),
        min_transitive=bool(np.all(cells >= maxmin_compose(cells, cells))),
    )


# -- relations built from fuzzy soft sets -----------------------------------

def pairwise_relation(
    f: FuzzySoftSet, e_i: Hashable, g: FuzzySoftSet, e_j: Hashable
) -> FuzzyRelationMatrix:
    """Product relation: cell ``(l, k)`` is ``F(e_i)(u_l) * G(e_j)(u_k)``."""
    row = f[e_i]
    col = g[e_j]
    return FuzzyRelationMatrix(row.universe, col.universe, np.outer(row.grades, col.grades))


def _stack(sets: Sequence[FuzzySet]) -> tuple[Universe, np.ndarray]:
    if not sets:
        raise FuzzyError("need at least one fuzzy set")
    first = sets[0]
    return first.universe, np.vstack([align(first, s).grades for s in sets])


def nary_combine(sets: Sequence[FuzzySet], combiner: TNorm | str) -> FuzzySet:
    """Combine fuzzy sets element by element with the given t-norm."""
    universe, stacked = _stack(sets)
    return FuzzySet(universe, TNorm(combiner).reduce(stacked))


def _tuple_product(sets: Sequence[FuzzySoftSet], reduce, name: str) -> FuzzySoftSet:
    if not sets:
        raise FuzzyError("need at least one fuzzy soft set")
    universe = sets[0].universe
    for s in sets[1:]:
        if not universe.same_elements(s.universe):
            raise UniverseMismatch(f"{s.name!r} is over a different universe")
    members = {}
    for params in product(*(s.parameters for s in sets)):
        _, stacked = _stack([s[p] for s, p in zip(sets, params)])
        members[params] = FuzzySet(universe, reduce(stacked))
    return FuzzySoftSet(name, universe, members)


def _join_names(sets, op: str) -> str:
    return f" {op} ".join(s.name for s in sets)


def soft_and(sets: Sequence[FuzzySoftSet]) -> FuzzySoftSet:
    return _tuple_product(sets, lambda m: m.min(axis=0), _join_names(sets, "AND"))


def soft_or(sets: Sequence[FuzzySoftSet]) -> FuzzySoftSet:
    return _tuple_product(sets, lambda m: m.max(axis=0), _join_names(sets, "OR"))


def soft_not(fs: FuzzySoftSet) -> FuzzySoftSet:
    return FuzzySoftSet(
        f"NOT {fs.name}", fs.universe, {p: complement(s) for p, s in fs.members.items()}
    )


def soft_nand(sets: Sequence[FuzzySoftSet]) -> FuzzySoftSet:
    return _tuple_product(sets, lambda m: 1.0 - m.min(axis=0), _join_names(sets, "NAND"))


def soft_nor(sets: Sequence[FuzzySoftSet]) -> FuzzySoftSet:
    return _tuple_product(sets, lambda m: 1.0 - m.max(axis=0), _join_names(sets, "NOR"))


SOFT_OPERATIONS = {"AND": soft_and, "OR": soft_or, "NAND": soft_nand, "NOR": soft_nor}


def soft_product_ops(op: str, sets: Sequence[FuzzySoftSet]) -> FuzzySoftSet:
    op = op.upper()
    if op == "NOT":
        if len(sets) != 1:
            raise FuzzyError("NOT takes exactly one fuzzy soft set")
        return soft_not(sets[0])
    try:
        return SOFT_OPERATIONS[op](sets)
    except KeyError:
        raise FuzzyError(f"unknown operation {op!r}") from None


def extension_principle(
    f: Callable[..., Hashable] | Mapping[tuple, Hashable],
    inputs: Sequence[FuzzySet],
    codomain: Universe,
) -> FuzzySet:
    """Lift a crisp map over the product of the input universes.

    ``f`` is either a mapping keyed by element tuples or a callable taking
    one element per input. The grade of ``y`` is the best (max) over its
    preimage of the weakest (min) component grade, and 0 when nothing maps
    to ``y``.
    """
    if not inputs:
        raise FuzzyError("extension principle needs at least one input set")
    if isinstance(f, Mapping):
        table = f

        def f(*xs):
            try:
                return table[xs]
            except KeyError:
                raise FuzzyError(f"mapping is not defined at {xs!r}") from None

    out = np.zeros(len(codomain))
    for combo in product(*(s.items() for s in inputs)):
        xs = tuple(label for label, _ in combo)
        y = f(*xs)
        if y not in codomain:
            raise FuzzyError(f"f{xs!r} = {y!r} lies outside the codomain")
        j = codomain.index(y)
        out[j] = max(out[j], min(g for _, g in combo))
    return FuzzySet(codomain, out)


# -- equivalence classes ----------------------------------------------------

@dataclass(frozen=True)
class EquivalenceClass:
    center: Hashable
    membership: FuzzySet


def equivalence_class(t: FuzzyRelationMatrix, e: Hashable) -> EquivalenceClass:
    _require_square(t)
    i = t.rows.index(e)
    return EquivalenceClass(e, FuzzySet(t.cols, t.cells[i]))


def quotient_set(t: FuzzyRelationMatrix) -> list[EquivalenceClass]:
    _require_square(t)
    return [EquivalenceClass(e, FuzzySet(t.cols, row)) for e, row in zip(t.rows, t.cells)]
