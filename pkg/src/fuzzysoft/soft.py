"""Crisp soft sets, Boolean relation matrices, covers and partitions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .core import FuzzyError, Universe, UniverseMismatch, _frozen


def format_param(param) -> str:
    """Display form of a parameter; tuple parameters join their parts."""
    if isinstance(param, tuple):
        return ", ".join(map(str, param))
    return str(param)


@dataclass(frozen=True, eq=False)
class SoftSet:
    """Parameter-indexed family of crisp subsets of ``universe``."""

    universe: Universe
    approximations: Mapping[Hashable, frozenset]
    name: str = ""

    def __post_init__(self):
        approx = {}
        for param, subset in self.approximations.items():
            subset = frozenset(subset)
            unknown = [e for e in subset if e not in self.universe]
            if unknown:
                raise FuzzyError(
                    f"approximation of {format_param(param)!r} contains unknown "
                    f"element {unknown[0]!r}"
                )
            approx[param] = subset
        object.__setattr__(self, "approximations", approx)

    @property
    def parameters(self) -> tuple:
        return tuple(self.approximations)

    def __getitem__(self, param) -> frozenset:
        try:
            return self.approximations[param]
        except KeyError:
            raise FuzzyError(
                f"soft set {self.name or '?'} has no parameter {format_param(param)!r}"
            ) from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, SoftSet):
            return NotImplemented
        return (
            self.universe == other.universe
            and list(self.approximations.items()) == list(other.approximations.items())
        )


@dataclass(frozen=True, eq=False)
class CrispRelationMatrix:
    rows: Universe
    cols: Universe
    cells: np.ndarray

    def __post_init__(self):
        cells = np.asarray(self.cells)
        if cells.shape != (len(self.rows), len(self.cols)):
            raise FuzzyError(
                f"relation matrix shape {cells.shape} does not match "
                f"{len(self.rows)}x{len(self.cols)} universes"
            )
        if cells.dtype != bool:
            if not np.all((cells == 0) | (cells == 1)):
                raise FuzzyError("crisp relation cells must be 0 or 1")
            cells = cells.astype(bool)
        object.__setattr__(self, "cells", _frozen(cells, dtype=bool))

    @property
    def square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, pair: tuple[Hashable, Hashable]) -> bool:
        r, c = pair
        return bool(self.cells[self.rows.index(r), self.cols.index(c)])

    def pairs(self) -> list[tuple]:
        return [(self.rows.labels[i], self.cols.labels[j]) for i, j in np.argwhere(self.cells)]

    def transpose(self) -> CrispRelationMatrix:
        return CrispRelationMatrix(self.cols, self.rows, self.cells.T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrispRelationMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.cells, other.cells)
        )

    def __repr__(self) -> str:
        return f"CrispRelationMatrix({self.pairs()!r})"


def build_relation_matrix(
    pairs: Iterable[tuple[Hashable, Hashable]], rows: Universe, cols: Universe
) -> CrispRelationMatrix:
    cells = np.zeros((len(rows), len(cols)), dtype=bool)
    for r, c in pairs:
        cells[rows.index(r), cols.index(c)] = True
    return CrispRelationMatrix(rows, cols, cells)


@dataclass(frozen=True)
class CrispProperties:
    reflexive: bool
    symmetric: bool
    transitive: bool

    @property
    def similarity(self) -> bool:
        return self.reflexive and self.symmetric

    @property
    def equivalence(self) -> bool:
        return self.similarity and self.transitive


def _require_square(m) -> None:
    if not m.square:
        raise FuzzyError("relation must be defined on a single universe (square matrix)")


def boolean_compose(m: np.ndarray, n: np.ndarray) -> np.ndarray:
    """Boolean matrix product (max-min over {0, 1})."""
    return (m.astype(np.uint8) @ n.astype(np.uint8)) > 0


def check_crisp_properties(m: CrispRelationMatrix) -> CrispProperties:
    _require_square(m)
    cells = m.cells
    return CrispProperties(
        reflexive=bool(np.all(np.diag(cells))),
        symmetric=bool(np.array_equal(cells, cells.T)),
        transitive=bool(np.all(~boolean_compose(cells, cells) | cells)),
    )


def similarity_class(m: CrispRelationMatrix, e: Hashable) -> frozenset:
    """Elements ``x`` with ``x`` related to ``e`` (a column read)."""
    _require_square(m)
    j = m.cols.index(e)
    return frozenset(m.rows.labels[i] for i in np.flatnonzero(m.cells[:, j]))


# -- covers and partitions --------------------------------------------------

def _blocks(family: Iterable[Iterable[Hashable]], ground: Universe) -> list[frozenset]:
    blocks = []
    for block in family:
        block = frozenset(block)
        if not block:
            raise FuzzyError("blocks of a set family must be nonempty")
        outside = [e for e in block if e not in ground]
        if outside:
            raise FuzzyError(f"block element {outside[0]!r} is not in the ground set")
        blocks.append(block)
    return blocks


def is_cover(family, ground: Universe) -> bool:
    covered = frozenset().union(*_blocks(family, ground))
    return covered == frozenset(ground)


def is_partition(family, ground: Universe) -> bool:
    blocks = _blocks(family, ground)
    if not is_cover(blocks, ground):
        return False
    return sum(len(b) for b in blocks) == len(frozenset().union(*blocks))


@dataclass(frozen=True)
class Partition:
    """Partition of ``ground``; blocks kept sorted by their earliest member."""

    ground: Universe
    blocks: tuple[frozenset, ...]

    def __post_init__(self):
        blocks = _blocks(self.blocks, self.ground)
        if not is_partition(blocks, self.ground):
            raise FuzzyError("blocks do not form a partition of the ground set")
        first = lambda b: min(map(self.ground.index, b))  # noqa: E731
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=first)))

    @classmethod
    def coarsest(cls, ground: Universe) -> Partition:
        return cls(ground, (frozenset(ground),))

    @classmethod
    def finest(cls, ground: Universe) -> Partition:
        return cls(ground, tuple(frozenset([e]) for e in ground))

    def block_of(self, e: Hashable) -> frozenset:
        for b in self.blocks:
            if e in b:
                return b
        raise FuzzyError(f"unknown element {e!r}")

    def as_lists(self) -> list[list]:
        return [self.ground.order(b) for b in self.blocks]


def _as_blocks(p, ground: Universe) -> list[frozenset]:
    return list(p.blocks) if isinstance(p, Partition) else _blocks(p, ground)


def refines(sigma, pi, ground: Universe) -> bool:
    """True when every block of ``sigma`` sits inside some block of ``pi``."""
    sigma, pi = _as_blocks(sigma, ground), _as_blocks(pi, ground)
    return all(any(s <= p for p in pi) for s in sigma)


def meet(sigma, pi, ground: Universe) -> Partition:
    sigma, pi = _as_blocks(sigma, ground), _as_blocks(pi, ground)
    for name, fam in (("first", sigma), ("second", pi)):
        if not is_partition(fam, ground):
            raise FuzzyError(f"{name} argument of meet is not a partition")
    return Partition(ground, tuple(s & p for s, p in product(sigma, pi) if s & p))


# -- soft relations ---------------------------------------------------------

def crisp_soft_relation(
    f: SoftSet, g: SoftSet, pairs: Sequence[tuple[Hashable, Hashable]]
) -> SoftSet:
    """Soft relation whose approximation at ``(x, y)`` is ``F(x) & G(y)``."""
    if f.universe != g.universe:
        raise UniverseMismatch("soft relation needs soft sets over a common universe")
    return SoftSet(f.universe, {(x, y): f[x] & g[y] for x, y in pairs})


@dataclass(frozen=True, eq=False)
class CrispSoftRelation:
    """Parameter-indexed family of Boolean relation matrices."""

    name: str
    matrices: Mapping[Hashable, CrispRelationMatrix]

    def __post_init__(self):
        object.__setattr__(self, "matrices", dict(self.matrices))

    @property
    def parameters(self) -> tuple:
        return tuple(self.matrices)

    def __getitem__(self, param) -> CrispRelationMatrix:
        try:
            return self.matrices[param]
        except KeyError:
            raise FuzzyError(f"soft relation {self.name} has no parameter {param!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrispSoftRelation):
            return NotImplemented
        return self.name == other.name and list(self.matrices.items()) == list(
            other.matrices.items()
        )
