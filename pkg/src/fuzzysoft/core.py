"""Finite-universe fuzzy sets, membership functions and t-norms.

Everything here is immutable once built. Grade vectors are stored as
read-only numpy arrays aligned with the universe's label order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np


class FuzzyError(ValueError):
    """Base class for domain errors raised by this package."""


class UniverseMismatch(FuzzyError):
    pass


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


def _frozen(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


def check_grades(values: np.ndarray, what: str = "grade") -> None:
    bad = np.flatnonzero(~((values >= 0.0) & (values <= 1.0)))
    if bad.size:
        raise FuzzyError(f"{what} outside [0, 1]: {values.flat[bad[0]]!r}")


class Universe:
    """Ordered collection of distinct element labels.

    Labels are usually strings but any hashable works (tuples are used for
    product parameters).
    """

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[Hashable]):
        labels = tuple(labels)
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise FuzzyError(f"duplicate universe label {label!r}")
            index[label] = i
        self._labels = labels
        self._index = index

    @property
    def labels(self) -> tuple:
        return self._labels

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise FuzzyError(f"unknown element {label!r}") from None

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, Universe) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"Universe({list(self._labels)!r})"

    def same_elements(self, other: Universe) -> bool:
        return len(self) == len(other) and all(l in other for l in self._labels)

    def order(self, labels: Iterable[Hashable]) -> list:
        """Return ``labels`` sorted by their position in this universe."""
        return sorted(labels, key=self.index)


@dataclass(frozen=True, eq=False)
class FuzzySet:
    universe: Universe
    grades: np.ndarray

    def __post_init__(self):
        grades = _frozen(self.grades)
        if grades.shape != (len(self.universe),):
            raise FuzzyError(
                f"expected {len(self.universe)} grades, got shape {grades.shape}"
            )
        check_grades(grades)
        object.__setattr__(self, "grades", grades)

    @classmethod
    def from_mapping(cls, universe: Universe, grades: Mapping[Hashable, float]) -> FuzzySet:
        missing = [l for l in universe if l not in grades]
        if missing:
            raise FuzzyError(f"no grade given for {missing[0]!r}")
        extra = [l for l in grades if l not in universe]
        if extra:
            raise FuzzyError(f"unknown element {extra[0]!r}")
        return cls(universe, [grades[l] for l in universe])

    @classmethod
    def constant(cls, universe: Universe, value: float) -> FuzzySet:
        return cls(universe, np.full(len(universe), float(value)))

    def __getitem__(self, label: Hashable) -> float:
        return float(self.grades[self.universe.index(label)])

    def __len__(self) -> int:
        return len(self.universe)

    def items(self) -> list[tuple[Hashable, float]]:
        return list(zip(self.universe.labels, map(float, self.grades)))

    def as_dict(self) -> dict:
        return dict(self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return self.universe == other.universe and np.array_equal(self.grades, other.grades)

    def isclose(self, other: FuzzySet, tol: float = 1e-9) -> bool:
        other = align(self, other)
        return bool(np.all(np.abs(self.grades - other.grades) <= tol))

    def __repr__(self) -> str:
        body = ", ".join(f"{l}/{g:g}" for l, g in self.items())
        return "{" + body + "}"


def align(reference: FuzzySet, other: FuzzySet) -> FuzzySet:
    """Express ``other`` over ``reference``'s label order.

    Sets built independently may list the same elements in a different
    order; they are matched by label. Differing element sets are an error.
    """
    if other.universe == reference.universe:
        return other
    if not reference.universe.same_elements(other.universe):
        raise UniverseMismatch(
            f"universes differ: {reference.universe!r} vs {other.universe!r}"
        )
    return FuzzySet(reference.universe, [other[l] for l in reference.universe])


# -- membership functions ---------------------------------------------------

class MembershipKind(str, enum.Enum):
    TRAPEZOID = "trapezoid"
    TRIANGLE = "triangle"
    SMOOTH_TRAPEZOID = "smooth-trapezoid"
    SMOOTH_TRIANGLE = "smooth-triangle"

    @property
    def smooth(self) -> bool:
        return self in (MembershipKind.SMOOTH_TRAPEZOID, MembershipKind.SMOOTH_TRIANGLE)

    @property
    def triangular(self) -> bool:
        return self in (MembershipKind.TRIANGLE, MembershipKind.SMOOTH_TRIANGLE)


@dataclass(frozen=True)
class MembershipFunctionSpec:
    """Four-breakpoint membership function (left foot, shoulders, right foot).

    Triangular kinds merge the shoulders; build them with :meth:`triangle`
    or pass ``b == c`` explicitly.
    """

    kind: MembershipKind
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        object.__setattr__(self, "kind", MembershipKind(self.kind))
        for name in "abcd":
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise FuzzyError(f"breakpoint {name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)
        if not (self.a <= self.b <= self.c <= self.d):
            raise FuzzyError(
                f"breakpoints must satisfy a <= b <= c <= d, got "
                f"({self.a:g}, {self.b:g}, {self.c:g}, {self.d:g})"
            )
        if self.kind.triangular and self.b != self.c:
            raise FuzzyError(f"{self.kind.value} requires b == c")

    @classmethod
    def trapezoid(cls, a, b, c, d, smooth: bool = False) -> MembershipFunctionSpec:
        kind = MembershipKind.SMOOTH_TRAPEZOID if smooth else MembershipKind.TRAPEZOID
        return cls(kind, a, b, c, d)

    @classmethod
    def triangle(cls, a, peak, d, smooth: bool = False) -> MembershipFunctionSpec:
        kind = MembershipKind.SMOOTH_TRIANGLE if smooth else MembershipKind.TRIANGLE
        return cls(kind, a, peak, peak, d)

    @property
    def breakpoints(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def __call__(self, x: float) -> float:
        return eval_membership(self, x)


def eval_membership(spec: MembershipFunctionSpec, x: float) -> float:
    """Evaluate a trapezoid-family membership function at ``x``.

    Equal breakpoints turn the corresponding slope into a right-continuous
    step: with ``a == b`` the grade is already 1 at ``a``, with ``c == d``
    it is already 0 at ``d``.
    """
    a, b, c, d = spec.breakpoints
    x = float(x)
    if x < a or x >= d:
        return 0.0
    if x < b:
        t = (x - a) / (b - a)
        value = 0.5 + 0.5 * math.cos((t - 1.0) * math.pi) if spec.kind.smooth else t
    elif x <= c:
        return 1.0
    else:
        t = (x - c) / (d - c)
        value = 0.5 + 0.5 * math.cos(t * math.pi) if spec.kind.smooth else 1.0 - t
    return min(1.0, max(0.0, value))


def point_label(x: float) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def discretize(spec: MembershipFunctionSpec, points: Sequence[float]) -> FuzzySet:
    """Sample ``spec`` at ``points``; labels are the points' text forms."""
    points = [float(p) for p in points]
    if len(set(points)) != len(points):
        raise FuzzyError("discretization points must be distinct")
    universe = Universe(point_label(p) for p in points)
    return FuzzySet(universe, [eval_membership(spec, p) for p in points])


# -- pointwise algebra ------------------------------------------------------

def union(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    b = align(a, b)
    return FuzzySet(a.universe, np.maximum(a.grades, b.grades))


def intersection(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    b = align(a, b)
    return FuzzySet(a.universe, np.minimum(a.grades, b.grades))


def complement(a: FuzzySet) -> FuzzySet:
    return FuzzySet(a.universe, 1.0 - a.grades)


def set_algebra(op: str, a: FuzzySet, b: FuzzySet | None = None) -> FuzzySet:
    if op == "complement":
        if b is not None:
            raise FuzzyError("complement takes a single set")
        return complement(a)
    if b is None:
        raise FuzzyError(f"{op} needs two sets")
    if op == "union":
        return union(a, b)
    if op == "intersection":
        return intersection(a, b)
    raise FuzzyError(f"unknown set operation {op!r}")


def alpha_cut_set(a: FuzzySet, alpha: float) -> frozenset:
    """Weak alpha-cut: every element whose grade is at least ``alpha``."""
    return frozenset(l for l, g in a.items() if g >= alpha)


def scalar_cardinality(a: FuzzySet) -> float:
    return float(a.grades.sum())


# -- t-norms ----------------------------------------------------------------

class TNorm(str, enum.Enum):
    MIN = "min"
    PRODUCT = "product"

    def reduce(self, stacked: np.ndarray, axis: int = 0) -> np.ndarray:
        if self is TNorm.MIN:
            return np.min(stacked, axis=axis)
        return np.prod(stacked, axis=axis)


def tnorm_combine(tag: TNorm | str, grades: Sequence[float]) -> float:
    tag = TNorm(tag)
    grades = np.asarray(grades, dtype=float)
    if grades.size == 0:
        raise FuzzyError("t-norm of an empty list is undefined here")
    check_grades(grades)
    return float(tag.reduce(grades))
