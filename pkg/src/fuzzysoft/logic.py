"""Many-valued propositional logic over [0, 1] and max-min inference.

Connectives: ``and`` is min, ``or`` is max, ``not`` is ``1 - x``.
Implication is pluggable (material ``max(1 - p, q)`` or Goedel
``1 if p <= q else q``); equivalence is the min of both implications.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence, Union

import numpy as np

from .core import FuzzyError, check_grades

MAX_VARIABLES = 6
MAX_GRID = 11
ONE_TOL = 1e-9


class Implication(str, enum.Enum):
    MATERIAL = "material"
    GOEDEL = "goedel"


DEFAULT_IMPLICATION = Implication.GOEDEL


# -- expression tree --------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise FuzzyError(f"truth constant outside [0, 1]: {self.value!r}")

    def __str__(self):
        return f"{self.value:g}"


@dataclass(frozen=True)
class Not:
    operand: "Expr"

    def __str__(self):
        return f"~{_wrap(self.operand)}"


@dataclass(frozen=True)
class _Binary:
    left: "Expr"
    right: "Expr"
    symbol = "?"

    def __str__(self):
        return f"{_wrap(self.left)} {self.symbol} {_wrap(self.right)}"


class And(_Binary):
    symbol = "&"


class Or(_Binary):
    symbol = "|"


class Implies(_Binary):
    symbol = "->"


class Equiv(_Binary):
    symbol = "<->"


Expr = Union[Var, Const, Not, And, Or, Implies, Equiv]

CONNECTIVES = {"and": And, "or": Or, "implies": Implies, "equiv": Equiv}


def _wrap(e) -> str:
    return str(e) if isinstance(e, (Var, Const, Not)) else f"({e})"


def variables(expr: Expr) -> list[str]:
    """Variable names in order of first appearance."""
    seen: dict[str, None] = {}

    def walk(e):
        if isinstance(e, Var):
            seen.setdefault(e.name)
        elif isinstance(e, Not):
            walk(e.operand)
        elif isinstance(e, _Binary):
            walk(e.left)
            walk(e.right)

    walk(expr)
    return list(seen)


def implication(p, q, impl: Implication | str = DEFAULT_IMPLICATION):
    if Implication(impl) is Implication.MATERIAL:
        return np.maximum(1.0 - p, q)
    return np.where(p <= q, 1.0, q)


def _evaluate(expr: Expr, env: Mapping[str, np.ndarray], impl: Implication):
    if isinstance(expr, Var):
        try:
            return env[expr.name]
        except KeyError:
            raise FuzzyError(f"unbound variable {expr.name!r}") from None
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Not):
        return 1.0 - _evaluate(expr.operand, env, impl)
    p = _evaluate(expr.left, env, impl)
    q = _evaluate(expr.right, env, impl)
    if isinstance(expr, And):
        return np.minimum(p, q)
    if isinstance(expr, Or):
        return np.maximum(p, q)
    if isinstance(expr, Implies):
        return implication(p, q, impl)
    if isinstance(expr, Equiv):
        return np.minimum(implication(p, q, impl), implication(q, p, impl))
    raise TypeError(f"not an expression node: {expr!r}")


def eval_expr(
    expr: Expr,
    assignment: Mapping[str, float],
    impl: Implication | str = DEFAULT_IMPLICATION,
) -> float:
    values = np.array([float(v) for v in assignment.values()])
    check_grades(values, "truth value")
    return float(_evaluate(expr, dict(assignment), Implication(impl)))


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op><->|->|[~!&|()]))"
)
_WORDS = {"and": "&", "or": "|", "not": "~", "implies": "->", "iff": "<->"}


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FuzzyError(f"cannot parse expression at {text[pos:]!r}")
        pos = m.end()
        tok = m.group("num") or m.group("name") or m.group("op")
        tokens.append(_WORDS.get(tok.lower(), tok) if m.group("name") else tok)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise FuzzyError(f"expected {expected or 'a term'}, found {tok or 'end of input'}")
        self.pos += 1
        return tok

    def parse(self) -> Expr:
        e = self.equiv()
        if self.peek() is not None:
            raise FuzzyError(f"unexpected {self.peek()!r}")
        return e

    def equiv(self):
        e = self.implies()
        while self.peek() == "<->":
            self.take()
            e = Equiv(e, self.implies())
        return e

    def implies(self):
        e = self.disj()
        if self.peek() == "->":
            self.take()
            return Implies(e, self.implies())
        return e

    def disj(self):
        e = self.conj()
        while self.peek() == "|":
            self.take()
            e = Or(e, self.conj())
        return e

    def conj(self):
        e = self.unary()
        while self.peek() == "&":
            self.take()
            e = And(e, self.unary())
        return e

    def unary(self):
        if self.peek() in ("~", "!"):
            self.take()
            return Not(self.unary())
        tok = self.take()
        if tok == "(":
            e = self.equiv()
            self.take(")")
            return e
        if tok[0].isdigit() or tok[0] == ".":
            return Const(float(tok))
        if tok[0].isalpha() or tok[0] == "_":
            return Var(tok)
        raise FuzzyError(f"unexpected {tok!r}")


def parse_expr(text: str) -> Expr:
    """Parse e.g. ``"(p & (p -> q)) -> q"``.

    Operators by increasing precedence: ``<->``, ``->`` (right-assoc),
    ``|``, ``&``, ``~``. The words and/or/not/implies/iff are accepted too.
    """
    return _Parser(text).parse()


# -- truth grids and tables -------------------------------------------------

@dataclass(frozen=True)
class TruthGrid:
    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values or values[0] != 0.0 or values[-1] != 1.0:
            raise FuzzyError("truth grid must start at 0 and end at 1")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise FuzzyError("truth grid must be strictly increasing")
        object.__setattr__(self, "values", values)

    @classmethod
    def uniform(cls, size: int) -> TruthGrid:
        if size < 2:
            raise FuzzyError("a truth grid needs at least the values 0 and 1")
        return cls(tuple(i / (size - 1) for i in range(size)))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


CRISP = TruthGrid((0.0, 1.0))


@dataclass(frozen=True)
class CayleyTable:
    connective: str
    grid: TruthGrid
    values: np.ndarray = field(compare=False)

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return (
            self.connective == other.connective
            and self.grid == other.grid
            and np.array_equal(self.values, other.values)
        )

    def corners(self) -> np.ndarray:
        return self.values[np.ix_([0, -1], [0, -1])]


def cayley_table(
    connective: str | type,
    grid: TruthGrid = CRISP,
    impl: Implication | str = DEFAULT_IMPLICATION,
) -> CayleyTable:
    """Value of ``p <op> q`` for ``p`` down the rows and ``q`` across."""
    if isinstance(connective, str):
        try:
            node = CONNECTIVES[connective.lower()]
        except KeyError:
            raise FuzzyError(
                f"unknown connective {connective!r}; choose from {sorted(CONNECTIVES)}"
            ) from None
    else:
        node = connective
    name = next(k for k, v in CONNECTIVES.items() if v is node)
    g = np.array(grid.values)
    p, q = np.meshgrid(g, g, indexing="ij")
    values = np.asarray(_evaluate(node(Var("p"), Var("q")), {"p": p, "q": q}, Implication(impl)))
    values.setflags(write=False)
    return CayleyTable(name, grid, values)


def truth_vector(expr: Expr, grid: TruthGrid, impl=DEFAULT_IMPLICATION) -> np.ndarray:
    """Values of a one-variable expression at each grid point."""
    names = variables(expr)
    if len(names) > 1:
        raise FuzzyError("truth vectors are for single-variable expressions")
    g = np.array(grid.values)
    env = {names[0]: g} if names else {}
    return np.broadcast_to(_evaluate(expr, env, Implication(impl)), g.shape).astype(float)


class Verdict(str, enum.Enum):
    VALID = "valid"
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    variables: tuple[str, ...]
    counterexamples: tuple[tuple[dict, float], ...]
    assignments: int


def classify_expr(
    expr: Expr,
    grid: TruthGrid,
    impl: Implication | str = DEFAULT_IMPLICATION,
) -> Classification:
    """Enumerate every grid assignment and sort the expression into
    valid / satisfiable / unsatisfiable.

    Counterexamples are all assignments scoring below 1, in enumeration
    order (first variable varies slowest).
    """
    names = variables(expr)
    if len(names) > MAX_VARIABLES or len(grid) > MAX_GRID:
        raise FuzzyError(
            f"enumeration limited to {MAX_VARIABLES} variables over at most "
            f"{MAX_GRID} grid values (got {len(names)} over {len(grid)})"
        )
    g = np.array(grid.values)
    axes = np.meshgrid(*([g] * len(names)), indexing="ij") if names else []
    env = {n: a.ravel() for n, a in zip(names, axes)}
    total = len(g) ** len(names)
    values = np.broadcast_to(_evaluate(expr, env, Implication(impl)), (total,))
    true = values >= 1.0 - ONE_TOL
    if true.all():
        verdict = Verdict.VALID
    elif true.any():
        verdict = Verdict.SATISFIABLE
    else:
        verdict = Verdict.UNSATISFIABLE
    combos = product(grid.values, repeat=len(names))
    counter = tuple(
        (dict(zip(names, combo)), float(v))
        for combo, v, ok in zip(combos, values, true)
        if not ok
    )
    return Classification(verdict, tuple(names), counter, total)


# -- max-min inference ------------------------------------------------------

def compose_maxmin(
    vec: Sequence[float], relation, side: str = "left"
) -> np.ndarray:
    """Max-min composition of a truth vector with a relation matrix.

    ``side="left"`` computes ``q_j = max_i min(p_i, R_ij)`` (forward, from
    the row variable to the column variable); ``side="right"`` computes
    ``p_i = max_j min(R_ij, q_j)`` (backward).
    """
    v = np.asarray(vec, dtype=float)
    r = np.asarray(relation, dtype=float)
    if v.ndim != 1 or r.ndim != 2:
        raise FuzzyError("need a vector and a two-dimensional relation")
    check_grades(v, "truth value")
    check_grades(r, "relation grade")
    if side == "left":
        if r.shape[0] != v.size:
            raise FuzzyError(f"vector of length {v.size} cannot left-compose with {r.shape}")
        return np.max(np.minimum(v[:, None], r), axis=0, initial=0.0)
    if side == "right":
        if r.shape[1] != v.size:
            raise FuzzyError(f"vector of length {v.size} cannot right-compose with {r.shape}")
        return np.max(np.minimum(r, v[None, :]), axis=1, initial=0.0)
    raise FuzzyError(f"side must be 'left' or 'right', not {side!r}")
