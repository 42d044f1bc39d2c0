"""Workspace documents: the ``.fsr`` JSON format.

A workspace bundles universes, fuzzy soft sets, soft sets, relations,
decision queries and the auxiliary tables used by the CLI. Parsing is
strict: unknown keys, dangling references, duplicate names and grades
outside [0, 1] are all reported together as ``(path, reason)`` pairs.

Top-level layout (every section but ``version`` is optional)::

    {
      "version": 1,
      "description": "...",
      "universes": {"houses": ["h1", "h2"]},
      "fuzzy_soft_sets": [{"name": "F1", "universe": "houses",
                           "parameters": {"cheap": {"h1": 1, "h2": 0}}}],
      "soft_sets": [{"name": "F", "universe": "cars",
                     "parameters": {"cheap": ["c1", "c2"]}}],
      "soft_relations": [{"name": "R", "rows": "M", "cols": "N",
                          "parameters": {"is father of": [["m1", "f1"]]}}],
      "relations": [{"name": "far", "rows": "P", "cols": "Q",
                     "cells": [[0.6, 0.45]], "errata": [...]}],
      "queries": [{"name": "q", "combiner": "min",
                   "criteria": [{"set": "F1", "parameter": "cheap"}],
                   "expected": {"winner": "h1", "scores": {...}, "errata": [...]}}],
      "payoff_tables": [{"name": "t", "states": [...], "actions": [...],
                         "payoffs": [[...]]}],
      "distributions": [{"name": "d", "universe": "persons",
                         "probability": {...}, "possibility": {...}}],
      "expected_value": [{"name": "jobs", "options": [{"label": "a",
                          "probability": 0.6, "value": 0.3}], "expected": {...}}],
      "membership_functions": [{"name": "m", "kind": "trapezoid",
                                "breakpoints": [10, 12, 12, 14],
                                "points": [9, 10, 11], "expected": [0, 0, 0.5]}]
    }
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import FuzzyRelationMatrix, FuzzySoftSet
from .core import FuzzyError, FuzzySet, MembershipFunctionSpec, MembershipKind, TNorm, Universe
from .decision import Criterion, DecisionQuery, PayoffTable
from .soft import CrispSoftRelation, SoftSet, build_relation_matrix

SCHEMA_VERSION = 1
SUFFIX = ".fsr"


class WorkspaceError(FuzzyError):
    """Raised with every problem found in a document."""

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = list(errors)
        lines = [f"{path}: {reason}" if path else reason for path, reason in self.errors]
        super().__init__("\n".join(lines))


@dataclass(frozen=True)
class Relation:
    name: str
    matrix: FuzzyRelationMatrix
    errata: tuple[dict, ...] = ()


@dataclass(frozen=True)
class Query:
    query: DecisionQuery
    expected: dict | None = None

    @property
    def name(self) -> str:
        return self.query.name


@dataclass(frozen=True)
class Distribution:
    name: str
    universe: Universe
    probability: dict | None = None
    possibility: dict | None = None

    def aligned(self, which: str) -> list[float] | None:
        values = getattr(self, which)
        return None if values is None else [values[l] for l in self.universe]


@dataclass(frozen=True)
class ExpectedValueProblem:
    name: str
    options: tuple[tuple[str, float, float], ...]
    expected: dict | None = None


@dataclass(frozen=True)
class MembershipEntry:
    name: str
    spec: MembershipFunctionSpec
    points: tuple[float, ...]
    expected: tuple[float, ...] | None = None


@dataclass
class WorkspaceDocument:
    version: int = SCHEMA_VERSION
    description: str = ""
    universes: dict[str, Universe] = field(default_factory=dict)
    fuzzy_soft_sets: dict[str, FuzzySoftSet] = field(default_factory=dict)
    soft_sets: dict[str, SoftSet] = field(default_factory=dict)
    soft_relations: dict[str, CrispSoftRelation] = field(default_factory=dict)
    relations: dict[str, Relation] = field(default_factory=dict)
    queries: dict[str, Query] = field(default_factory=dict)
    payoff_tables: dict[str, PayoffTable] = field(default_factory=dict)
    distributions: dict[str, Distribution] = field(default_factory=dict)
    expected_value: dict[str, ExpectedValueProblem] = field(default_factory=dict)
    membership_functions: dict[str, MembershipEntry] = field(default_factory=dict)

    def universe_name(self, universe: Universe) -> str:
        for name, u in self.universes.items():
            if u == universe:
                return name
        raise FuzzyError(f"universe {universe!r} is not registered in this workspace")

    def _pick(self, section: str, name: str | None, what: str):
        items = getattr(self, section)
        if name is None:
            if len(items) == 1:
                return next(iter(items.values()))
            if not items:
                raise FuzzyError(f"workspace has no {what}")
            raise FuzzyError(f"workspace has several {what}s; choose one of {sorted(items)}")
        try:
            return items[name]
        except KeyError:
            raise FuzzyError(f"no {what} named {name!r}; have {sorted(items)}") from None

    def query(self, name: str | None = None) -> Query:
        return self._pick("queries", name, "query")

    def relation(self, name: str | None = None) -> Relation:
        return self._pick("relations", name, "relation")

    def payoff_table(self, name: str | None = None) -> PayoffTable:
        return self._pick("payoff_tables", name, "payoff table")


# -- parsing ----------------------------------------------------------------

class _DuplicateKey(ValueError):
    pass


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise _DuplicateKey(k)
        out[k] = v
    return out


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


class _Parser:
    def __init__(self):
        self.errors: list[tuple[str, str]] = []
        self.doc = WorkspaceDocument()
        # declared fuzzy soft sets that failed to parse; references to them
        # are skipped so one bad grade yields one error
        self.rejected: set[str] = set()

    def error(self, path: str, reason: str) -> None:
        self.errors.append((path, reason))

    # small typed readers; each returns None after recording an error

    def obj(self, value, path, required=(), optional=()):
        if not isinstance(value, dict):
            self.error(path, "expected an object")
            return None
        for key in value:
            if key not in required and key not in optional:
                self.error(f"{path}.{key}", "unknown key")
        missing = [k for k in required if k not in value]
        for key in missing:
            self.error(path, f"missing key {key!r}")
        return None if missing else value

    def string(self, value, path):
        if not isinstance(value, str) or not value:
            self.error(path, "expected a nonempty string")
            return None
        return value

    def number(self, value, path):
        if not _is_number(value):
            self.error(path, "expected a finite number")
            return None
        return float(value)

    def grade(self, value, path):
        v = self.number(value, path)
        if v is not None and not 0.0 <= v <= 1.0:
            self.error(path, f"grade {v:g} outside [0, 1]")
            return None
        return v

    def array(self, value, path):
        if not isinstance(value, list):
            self.error(path, "expected an array")
            return None
        return value

    def named_list(self, raw, section):
        """Yield (path, item, name) for entries of a list section, skipping duplicates."""
        items = self.array(raw, section)
        if items is None:
            return
        seen = set()
        for k, item in enumerate(items):
            path = f"{section}[{k}]"
            name = item.get("name") if isinstance(item, dict) else None
            if isinstance(name, str) and name:
                path = f"{section}[{name!r}]"
                if name in seen:
                    self.error(path, "duplicate name")
                    continue
                seen.add(name)
            yield path, item, name

    def universe_ref(self, value, path):
        name = self.string(value, path)
        if name is None:
            return None
        if name not in self.doc.universes:
            self.error(path, f"unknown universe {name!r}")
            return None
        return self.doc.universes[name]

    def label_ref(self, value, universe, path):
        label = self.string(value, path)
        if label is not None and label not in universe:
            self.error(path, f"{label!r} is not an element of the universe")
            return None
        return label

    def grade_map(self, raw, universe, path, complete=True):
        if not isinstance(raw, dict):
            self.error(path, "expected an object mapping elements to grades")
            return None
        ok = True
        out = {}
        for label, value in raw.items():
            if label not in universe:
                self.error(f"{path}[{label!r}]", f"{label!r} is not an element of the universe")
                ok = False
                continue
            g = self.grade(value, f"{path}[{label!r}]")
            ok &= g is not None
            out[label] = g
        if complete:
            for label in universe:
                if label not in raw:
                    self.error(path, f"no grade for element {label!r}")
                    ok = False
        return out if ok else None

    # sections

    def parse(self, data) -> WorkspaceDocument:
        top = self.obj(
            data,
            "$",
            required=("version",),
            optional=(
                "description", "universes", "fuzzy_soft_sets", "soft_sets",
                "soft_relations", "relations", "queries", "payoff_tables",
                "distributions", "expected_value", "membership_functions",
            ),
        )
        if top is None:
            return self.doc
        if top["version"] != SCHEMA_VERSION or isinstance(top["version"], bool):
            self.error("$.version", f"unsupported schema version {top['version']!r}")
        if "description" in top:
            self.doc.description = self.string(top["description"], "$.description") or ""
        self.universes(top.get("universes", {}))
        for section in (
            "fuzzy_soft_sets", "soft_sets", "soft_relations", "relations", "queries",
            "payoff_tables", "distributions", "expected_value", "membership_functions",
        ):
            if section in top:
                getattr(self, section)(top[section])
        return self.doc

    def universes(self, raw):
        if not isinstance(raw, dict):
            self.error("universes", "expected an object of name -> element list")
            return
        for name, labels in raw.items():
            path = f"universes[{name!r}]"
            labels = self.array(labels, path)
            if labels is None:
                continue
            if not all(isinstance(l, str) and l for l in labels):
                self.error(path, "elements must be nonempty strings")
                continue
            try:
                self.doc.universes[name] = Universe(labels)
            except FuzzyError as exc:
                self.error(path, str(exc))

    def fuzzy_soft_sets(self, raw):
        for path, item, name in self.named_list(raw, "fuzzy_soft_sets"):
            item = self.obj(item, path, ("name", "universe", "parameters"))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            self.rejected.add(name)
            universe = self.universe_ref(item["universe"], f"{path}.universe")
            params = item["parameters"]
            if universe is None:
                continue
            if not isinstance(params, dict) or not params:
                self.error(f"{path}.parameters", "expected a nonempty object")
                continue
            members = {}
            for param, grades in params.items():
                g = self.grade_map(grades, universe, f"{path}.parameters[{param!r}]")
                if g is not None:
                    members[param] = FuzzySet.from_mapping(universe, g)
            if len(members) == len(params):
                self.doc.fuzzy_soft_sets[name] = FuzzySoftSet(name, universe, members)
                self.rejected.discard(name)

    def soft_sets(self, raw):
        for path, item, name in self.named_list(raw, "soft_sets"):
            item = self.obj(item, path, ("name", "universe", "parameters"))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            universe = self.universe_ref(item["universe"], f"{path}.universe")
            params = item["parameters"]
            if universe is None:
                continue
            if not isinstance(params, dict):
                self.error(f"{path}.parameters", "expected an object")
                continue
            approx = {}
            for param, labels in params.items():
                ppath = f"{path}.parameters[{param!r}]"
                labels = self.array(labels, ppath)
                if labels is None:
                    continue
                refs = [self.label_ref(l, universe, f"{ppath}[{k}]") for k, l in enumerate(labels)]
                if None not in refs:
                    approx[param] = frozenset(refs)
            if len(approx) == len(params):
                self.doc.soft_sets[name] = SoftSet(universe, approx, name)

    def soft_relations(self, raw):
        for path, item, name in self.named_list(raw, "soft_relations"):
            item = self.obj(item, path, ("name", "rows", "cols", "parameters"))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            rows = self.universe_ref(item["rows"], f"{path}.rows")
            cols = self.universe_ref(item["cols"], f"{path}.cols")
            params = item["parameters"]
            if rows is None or cols is None:
                continue
            if not isinstance(params, dict) or not params:
                self.error(f"{path}.parameters", "expected a nonempty object")
                continue
            matrices = {}
            for param, pairs in params.items():
                ppath = f"{path}.parameters[{param!r}]"
                pairs = self.array(pairs, ppath)
                if pairs is None:
                    continue
                good = []
                for k, pair in enumerate(pairs):
                    if not (isinstance(pair, list) and len(pair) == 2):
                        self.error(f"{ppath}[{k}]", "expected a [row, col] pair")
                        continue
                    r = self.label_ref(pair[0], rows, f"{ppath}[{k}][0]")
                    c = self.label_ref(pair[1], cols, f"{ppath}[{k}][1]")
                    if r is not None and c is not None:
                        good.append((r, c))
                if len(good) == len(pairs):
                    matrices[param] = build_relation_matrix(good, rows, cols)
            if len(matrices) == len(params):
                self.doc.soft_relations[name] = CrispSoftRelation(name, matrices)

    def errata_list(self, raw, path, keys):
        items = self.array(raw, path)
        if items is None:
            return None
        out = []
        for k, e in enumerate(items):
            epath = f"{path}[{k}]"
            e = self.obj(e, epath, keys + ("printed", "recomputed"), ("note",))
            if e is None:
                return None
            for key in ("printed", "recomputed"):
                if self.number(e[key], f"{epath}.{key}") is None:
                    return None
            out.append(dict(e))
        return tuple(out)

    def relations(self, raw):
        for path, item, name in self.named_list(raw, "relations"):
            item = self.obj(item, path, ("name", "rows", "cols", "cells"), ("errata",))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            rows = self.universe_ref(item["rows"], f"{path}.rows")
            cols = self.universe_ref(item["cols"], f"{path}.cols")
            if rows is None or cols is None:
                continue
            cells = self.array(item["cells"], f"{path}.cells")
            if cells is None:
                continue
            if len(cells) != len(rows) or not all(
                isinstance(r, list) and len(r) == len(cols) for r in cells
            ):
                self.error(f"{path}.cells", f"expected a {len(rows)}x{len(cols)} matrix")
                continue
            grid = [
                [self.grade(v, f"{path}.cells[{rows.labels[i]!r}][{cols.labels[j]!r}]")
                 for j, v in enumerate(row)]
                for i, row in enumerate(cells)
            ]
            if any(v is None for row in grid for v in row):
                continue
            errata = ()
            if "errata" in item:
                errata = self.errata_list(item["errata"], f"{path}.errata", ("row", "col"))
                if errata is None:
                    continue
                for k, e in enumerate(errata):
                    self.label_ref(e["row"], rows, f"{path}.errata[{k}].row")
                    self.label_ref(e["col"], cols, f"{path}.errata[{k}].col")
            self.doc.relations[name] = Relation(name, FuzzyRelationMatrix(rows, cols, grid), errata)

    def queries(self, raw):
        for path, item, name in self.named_list(raw, "queries"):
            item = self.obj(item, path, ("name", "criteria", "combiner"), ("expected",))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            combiner = item["combiner"]
            if combiner not in [t.value for t in TNorm]:
                self.error(f"{path}.combiner", f"expected one of {[t.value for t in TNorm]}")
                continue
            crits = self.array(item["criteria"], f"{path}.criteria")
            if not crits:
                if crits is not None:
                    self.error(f"{path}.criteria", "need at least one criterion")
                continue
            criteria = []
            universe = None
            for k, c in enumerate(crits):
                cpath = f"{path}.criteria[{k}]"
                c = self.obj(c, cpath, ("set", "parameter"))
                if c is None:
                    continue
                set_name = self.string(c["set"], f"{cpath}.set")
                param = self.string(c["parameter"], f"{cpath}.parameter")
                if set_name is None or param is None:
                    continue
                fss = self.doc.fuzzy_soft_sets.get(set_name)
                if fss is None:
                    if set_name not in self.rejected:
                        self.error(f"{cpath}.set", f"unknown fuzzy soft set {set_name!r}")
                    continue
                if param not in fss:
                    self.error(f"{cpath}.parameter", f"{set_name!r} has no parameter {param!r}")
                    continue
                if universe is None:
                    universe = fss.universe
                elif not universe.same_elements(fss.universe):
                    self.error(cpath, f"{set_name!r} is over a different universe")
                    continue
                criteria.append(Criterion(set_name, param))
            if len(criteria) != len(crits):
                continue
            expected = None
            if "expected" in item:
                expected = self.query_expected(item["expected"], universe, f"{path}.expected")
                if expected is None:
                    continue
            self.doc.queries[name] = Query(DecisionQuery(tuple(criteria), TNorm(combiner), name), expected)

    def query_expected(self, raw, universe, path):
        e = self.obj(raw, path, (), ("winner", "scores", "errata", "note"))
        if e is None:
            return None
        out = {}
        if "winner" in e:
            w = self.label_ref(e["winner"], universe, f"{path}.winner")
            if w is None:
                return None
            out["winner"] = w
        if "scores" in e:
            scores = self.grade_map(e["scores"], universe, f"{path}.scores", complete=False)
            if scores is None:
                return None
            out["scores"] = scores
        if "errata" in e:
            errata = self.errata_list(e["errata"], f"{path}.errata", ("element",))
            if errata is None:
                return None
            for k, item in enumerate(errata):
                if self.label_ref(item["element"], universe, f"{path}.errata[{k}].element") is None:
                    return None
            out["errata"] = list(errata)
        if "note" in e:
            out["note"] = self.string(e["note"], f"{path}.note")
        return out

    def payoff_tables(self, raw):
        for path, item, name in self.named_list(raw, "payoff_tables"):
            item = self.obj(item, path, ("name", "states", "actions", "payoffs"))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            states = self.array(item["states"], f"{path}.states")
            actions = self.array(item["actions"], f"{path}.actions")
            payoffs = self.array(item["payoffs"], f"{path}.payoffs")
            if states is None or actions is None or payoffs is None:
                continue
            labels = [self.string(s, f"{path}.states[{k}]") for k, s in enumerate(states)]
            labels += [self.string(a, f"{path}.actions[{k}]") for k, a in enumerate(actions)]
            if None in labels:
                continue
            if len(set(states)) != len(states) or len(set(actions)) != len(actions):
                self.error(path, "state and action labels must be distinct")
                continue
            if len(payoffs) != len(states) or not all(
                isinstance(r, list) and len(r) == len(actions) for r in payoffs
            ):
                self.error(f"{path}.payoffs", f"expected a {len(states)}x{len(actions)} matrix")
                continue
            values = [[self.number(v, f"{path}.payoffs[{i}][{j}]") for j, v in enumerate(r)]
                      for i, r in enumerate(payoffs)]
            if any(v is None for r in values for v in r):
                continue
            self.doc.payoff_tables[name] = PayoffTable(
                tuple(states), tuple(actions), np.array(values).reshape(len(states), len(actions)), name
            )

    def distributions(self, raw):
        for path, item, name in self.named_list(raw, "distributions"):
            item = self.obj(item, path, ("name", "universe"), ("probability", "possibility"))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            universe = self.universe_ref(item["universe"], f"{path}.universe")
            if universe is None:
                continue
            parts = {}
            ok = True
            for key in ("probability", "possibility"):
                if key not in item:
                    continue
                if key == "probability":
                    # range problems are diagnostics for `validate`, not parse errors
                    values = self.number_map(item[key], universe, f"{path}.{key}")
                else:
                    values = self.grade_map(item[key], universe, f"{path}.{key}")
                ok &= values is not None
                parts[key] = values
            if ok:
                self.doc.distributions[name] = Distribution(name, universe, **parts)

    def number_map(self, raw, universe, path):
        if not isinstance(raw, dict):
            self.error(path, "expected an object mapping elements to numbers")
            return None
        out = {}
        for label in universe:
            if label not in raw:
                self.error(path, f"no value for element {label!r}")
        for label, v in raw.items():
            if label not in universe:
                self.error(f"{path}[{label!r}]", f"{label!r} is not an element of the universe")
            else:
                out[label] = self.number(v, f"{path}[{label!r}]")
        if len(out) != len(universe) or None in out.values():
            return None
        return out

    def expected_value(self, raw):
        for path, item, name in self.named_list(raw, "expected_value"):
            item = self.obj(item, path, ("name", "options"), ("expected",))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            opts = self.array(item["options"], f"{path}.options")
            if not opts:
                if opts is not None:
                    self.error(f"{path}.options", "need at least one option")
                continue
            options = []
            for k, o in enumerate(opts):
                opath = f"{path}.options[{k}]"
                o = self.obj(o, opath, ("label", "probability", "value"))
                if o is None:
                    continue
                label = self.string(o["label"], f"{opath}.label")
                p = self.number(o["probability"], f"{opath}.probability")
                v = self.number(o["value"], f"{opath}.value")
                if p is not None and not 0.0 <= p <= 1.0:
                    self.error(f"{opath}.probability", f"probability {p:g} outside [0, 1]")
                    p = None
                if None not in (label, p, v):
                    options.append((label, p, v))
            if len(options) != len(opts):
                continue
            expected = None
            if "expected" in item:
                e = self.obj(item["expected"], f"{path}.expected", (), ("winner", "values"))
                if e is None:
                    continue
                expected = dict(e)
            self.doc.expected_value[name] = ExpectedValueProblem(name, tuple(options), expected)

    def membership_functions(self, raw):
        for path, item, name in self.named_list(raw, "membership_functions"):
            item = self.obj(item, path, ("name", "kind", "breakpoints", "points"), ("expected",))
            if item is None or self.string(name, f"{path}.name") is None:
                continue
            if item["kind"] not in [k.value for k in MembershipKind]:
                self.error(f"{path}.kind", f"expected one of {[k.value for k in MembershipKind]}")
                continue
            bps = self.array(item["breakpoints"], f"{path}.breakpoints")
            pts = self.array(item["points"], f"{path}.points")
            if bps is None or pts is None:
                continue
            if len(bps) != 4:
                self.error(f"{path}.breakpoints", "expected four breakpoints [a, b, c, d]")
                continue
            bps = [self.number(v, f"{path}.breakpoints[{k}]") for k, v in enumerate(bps)]
            pts = [self.number(v, f"{path}.points[{k}]") for k, v in enumerate(pts)]
            if None in bps or None in pts:
                continue
            try:
                spec = MembershipFunctionSpec(MembershipKind(item["kind"]), *bps)
            except FuzzyError as exc:
                self.error(f"{path}.breakpoints", str(exc))
                continue
            if len(set(pts)) != len(pts):
                self.error(f"{path}.points", "points must be distinct")
                continue
            expected = None
            if "expected" in item:
                exp = self.array(item["expected"], f"{path}.expected")
                if exp is None or len(exp) != len(pts):
                    self.error(f"{path}.expected", "expected one grade per point")
                    continue
                exp = [self.grade(v, f"{path}.expected[{k}]") for k, v in enumerate(exp)]
                if None in exp:
                    continue
                expected = tuple(exp)
            self.doc.membership_functions[name] = MembershipEntry(name, spec, tuple(pts), expected)


def parse_workspace(text: str) -> WorkspaceDocument:
    """Parse and validate a workspace; raises :class:`WorkspaceError`."""
    try:
        data = json.loads(text, object_pairs_hook=_no_duplicates)
    except _DuplicateKey as exc:
        raise WorkspaceError([("", f"duplicate key {exc.args[0]!r}")]) from None
    except json.JSONDecodeError as exc:
        raise WorkspaceError([("", f"malformed JSON: {exc}")]) from None
    parser = _Parser()
    doc = parser.parse(data)
    if parser.errors:
        raise WorkspaceError(parser.errors)
    return doc


def load_workspace(path: str | Path) -> WorkspaceDocument:
    return parse_workspace(Path(path).read_text(encoding="utf-8"))


# -- serialization ----------------------------------------------------------

def _num(x: float):
    x = float(x)
    return int(x) if x.is_integer() else x


def to_dict(doc: WorkspaceDocument) -> dict[str, Any]:
    out: dict[str, Any] = {"version": doc.version}
    if doc.description:
        out["description"] = doc.description
    if doc.universes:
        out["universes"] = {n: list(u.labels) for n, u in doc.universes.items()}
    if doc.fuzzy_soft_sets:
        out["fuzzy_soft_sets"] = [
            {
                "name": name,
                "universe": doc.universe_name(fss.universe),
                "parameters": {
                    p: {l: _num(g) for l, g in fs.items()} for p, fs in fss.members.items()
                },
            }
            for name, fss in doc.fuzzy_soft_sets.items()
        ]
    if doc.soft_sets:
        out["soft_sets"] = [
            {
                "name": name,
                "universe": doc.universe_name(ss.universe),
                "parameters": {p: ss.universe.order(a) for p, a in ss.approximations.items()},
            }
            for name, ss in doc.soft_sets.items()
        ]
    if doc.soft_relations:
        entries = []
        for name, rel in doc.soft_relations.items():
            first = next(iter(rel.matrices.values()))
            entries.append({
                "name": name,
                "rows": doc.universe_name(first.rows),
                "cols": doc.universe_name(first.cols),
                "parameters": {p: [list(pr) for pr in m.pairs()] for p, m in rel.matrices.items()},
            })
        out["soft_relations"] = entries
    if doc.relations:
        entries = []
        for name, rel in doc.relations.items():
            entry = {
                "name": name,
                "rows": doc.universe_name(rel.matrix.rows),
                "cols": doc.universe_name(rel.matrix.cols),
                "cells": [[_num(v) for v in row] for row in rel.matrix.cells],
            }
            if rel.errata:
                entry["errata"] = [dict(e) for e in rel.errata]
            entries.append(entry)
        out["relations"] = entries
    if doc.queries:
        entries = []
        for name, q in doc.queries.items():
            entry = {
                "name": name,
                "combiner": q.query.combiner.value,
                "criteria": [{"set": c.set_name, "parameter": c.parameter} for c in q.query.criteria],
            }
            if q.expected is not None:
                entry["expected"] = q.expected
            entries.append(entry)
        out["queries"] = entries
    if doc.payoff_tables:
        out["payoff_tables"] = [
            {
                "name": name,
                "states": list(t.states),
                "actions": list(t.actions),
                "payoffs": [[_num(v) for v in row] for row in t.payoffs],
            }
            for name, t in doc.payoff_tables.items()
        ]
    if doc.distributions:
        entries = []
        for name, d in doc.distributions.items():
            entry = {"name": name, "universe": doc.universe_name(d.universe)}
            for key in ("probability", "possibility"):
                values = getattr(d, key)
                if values is not None:
                    entry[key] = {l: _num(values[l]) for l in d.universe}
            entries.append(entry)
        out["distributions"] = entries
    if doc.expected_value:
        entries = []
        for name, ev in doc.expected_value.items():
            entry = {
                "name": name,
                "options": [
                    {"label": l, "probability": _num(p), "value": _num(v)} for l, p, v in ev.options
                ],
            }
            if ev.expected is not None:
                entry["expected"] = ev.expected
            entries.append(entry)
        out["expected_value"] = entries
    if doc.membership_functions:
        entries = []
        for name, m in doc.membership_functions.items():
            entry = {
                "name": name,
                "kind": m.spec.kind.value,
                "breakpoints": [_num(v) for v in m.spec.breakpoints],
                "points": [_num(v) for v in m.points],
            }
            if m.expected is not None:
                entry["expected"] = [_num(v) for v in m.expected]
            entries.append(entry)
        out["membership_functions"] = entries
    return out


def serialize_workspace(doc: WorkspaceDocument) -> str:
    return json.dumps(to_dict(doc), indent=2, ensure_ascii=False) + "\n"
