"""Command-line interface.

Exit status: 0 on success, 1 for input or validation problems, 2 when an
internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .algebra import FuzzyRelationMatrix, check_fuzzy_properties, pairwise_relation
from .core import FuzzyError, InvariantViolation, TNorm, discretize
from .decision import (
    decide,
    expected_value,
    possibility_dominance,
    regret_table,
    validate_probability,
)
from .logic import (
    CONNECTIVES,
    DEFAULT_IMPLICATION,
    Implication,
    TruthGrid,
    cayley_table,
    classify_expr,
    compose_maxmin,
    parse_expr,
)
from .soft import format_param
from .uncertainty import average_uncertainty, row_uncertainties
from .workspace import WorkspaceDocument, load_workspace

COUNTEREXAMPLE_CAP = 32
SCORE_TOL = 0.01
RECOMPUTED_TOL = 1e-9


class CLIError(FuzzyError):
    pass


def fixture_dir() -> Path:
    return Path(str(resources.files("fuzzysoft") / "fixtures"))


def resolve_path(name: str) -> Path:
    """A path as given, or else a bundled fixture of that name."""
    path = Path(name)
    if path.exists():
        return path
    bundled = fixture_dir() / path.name
    if bundled.exists():
        return bundled
    raise CLIError(f"no such file: {name}")


def load(name: str) -> WorkspaceDocument:
    return load_workspace(resolve_path(name))


def fmt(x: float) -> str:
    return f"{x:.4f}"


def emit_table(out, header: Sequence[str], rows, sep: str) -> None:
    print(sep.join(header), file=out)
    for row in rows:
        print(sep.join(fmt(v) if isinstance(v, float) else str(v) for v in row), file=out)


def emit_json(out, payload) -> None:
    json.dump(payload, out, indent=2, ensure_ascii=False)
    out.write("\n")


def slug(name: str) -> str:
    """File-system friendly form of a workspace entry name."""
    return re.sub(r"[^A-Za-z0-9]+", "-", name).strip("-").lower() or "unnamed"


def parse_vector(text: str) -> list[float]:
    try:
        return [float(v) for v in text.replace(" ", "").split(",") if v != ""]
    except ValueError:
        raise CLIError(f"cannot parse vector {text!r}") from None


def parse_matrix(text: str) -> list[list[float]]:
    """Rows separated by ';', entries by ','."""
    rows = [parse_vector(r) for r in text.split(";") if r.strip()]
    if not rows or len({len(r) for r in rows}) != 1:
        raise CLIError(f"matrix {text!r} must have rows of equal length")
    return rows


def parse_grid(text: str | None) -> TruthGrid:
    if text is None:
        return TruthGrid((0.0, 0.5, 1.0))
    if text.isdigit():
        return TruthGrid.uniform(int(text))
    return TruthGrid(tuple(parse_vector(text)))


# -- subcommands ------------------------------------------------------------

def cmd_decide(args, out) -> int:
    doc = load(args.file)
    query = doc.query(args.query).query
    if args.combiner:
        query = query.with_combiner(args.combiner)
    result = decide(doc.fuzzy_soft_sets, query)
    if args.figure:
        from .plotting import plot_scores

        plot_scores(result.scores, args.figure, title=query.name, winner=result.winner[0])
    if args.json:
        emit_json(out, result.as_dict())
        return 0
    print(f"query: {query.name} (combiner: {query.combiner.value})", file=out)
    print("criteria: " + ", ".join(map(str, query.criteria)), file=out)
    emit_table(out, ["element", "score"], result.scores.items(), args.sep)
    print("ranking: " + ", ".join(f"{l} ({fmt(s)})" for l, s in result.ranking), file=out)
    label, score = result.winner
    print(f"winner: {label} {fmt(score)}", file=out)
    return 0


def _relation_payload(m: FuzzyRelationMatrix) -> dict:
    return {
        "rows": [str(r) for r in m.rows],
        "cols": [str(c) for c in m.cols],
        "cells": m.cells.tolist(),
    }


def _emit_matrix(out, m: FuzzyRelationMatrix, corner: str, sep: str) -> None:
    emit_table(
        out,
        [corner] + [format_param(c) for c in m.cols],
        ([format_param(r)] + [float(v) for v in row] for r, row in zip(m.rows, m.cells)),
        sep,
    )


def cmd_relate(args, out) -> int:
    if len(args.set) != 2 or len(args.param) != 2:
        raise CLIError("relate needs exactly two --set/--param pairs")
    doc = load(args.file)
    sets = []
    for name in args.set:
        try:
            sets.append(doc.fuzzy_soft_sets[name])
        except KeyError:
            raise CLIError(f"unknown fuzzy soft set {name!r}") from None
    (f, g), (e_i, e_j) = sets, args.param
    m = pairwise_relation(f, e_i, g, e_j)
    title = f"R({e_i}, {e_j})"
    if args.figure:
        from .plotting import plot_matrix

        plot_matrix(m.cells, m.rows.labels, m.cols.labels, args.figure, title=title)
    if args.json:
        emit_json(out, {"relation": title, **_relation_payload(m)})
    else:
        _emit_matrix(out, m, title, args.sep)
    return 0


def cmd_uncertainty(args, out) -> int:
    doc = load(args.file)
    rel = doc.relation(args.relation)
    rows = row_uncertainties(rel.matrix)
    g = average_uncertainty(rel.matrix)
    if args.json:
        emit_json(out, {
            "relation": rel.name,
            "rows": [{"element": e, "card": c, "V": v} for e, c, v in rows],
            "G": g,
        })
        return 0
    print(f"relation: {rel.name}", file=out)
    emit_table(out, ["element", "card", "V"], rows, args.sep)
    print(f"G: {fmt(g)}", file=out)
    return 0


def cmd_infer(args, out) -> int:
    if (args.matrix is None) == (args.relation is None):
        raise CLIError("give exactly one of --matrix or --relation")
    if args.relation is not None:
        if args.file is None:
            raise CLIError("--relation needs a workspace file")
        matrix = load(args.file).relation(args.relation).matrix.cells
    else:
        matrix = parse_matrix(args.matrix)
    vec = parse_vector(args.vector)
    result = compose_maxmin(vec, matrix, side=args.side)
    if args.json:
        emit_json(out, {"side": args.side, "vector": vec, "result": result.tolist()})
    else:
        print(" ".join(fmt(v) for v in result), file=out)
    return 0


def cmd_regret(args, out) -> int:
    doc = load(args.file)
    table = doc.payoff_table(args.table)
    regrets = regret_table(table)
    if args.json:
        emit_json(out, {
            "table": table.name,
            "states": list(table.states),
            "actions": list(table.actions),
            "row_max": table.payoffs.max(axis=1).tolist() if table.payoffs.size else [],
            "regret": regrets.payoffs.tolist(),
        })
        return 0
    print(f"regret table for {table.name}", file=out)
    emit_table(
        out,
        ["state"] + list(table.actions),
        ([s] + [float(v) for v in row] for s, row in zip(table.states, regrets.payoffs)),
        args.sep,
    )
    return 0


def run_validation(doc: WorkspaceDocument) -> list[tuple[str, bool, str]]:
    """Every diagnostic as ``(name, ok, detail)``."""
    checks = []
    for name, d in doc.distributions.items():
        prob, poss = d.aligned("probability"), d.aligned("possibility")
        if prob is not None:
            pc = validate_probability(prob, list(d.universe))
            detail = f"sum {pc.total:.6g}" if pc.valid else "; ".join(pc.violations)
            checks.append((f"{name}: probability", pc.valid, detail))
        if prob is not None and poss is not None:
            bad = possibility_dominance(prob, poss)
            detail = "no violations" if not bad else "possibility below probability at " + ", ".join(
                d.universe.labels[i] for i in bad
            )
            checks.append((f"{name}: possibility dominance", not bad, detail))
    for name, q in doc.queries.items():
        result = decide(doc.fuzzy_soft_sets, q.query)
        exp = q.expected or {}
        if "winner" in exp:
            ok = result.winner[0] == exp["winner"]
            checks.append((f"{name}: winner", ok, f"{result.winner[0]} (expected {exp['winner']})"))
        errata = {e["element"]: e for e in exp.get("errata", [])}
        if "scores" in exp:
            bad = []
            for label, printed in exp["scores"].items():
                got = result.scores[label]
                if label in errata:
                    if abs(got - errata[label]["recomputed"]) > RECOMPUTED_TOL:
                        bad.append(f"{label}: {got:.6g} != recomputed {errata[label]['recomputed']:g}")
                elif abs(got - printed) > SCORE_TOL:
                    bad.append(f"{label}: {got:.4f} vs printed {printed:g}")
            detail = "; ".join(bad) or f"{len(exp['scores'])} scores within {SCORE_TOL}"
            if errata:
                detail += f" ({len(errata)} erratum cell(s) checked against recomputed value)"
            checks.append((f"{name}: scores", not bad, detail))
    for name, rel in doc.relations.items():
        m = rel.matrix
        if m.square:
            p = check_fuzzy_properties(m)
            checks.append((
                f"{name}: properties", True,
                f"reflexive={p.reflexive} symmetric={p.symmetric} min_transitive={p.min_transitive}",
            ))
    for name, ev in doc.expected_value.items():
        res = expected_value([(p, v) for _, p, v in ev.options])
        winner = ev.options[res.winner][0]
        want = (ev.expected or {}).get("winner")
        ok = want is None or want == winner
        values = ", ".join(f"{l}={fmt(x)}" for (l, _, _), x in zip(ev.options, res.values))
        checks.append((f"{name}: expected value", ok, f"{values}; winner {winner}"))
    for name, mf in doc.membership_functions.items():
        fs = discretize(mf.spec, mf.points)
        ok = mf.expected is None or bool(np.allclose(fs.grades, mf.expected, rtol=0, atol=1e-9))
        checks.append((f"{name}: discretization", ok, " ".join(f"{g:g}" for g in fs.grades)))
    return checks


def cmd_validate(args, out) -> int:
    doc = load(args.file)
    checks = run_validation(doc)
    if args.json:
        emit_json(out, {
            "checks": [{"check": n, "ok": ok, "detail": d} for n, ok, d in checks],
            "ok": all(ok for _, ok, _ in checks),
        })
    else:
        print("workspace: parsed OK", file=out)
        for name, ok, detail in checks:
            print(f"{'OK' if ok else 'FAIL'}\t{name}\t{detail}", file=out)
    return 0 if all(ok for _, ok, _ in checks) else 1


def cmd_logic_table(args, out) -> int:
    grid = parse_grid(args.grid)
    table = cayley_table(args.connective, grid, args.implication)
    if args.figure:
        from .plotting import plot_matrix

        labels = [f"{v:g}" for v in grid]
        plot_matrix(table.values, labels, labels, args.figure, title=f"p {args.connective} q")
    if args.json:
        emit_json(out, {
            "connective": table.connective,
            "implication": Implication(args.implication).value,
            "grid": list(grid.values),
            "values": table.values.tolist(),
        })
        return 0
    print(args.sep.join([f"p\\q"] + [f"{v:g}" for v in grid]), file=out)
    for p, row in zip(grid, table.values):
        print(args.sep.join([f"{p:g}"] + [f"{v:g}" for v in row]), file=out)
    return 0


def cmd_logic_classify(args, out) -> int:
    expr = parse_expr(args.expr)
    grid = parse_grid(args.grid)
    res = classify_expr(expr, grid, args.implication)
    shown = res.counterexamples[:COUNTEREXAMPLE_CAP]
    if args.json:
        emit_json(out, {
            "expression": str(expr),
            "verdict": res.verdict.value,
            "assignments": res.assignments,
            "counterexample_count": len(res.counterexamples),
            "counterexamples": [{"assignment": a, "value": v} for a, v in shown],
        })
        return 0
    print(f"expression: {expr}", file=out)
    print(f"verdict: {res.verdict.value} ({res.assignments} assignments)", file=out)
    if res.counterexamples:
        print(f"counterexamples: {len(res.counterexamples)}", file=out)
        for a, v in shown:
            print("  " + " ".join(f"{k}={x:g}" for k, x in a.items()) + f" -> {v:g}", file=out)
        if len(res.counterexamples) > len(shown):
            print(f"  ... {len(res.counterexamples) - len(shown)} more", file=out)
    return 0


def cmd_report(args, out) -> int:
    """Write delimited tables and figures for everything in a workspace."""
    from .plotting import plot_matrix, plot_membership, plot_scores

    doc = load(args.file)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def write_table(stem, header, rows):
        path = outdir / f"{stem}.tsv"
        with path.open("w", encoding="utf-8") as fh:
            emit_table(fh, header, rows, "\t")
        written.append(path)

    for name, q in doc.queries.items():
        result = decide(doc.fuzzy_soft_sets, q.query)
        write_table(f"{slug(name)}_scores", ["rank", "element", "score"],
                    ((k + 1, l, s) for k, (l, s) in enumerate(result.ranking)))
        written.append(plot_scores(result.scores, outdir / f"{slug(name)}_scores.png",
                                   title=f"{name} ({q.query.combiner.value})",
                                   winner=result.winner[0]))
    for name, rel in doc.relations.items():
        m = rel.matrix
        write_table(slug(name), [""] + [str(c) for c in m.cols],
                    ([r] + [float(v) for v in row] for r, row in zip(m.rows, m.cells)))
        written.append(plot_matrix(m.cells, m.rows.labels, m.cols.labels,
                                   outdir / f"{slug(name)}.png", title=name))
    for name, mf in doc.membership_functions.items():
        fs = discretize(mf.spec, mf.points)
        write_table(f"{slug(name)}_membership", ["x", "grade"], fs.items())
        written.append(plot_membership(mf.spec, outdir / f"{slug(name)}_membership.png",
                                       points=mf.points, title=name))
    for name, t in doc.payoff_tables.items():
        r = regret_table(t)
        write_table(f"{slug(name)}_regret", ["state"] + list(t.actions),
                    ([s] + [float(v) for v in row] for s, row in zip(t.states, r.payoffs)))
    checks = run_validation(doc)
    if checks:
        write_table("diagnostics", ["check", "ok", "detail"],
                    ((n, "OK" if ok else "FAIL", d) for n, ok, d in checks))
    for path in written:
        print(path, file=out)
    return 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzysoft",
        description="Fuzzy soft set calculus and parameterized decision making.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--sep", default="\t", help="column delimiter for tables (default: tab)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="rank alternatives for a query")
    p.add_argument("file")
    p.add_argument("--query", help="query name (needed if the workspace has several)")
    p.add_argument("--combiner", choices=[t.value for t in TNorm])
    p.add_argument("--figure", help="write a bar chart of the scores to this path")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("relate", parents=[common], help="pairwise product relation matrix")
    p.add_argument("file")
    p.add_argument("--set", action="append", default=[], required=True)
    p.add_argument("--param", action="append", default=[], required=True)
    p.add_argument("--figure")
    p.set_defaults(func=cmd_relate)

    p = sub.add_parser("uncertainty", parents=[common], help="uncertainty measures of a relation")
    p.add_argument("file")
    p.add_argument("--relation")
    p.set_defaults(func=cmd_uncertainty)

    p = sub.add_parser("infer", parents=[common], help="max-min composition inference")
    p.add_argument("file", nargs="?")
    p.add_argument("--vector", required=True, help="comma separated truth values")
    p.add_argument("--matrix", help="inline matrix, rows split by ';' (e.g. '1,1;0,1')")
    p.add_argument("--relation", help="named relation from the workspace file")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("regret", parents=[common], help="opportunity loss table")
    p.add_argument("file")
    p.add_argument("--table")
    p.set_defaults(func=cmd_regret)

    p = sub.add_parser("validate", parents=[common], help="parse and run diagnostics")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("report", help="write tables and figures for a workspace")
    p.add_argument("file")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_report)

    logic = sub.add_parser("logic", help="truth tables and classification")
    lsub = logic.add_subparsers(dest="logic_command", required=True)
    impl_choices = [i.value for i in Implication]

    p = lsub.add_parser("table", parents=[common], help="Cayley table of a connective")
    p.add_argument("--connective", choices=sorted(CONNECTIVES), default="or")
    p.add_argument("--grid", help="grid values '0,0.5,1' or a point count (default 0,0.5,1)")
    p.add_argument("--implication", choices=impl_choices, default=DEFAULT_IMPLICATION.value)
    p.add_argument("--figure")
    p.set_defaults(func=cmd_logic_table)

    p = lsub.add_parser("classify", parents=[common], help="valid / satisfiable / unsatisfiable")
    p.add_argument("expr")
    p.add_argument("--grid")
    p.add_argument("--implication", choices=impl_choices, default=DEFAULT_IMPLICATION.value)
    p.set_defaults(func=cmd_logic_classify)
    return parser


def run_cli(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=err)
        return 2
    except (FuzzyError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run_cli())
