"""Figure rendering for reports.

Figures are built on ``matplotlib.figure.Figure`` directly (no pyplot
state), so rendering is safe from library code and from tests.
"""

from __future__ import annotations

import functools
import math
from pathlib import Path

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from .core import FuzzySet, MembershipFunctionSpec, eval_membership
from .soft import format_param

STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.labelsize": 9,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
}


def figure_size(width: float = 5.0, height: float | None = None) -> tuple[float, float]:
    golden = (math.sqrt(5) - 1.0) / 2.0
    return width, height if height is not None else width * golden


def styled(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        with matplotlib.rc_context(STYLE):
            return fn(*args, **kwargs)

    return wrapper


def new_figure(width: float = 5.0, height: float | None = None) -> Figure:
    fig = Figure(figsize=figure_size(width, height), facecolor="w", layout="constrained")
    fig.add_subplot()
    return fig


def save(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps repeated renders byte-identical
    metadata = {"Software": None} if path.suffix.lower() == ".png" else None
    fig.savefig(path, dpi=120, metadata=metadata)
    return path


@styled
def plot_scores(scores: FuzzySet, path, title: str = "", winner=None) -> Path:
    """Bar chart of alternative scores, winner highlighted."""
    fig = new_figure()
    ax = fig.axes[0]
    labels = [str(l) for l in scores.universe]
    colors = ["tab:orange" if l == winner else "tab:blue" for l in scores.universe]
    ax.bar(labels, scores.grades, color=colors)
    for x, g in enumerate(scores.grades):
        ax.annotate(f"{g:.2f}", (x, g), ha="center", va="bottom", fontsize=7)
    ax.set_ylim(0, 1.08)
    ax.set_ylabel("membership in relation")
    ax.set_title(title)
    return save(fig, path)


@styled
def plot_matrix(cells, rows, cols, path, title: str = "", annotate: bool = True) -> Path:
    cells = np.asarray(cells, dtype=float)
    fig = new_figure(width=1.2 + 0.55 * max(len(cols), 3), height=1.0 + 0.45 * max(len(rows), 3))
    ax = fig.axes[0]
    im = ax.imshow(cells, vmin=0.0, vmax=1.0, cmap="viridis", aspect="auto")
    ax.set_xticks(range(len(cols)), [format_param(c) for c in cols], rotation=45, ha="right")
    ax.set_yticks(range(len(rows)), [format_param(r) for r in rows])
    if annotate and cells.size <= 144:
        for (i, j), v in np.ndenumerate(cells):
            ax.text(j, i, f"{v:.2f}", ha="center", va="center", fontsize=7,
                    color="white" if v < 0.5 else "black")
    fig.colorbar(im, ax=ax, shrink=0.8)
    ax.set_title(title)
    return save(fig, path)


@styled
def plot_membership(spec: MembershipFunctionSpec, path, points=None, title: str = "") -> Path:
    """Continuous curve of ``spec`` with optional sampled points marked."""
    a, _, _, d = spec.breakpoints
    pad = max((d - a) * 0.25, 1.0)
    xs = np.linspace(a - pad, d + pad, 400)
    fig = new_figure()
    ax = fig.axes[0]
    ax.plot(xs, [eval_membership(spec, x) for x in xs], color="tab:blue")
    if points is not None:
        ax.plot(points, [eval_membership(spec, p) for p in points], "o", color="tab:orange")
    ax.set_ylim(-0.05, 1.05)
    ax.set_xlabel("x")
    ax.set_ylabel("membership grade")
    ax.set_title(title or spec.kind.value)
    return save(fig, path)
