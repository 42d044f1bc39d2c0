"""Uncertainty measures of fuzzy relations on a single finite universe.

The expected cardinality of an element's class is its row sum over the
universe size; the uncertainty quantity is ``-log2`` of that ratio, and the
average uncertainty is the mean over all rows. A larger relation (pointwise)
therefore has a smaller average uncertainty.
"""

from __future__ import annotations

import math
from typing import Hashable

import numpy as np

from .algebra import FuzzyRelationMatrix
from .core import FuzzyError
from .soft import _require_square


class DegenerateClass(FuzzyError):
    """A row of the relation is all zero, so its uncertainty is infinite."""

    def __init__(self, element: Hashable):
        super().__init__(f"degenerate class: row {element!r} has zero cardinality")
        self.element = element


def _row(t: FuzzyRelationMatrix, i: int | Hashable) -> int:
    _require_square(t)
    if len(t.rows) == 0:
        raise FuzzyError("expected cardinality is undefined on an empty universe")
    if isinstance(i, (int, np.integer)) and not isinstance(i, bool):
        if not 0 <= i < len(t.rows):
            raise FuzzyError(f"row index {i} out of range")
        return int(i)
    return t.rows.index(i)


def expected_cardinality(t: FuzzyRelationMatrix, i: int | Hashable) -> float:
    """Row sum of element ``i`` divided by the universe size.

    ``i`` may be a position or an element label.
    """
    i = _row(t, i)
    return float(t.cells[i].sum()) / len(t.rows)


def uncertainty_quantity(t: FuzzyRelationMatrix, i: int | Hashable) -> float:
    i = _row(t, i)
    card = expected_cardinality(t, i)
    if card <= 0.0:
        raise DegenerateClass(t.rows.labels[i])
    # -log2(1) is -0.0; report a clean zero
    return -math.log2(card) + 0.0


def row_uncertainties(t: FuzzyRelationMatrix) -> list[tuple[Hashable, float, float]]:
    """``(element, expected cardinality, uncertainty)`` for every row."""
    return [
        (e, expected_cardinality(t, i), uncertainty_quantity(t, i))
        for i, e in enumerate(t.rows)
    ]


def average_uncertainty(t: FuzzyRelationMatrix) -> float:
    _require_square(t)
    n = len(t.rows)
    if n == 0:
        return 0.0
    return sum(uncertainty_quantity(t, i) for i in range(n)) / n
