"""Weighted, column-normalized conditional margin matrix and edge quotes.

Rows are final margins s = -60..60 (bet-team convention, positive = the
bet team wins); columns are projected margins mu = -39..39. Each column
is the discretized normal centered at mu, reweighted by the key-number
multipliers and renormalized, so it is a proper conditional distribution
over margins. The matrix is built once and is immutable afterward;
concurrent readers need no locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DataFormatError, DomainError, OutOfModelError
from .gaussian import std_normal_cdf
from .historical import WeightTable
from .odds import Odds, break_even, ev_per_unit

DEFAULT_CELL_SD = 15.0
_INT_EPS = 1e-9


@dataclass(frozen=True)
class EdgeMatrix:
    """Conditional margin distributions, one column per integer projection."""

    cells: np.ndarray  # shape (2*row_halfwidth+1, 2*col_halfwidth+1)
    cell_sd: float
    row_halfwidth: int
    col_halfwidth: int
    weight_table_id: str

    def __post_init__(self) -> None:
        self.cells.setflags(write=False)

    @property
    def margins(self) -> np.ndarray:
        return np.arange(-self.row_halfwidth, self.row_halfwidth + 1)

    def _col_index(self, mu: int) -> int:
        if abs(mu) > self.col_halfwidth:
            raise DomainError(f"projected margin {mu} outside +/-{self.col_halfwidth}")
        return mu + self.col_halfwidth


@dataclass(frozen=True)
class EdgeQuote:
    """Cover/push/lose split with the resulting edge and EV for one bet."""

    cover: float
    push: float
    lose: float
    break_even: float
    edge: float
    ev_per_unit: float


def _centered_bin(delta: int, sd: float) -> float:
    # Probability mass of (delta-0.5, delta+0.5) under Normal(0, sd),
    # computed from |delta| so that mirrored cells are bitwise equal.
    a = abs(delta)
    return std_normal_cdf((a + 0.5) / sd) - std_normal_cdf((a - 0.5) / sd)


def build_matrix(
    weights: WeightTable,
    cell_sd: float = DEFAULT_CELL_SD,
    row_halfwidth: int = 60,
    col_halfwidth: int = 39,
) -> EdgeMatrix:
    """Build the reweighted conditional matrix.

    Raw cell (s, mu) is the normal mass of (s-0.5, s+0.5) at mean mu
    times weight(|s|); each column is then divided by its sum. Columns
    for negative mu are the exact reverse of their positive-mu twins.
    """
    if cell_sd <= 0:
        raise DomainError(f"cell_sd must be positive, got {cell_sd}")
    if row_halfwidth < 1 or col_halfwidth < 1:
        raise DomainError("halfwidths must be at least 1")

    n_rows = 2 * row_halfwidth + 1
    n_cols = 2 * col_halfwidth + 1
    cells = np.empty((n_rows, n_cols))
    margins = range(-row_halfwidth, row_halfwidth + 1)
    w = np.array([weights.weight(s) for s in margins])

    for mu in range(0, col_halfwidth + 1):
        raw = np.array([_centered_bin(s - mu, cell_sd) for s in margins]) * w
        total = raw.sum()
        if total <= 0:
            raise DomainError(f"column mu={mu} has zero total weight; cannot normalize")
        col = raw / total
        cells[:, mu + col_halfwidth] = col
        # weight depends on |s| only, so the -mu column is the mirror image
        cells[:, -mu + col_halfwidth] = col[::-1]
    return EdgeMatrix(
        cells=cells,
        cell_sd=cell_sd,
        row_halfwidth=row_halfwidth,
        col_halfwidth=col_halfwidth,
        weight_table_id=weights.version,
    )


def column_distribution(matrix: EdgeMatrix, mu: int) -> np.ndarray:
    """The stored conditional margin distribution for an integer projection."""
    return matrix.cells[:, matrix._col_index(mu)].copy()


def interpolated_distribution(matrix: EdgeMatrix, mu: float) -> np.ndarray:
    """Linear interpolation between the two neighboring columns.

    For mu = n + f the result is (1-f) * column(n) + f * column(n+1);
    at integer mu it is exactly the stored column.
    """
    if not math.isfinite(mu) or abs(mu) > matrix.col_halfwidth:
        raise DomainError(f"projected margin {mu} outside +/-{matrix.col_halfwidth}")
    n = math.floor(mu)
    f = mu - n
    if f == 0.0:
        return column_distribution(matrix, n)
    lo = matrix.cells[:, matrix._col_index(n)]
    hi = matrix.cells[:, matrix._col_index(n + 1)]
    return (1.0 - f) * lo + f * hi


def cover_push_probabilities(
    matrix: EdgeMatrix,
    mu: float,
    book_spread: float,
) -> tuple[float, float]:
    """Cover and push probability against a sportsbook line.

    The cover threshold is t = -book_spread in margin units: covering
    requires margin > t strictly. Margin = t is a push, which only
    exists for integer lines.
    """
    if abs(book_spread) > matrix.row_halfwidth:
        raise DomainError(f"book spread {book_spread} outside +/-{matrix.row_halfwidth}")
    dist = interpolated_distribution(matrix, mu)
    t = -book_spread
    t_round = round(t)
    is_integer = abs(t - t_round) < _INT_EPS
    first_covering = t_round + 1 if is_integer else math.floor(t) + 1
    cover = float(dist[first_covering + matrix.row_halfwidth :].sum())
    push = float(dist[t_round + matrix.row_halfwidth]) if is_integer else 0.0
    return cover, push


def edge_quote(
    matrix: EdgeMatrix,
    projected_spread: float,
    book_spread: float,
    odds: Odds,
) -> EdgeQuote:
    """Full quote for betting a team at a sportsbook line and price.

    Spreads use spread convention (negative = the bet team is favored);
    the projection becomes the margin-distribution mean mu = -projected.
    """
    if abs(projected_spread) > matrix.col_halfwidth:
        raise OutOfModelError(
            f"projected spread {projected_spread} is outside the modeled "
            f"+/-{matrix.col_halfwidth} range; blowout-range spreads are not modeled"
        )
    cover, push = cover_push_probabilities(matrix, -projected_spread, book_spread)
    be = break_even(odds)
    return EdgeQuote(
        cover=cover,
        push=push,
        lose=1.0 - cover - push,
        break_even=be,
        edge=cover - be,
        ev_per_unit=ev_per_unit(cover, push, odds),
    )


def conditional_mean(matrix: EdgeMatrix, mu: float) -> float:
    """Expected margin of the interpolated conditional distribution."""
    dist = interpolated_distribution(matrix, mu)
    return float(np.dot(matrix.margins, dist))


# --- JSON persistence -------------------------------------------------------

def matrix_to_json(matrix: EdgeMatrix) -> dict:
    return {
        "cell_sd": matrix.cell_sd,
        "row_range": [-matrix.row_halfwidth, matrix.row_halfwidth],
        "col_range": [-matrix.col_halfwidth, matrix.col_halfwidth],
        "weight_table_id": matrix.weight_table_id,
        "columns": {
            str(mu): [float(x) for x in matrix.cells[:, mu + matrix.col_halfwidth]]
            for mu in range(-matrix.col_halfwidth, matrix.col_halfwidth + 1)
        },
    }


def matrix_from_json(doc: dict) -> EdgeMatrix:
    for key in ("cell_sd", "row_range", "col_range", "columns"):
        if key not in doc:
            raise DataFormatError(f"matrix JSON missing key: {key}")
    row_lo, row_hi = doc["row_range"]
    col_lo, col_hi = doc["col_range"]
    if row_lo != -row_hi or col_lo != -col_hi:
        raise DataFormatError("matrix ranges must be symmetric around 0")
    row_halfwidth, col_halfwidth = int(row_hi), int(col_hi)
    n_rows = 2 * row_halfwidth + 1
    cells = np.empty((n_rows, 2 * col_halfwidth + 1))
    for mu in range(-col_halfwidth, col_halfwidth + 1):
        key = str(mu)
        if key not in doc["columns"]:
            raise DataFormatError(f"matrix JSON missing column {key}")
        col = doc["columns"][key]
        if len(col) != n_rows:
            raise DataFormatError(f"column {key} has {len(col)} entries, expected {n_rows}")
        cells[:, mu + col_halfwidth] = col
    return EdgeMatrix(
        cells=cells,
        cell_sd=float(doc["cell_sd"]),
        row_halfwidth=row_halfwidth,
        col_halfwidth=col_halfwidth,
        weight_table_id=str(doc.get("weight_table_id", "unknown")),
    )
