"""Odds formats, break-even percentages, edge, and expected value.

American prices are accepted as real numbers with magnitude >= 100
(sportsbooks quote -105.5 style lines). Probabilities are plain floats
in [0, 1]; percent formatting belongs to the presentation layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

AMERICAN = "american"
DECIMAL = "decimal"
_FORMATS = (AMERICAN, DECIMAL)


@dataclass(frozen=True)
class Odds:
    """A betting price in American (e.g. -110) or decimal (e.g. 1.909) format."""

    format: str
    value: float

    def __post_init__(self) -> None:
        if self.format not in _FORMATS:
            raise DomainError(f"unknown odds format {self.format!r}; expected one of {_FORMATS}")
        if not math.isfinite(self.value):
            raise DomainError("odds value must be finite")
        if self.format == AMERICAN and abs(self.value) < 100:
            raise DomainError(f"american odds magnitude must be >= 100, got {self.value}")
        if self.format == DECIMAL and self.value <= 1.0:
            raise DomainError(f"decimal odds must be greater than 1.0, got {self.value}")


def american(value: float) -> Odds:
    return Odds(AMERICAN, float(value))


def decimal(value: float) -> Odds:
    return Odds(DECIMAL, float(value))


def to_decimal_value(odds: Odds) -> float:
    """Decimal multiplier (total return per unit staked) for any odds."""
    if odds.format == DECIMAL:
        return odds.value
    if odds.value > 0:
        return 1.0 + odds.value / 100.0
    return 1.0 + 100.0 / abs(odds.value)


def break_even(odds: Odds) -> float:
    """Win probability at which the bet returns zero in the long run.

    For American prices this is |min(100, odds)| / (100 + |odds|); for
    decimal prices it is 1 / value. Examples: -120 -> 0.5455,
    +110 -> 0.4762, -110 -> 0.5238.
    """
    if odds.format == AMERICAN:
        return abs(min(100.0, odds.value)) / (100.0 + abs(odds.value))
    return 1.0 / odds.value


def convert_odds(odds: Odds, target_format: str) -> Odds:
    """Re-express a price in the other format; break-even is preserved."""
    if target_format not in _FORMATS:
        raise DomainError(f"unknown odds format {target_format!r}; expected one of {_FORMATS}")
    if odds.format == target_format:
        return odds
    if target_format == DECIMAL:
        return Odds(DECIMAL, to_decimal_value(odds))
    d = odds.value
    if d >= 2.0:
        return Odds(AMERICAN, (d - 1.0) * 100.0)
    return Odds(AMERICAN, -100.0 / (d - 1.0))


def edge(cover: float, odds: Odds) -> float:
    """Cover probability minus break-even probability. May be negative."""
    _check_probability(cover, "cover")
    return cover - break_even(odds)


def ev_per_unit(p_win: float, p_push: float, odds: Odds) -> float:
    """Expected profit per unit staked; a push refunds the stake."""
    _check_probability(p_win, "p_win")
    _check_probability(p_push, "p_push")
    if p_win + p_push > 1.0 + 1e-12:
        raise DomainError(f"p_win + p_push = {p_win + p_push} exceeds 1")
    d = to_decimal_value(odds)
    return p_win * (d - 1.0) - (1.0 - p_win - p_push)


def _check_probability(p: float, name: str) -> None:
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"{name} must lie in [0, 1], got {p}")
