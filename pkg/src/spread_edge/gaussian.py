"""Normal-distribution primitives and half-point binning of margins.

Sign conventions: margins are bet-team points minus opponent points
(positive = the bet team wins). Spread-convention inputs (negative =
favored) are negated exactly once, at the public API boundary, so every
internal computation works in margin units.
"""

from __future__ import annotations

import math

from .errors import DomainError

_SQRT2 = math.sqrt(2.0)


def std_normal_cdf(z: float) -> float:
    """Standard normal CDF via the complementary error function.

    erfc keeps full double precision in both tails, comfortably inside
    the 1e-8 accuracy the downstream binning needs.
    """
    return 0.5 * math.erfc(-z / _SQRT2)


def interval_prob(
    lo: float | None,
    hi: float | None,
    mean: float,
    sd: float,
) -> float:
    """P(lo < X <= hi) for X ~ Normal(mean, sd).

    ``None`` endpoints mean the interval is unbounded on that side.
    """
    if sd <= 0:
        raise DomainError(f"sd must be positive, got {sd}")
    if lo is not None and hi is not None and lo > hi:
        raise DomainError(f"interval is empty: lo={lo} > hi={hi}")
    upper = 1.0 if hi is None else std_normal_cdf((hi - mean) / sd)
    lower = 0.0 if lo is None else std_normal_cdf((lo - mean) / sd)
    return upper - lower


def stern_cover_probability(projected_spread: float, book_spread: float, sd: float) -> float:
    """Cover probability under a plain normal margin model.

    Both spreads use spread convention (negative = bet team favored).
    Equals Phi((book - projected) / sd): the probability a normal margin
    centered at -projected exceeds -book.
    """
    if sd <= 0:
        raise DomainError(f"sd must be positive, got {sd}")
    return std_normal_cdf((book_spread - projected_spread) / sd)


def absolute_bin_prob(d: int, sd: float) -> float:
    """Probability a zero-mean normal margin lands within half a point of +/-d.

    Combines both signs for d >= 1; d = 0 is the single central bin
    (-0.5, 0.5).
    """
    if d < 0:
        raise DomainError(f"differential must be nonnegative, got {d}")
    if sd <= 0:
        raise DomainError(f"sd must be positive, got {sd}")
    if d == 0:
        return 2.0 * std_normal_cdf(0.5 / sd) - 1.0
    return 2.0 * (std_normal_cdf((d + 0.5) / sd) - std_normal_cdf((d - 0.5) / sd))
