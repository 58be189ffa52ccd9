"""Historical game ingestion, differential tables, multipliers, and sigma fits.

Ships a partial table of absolute score-differential frequencies for
college football (Boyd data, 1980-2014, differentials 0 through 15).
The frequencies are stored as printed; they sum to well under 1 because
the table is partial, and the table carries a ``partial`` flag so
normalization checks know to skip it.
"""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import dataclass, field
from datetime import date

from .errors import DataFormatError, DomainError
from .gaussian import absolute_bin_prob

GAMES_CSV_HEADER = [
    "season",
    "date",
    "home_team",
    "away_team",
    "home_score",
    "away_score",
    "closing_spread_home",
]

# Absolute score-differential frequencies, college football 1980-2014
# (Boyd). Differentials above 15 are not tabulated.
BOYD_FREQUENCIES = {
    0: 0.0,
    1: 0.034,
    2: 0.027,
    3: 0.096,
    4: 0.039,
    5: 0.026,
    6: 0.029,
    7: 0.073,
    8: 0.024,
    9: 0.012,
    10: 0.043,
    11: 0.023,
    12: 0.018,
    13: 0.018,
    14: 0.043,
    15: 0.011,
}

DEFAULT_REF_SIGMA = 22.0


@dataclass(frozen=True)
class GameRecord:
    """One historical game with its closing spread (negative = home favored)."""

    season: int
    date: date
    home_team: str
    away_team: str
    home_score: int
    away_score: int
    closing_spread_home: float

    @property
    def home_margin(self) -> int:
        return self.home_score - self.away_score

    def favorite_margin(self) -> int | None:
        """Signed margin from the closing favorite's side; None for pick'ems."""
        if self.closing_spread_home < 0:
            return self.home_margin
        if self.closing_spread_home > 0:
            return -self.home_margin
        return None


@dataclass(frozen=True)
class DifferentialTable:
    """Relative frequencies of absolute score differentials."""

    freq: dict[int, float]
    n_games: int
    source: str = ""
    partial: bool = False

    def __post_init__(self) -> None:
        for d, f in self.freq.items():
            if d < 0:
                raise DomainError(f"differential {d} is negative")
            if f < 0:
                raise DomainError(f"frequency for differential {d} is negative: {f}")
        if not self.partial:
            total = sum(self.freq.values())
            if abs(total - 1.0) > 1e-9:
                raise DomainError(f"frequencies sum to {total}, expected 1 within 1e-9")

    def support(self) -> list[int]:
        return sorted(self.freq)


@dataclass(frozen=True)
class WeightTable:
    """Per-differential multipliers applied to normal bin probabilities."""

    sigma_ref: float = DEFAULT_REF_SIGMA
    weights: dict[int, float] = field(default_factory=dict)
    default_weight: float = 1.0
    version: str = "boyd-1980-2014"

    def __post_init__(self) -> None:
        if self.sigma_ref <= 0:
            raise DomainError(f"sigma_ref must be positive, got {self.sigma_ref}")
        for d, w in self.weights.items():
            if d < 0:
                raise DomainError(f"differential {d} is negative")
            if w < 0:
                raise DomainError(f"weight for differential {d} is negative: {w}")
        if self.default_weight < 0:
            raise DomainError(f"default_weight is negative: {self.default_weight}")

    def weight(self, d: int) -> float:
        return self.weights.get(abs(d), self.default_weight)


@dataclass(frozen=True)
class FitReport:
    """Grid-search result for the reference sigma."""

    best_sigma: float
    loss_at_best: float
    grid: list[tuple[float, float]]
    loss_kind: str


@dataclass(frozen=True)
class BandStats:
    """Summary of games whose favorite spread magnitude falls in a band."""

    count: int
    mean_margin: float | None
    sd_margin: float | None
    exceedance_rate: float | None


@dataclass(frozen=True)
class CoverRate:
    """Empirical cover rate for a spread band; rate is None when n = 0."""

    rate: float | None
    n: int


def shipped_differential_table() -> DifferentialTable:
    return DifferentialTable(
        freq=dict(BOYD_FREQUENCIES),
        n_games=0,
        source="boyd-1980-2014",
        partial=True,
    )


def default_weight_table() -> WeightTable:
    """Multipliers from the shipped table against a sigma-22 normal."""
    return derive_weights(shipped_differential_table(), DEFAULT_REF_SIGMA)


def ingest_games(stream) -> list[GameRecord]:
    """Parse the games CSV; errors cite the offending row and column."""
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise DataFormatError("empty CSV: missing header row") from None
    header = [h.strip() for h in header]
    if header != GAMES_CSV_HEADER:
        missing = [c for c in GAMES_CSV_HEADER if c not in header]
        if missing:
            raise DataFormatError(f"missing column(s): {', '.join(missing)}")
        raise DataFormatError(
            f"bad header order: got {header}, expected {GAMES_CSV_HEADER}"
        )
    games = []
    for row_num, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(GAMES_CSV_HEADER):
            raise DataFormatError(f"row {row_num}: expected {len(GAMES_CSV_HEADER)} fields, got {len(row)}")
        fields = dict(zip(GAMES_CSV_HEADER, (cell.strip() for cell in row)))
        games.append(
            GameRecord(
                season=_parse_int(fields, "season", row_num),
                date=_parse_date(fields, "date", row_num),
                home_team=fields["home_team"],
                away_team=fields["away_team"],
                home_score=_parse_score(fields, "home_score", row_num),
                away_score=_parse_score(fields, "away_score", row_num),
                closing_spread_home=_parse_float(fields, "closing_spread_home", row_num),
            )
        )
    if not games:
        raise DataFormatError("empty CSV: no data rows")
    return games


def empirical_differential_table(games: list[GameRecord]) -> DifferentialTable:
    """Relative frequency of each absolute score differential."""
    if not games:
        raise DomainError("cannot tabulate an empty game list")
    counts: dict[int, int] = {}
    for g in games:
        d = abs(g.home_margin)
        counts[d] = counts.get(d, 0) + 1
    n = len(games)
    return DifferentialTable(
        freq={d: c / n for d, c in sorted(counts.items())},
        n_games=n,
        source="empirical",
    )


def spread_band_stats(
    games: list[GameRecord],
    spread_lo: float,
    spread_hi: float,
    k_sd: float,
    sd_ref: float,
) -> BandStats:
    """Margin statistics for games with favorite spread magnitude in [lo, hi].

    Margins are favorite-relative. A game exceeds when its margin lands
    outside |spread| +/- k_sd * sd_ref; sd_ref is supplied by the caller
    because the reference deviation (the conditional sd, ~15) is not the
    band's own sample sd.
    """
    if spread_lo > spread_hi:
        raise DomainError(f"spread_lo {spread_lo} exceeds spread_hi {spread_hi}")
    margins = []
    exceed = 0
    for g in games:
        m = g.favorite_margin()
        if m is None:
            continue
        mag = abs(g.closing_spread_home)
        if not (spread_lo <= mag <= spread_hi):
            continue
        margins.append(m)
        if m > mag + k_sd * sd_ref or m < mag - k_sd * sd_ref:
            exceed += 1
    if not margins:
        return BandStats(count=0, mean_margin=None, sd_margin=None, exceedance_rate=None)
    sd = statistics.stdev(margins) if len(margins) >= 2 else None
    return BandStats(
        count=len(margins),
        mean_margin=statistics.fmean(margins),
        sd_margin=sd,
        exceedance_rate=exceed / len(margins),
    )


def binned_cover_rate(
    games: list[GameRecord],
    spread_lo: float,
    spread_hi: float,
    margin_threshold: float,
) -> CoverRate:
    """Fraction of banded games whose favorite won by more than the threshold.

    Pick'em games (spread 0) have no favorite and are excluded.
    """
    if spread_lo > spread_hi:
        raise DomainError(f"spread_lo {spread_lo} exceeds spread_hi {spread_hi}")
    n = 0
    covered = 0
    for g in games:
        m = g.favorite_margin()
        if m is None:
            continue
        if not (spread_lo <= abs(g.closing_spread_home) <= spread_hi):
            continue
        n += 1
        if m > margin_threshold:
            covered += 1
    if n == 0:
        return CoverRate(rate=None, n=0)
    return CoverRate(rate=covered / n, n=n)


def derive_weights(table: DifferentialTable, sigma: float) -> WeightTable:
    """Multiplier per differential: historical frequency over the normal bin.

    Zero-frequency differentials (like 0, where ties are impossible)
    get weight 0; differentials beyond the table keep default_weight 1.
    """
    if sigma <= 0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    weights = {d: table.freq[d] / absolute_bin_prob(d, sigma) for d in table.support()}
    return WeightTable(
        sigma_ref=sigma,
        weights=weights,
        default_weight=1.0,
        version=table.source or "custom",
    )


def fit_sigma(
    table: DifferentialTable,
    grid_lo: float,
    grid_hi: float,
    step: float,
    loss_kind: str = "sse",
) -> FitReport:
    """Grid search for the sigma whose binned normal best matches the table.

    Loss sums over tabled differentials d >= 1 (ties are structurally
    impossible post-1995, so d = 0 carries no information about sigma).
    Ties break toward smaller sigma.
    """
    if loss_kind not in ("sse", "sae"):
        raise DomainError(f"loss_kind must be 'sse' or 'sae', got {loss_kind!r}")
    if grid_lo <= 0 or grid_lo > grid_hi:
        raise DomainError(f"bad grid: lo={grid_lo}, hi={grid_hi}")
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    support = [d for d in table.support() if d >= 1]
    if not support:
        raise DomainError("table has no differentials >= 1 to fit against")

    sigmas = []
    s = grid_lo
    while s <= grid_hi + 1e-12:
        sigmas.append(s)
        s = grid_lo + len(sigmas) * step

    grid = []
    for sigma in sigmas:
        residuals = (table.freq[d] - absolute_bin_prob(d, sigma) for d in support)
        if loss_kind == "sse":
            loss = sum(r * r for r in residuals)
        else:
            loss = sum(abs(r) for r in residuals)
        grid.append((sigma, loss))
    best_sigma, best_loss = min(grid, key=lambda sl: (sl[1], sl[0]))
    return FitReport(best_sigma=best_sigma, loss_at_best=best_loss, grid=grid, loss_kind=loss_kind)


def pythagorean_wins(points_for: float, points_against: float, r: float, n_games: float) -> float:
    """Expected season wins from points scored and allowed (exponent r)."""
    if points_for < 0 or points_against < 0:
        raise DomainError("points must be nonnegative")
    if points_for == 0 and points_against == 0:
        raise DomainError("points_for and points_against cannot both be zero")
    if r <= 0:
        raise DomainError(f"exponent must be positive, got {r}")
    if n_games <= 0:
        raise DomainError(f"n_games must be positive, got {n_games}")
    pf = points_for**r
    pa = points_against**r
    return n_games * pf / (pf + pa)


# --- JSON persistence -------------------------------------------------------

def differential_table_to_json(table: DifferentialTable) -> dict:
    doc = {
        "n_games": table.n_games,
        "freq": {str(d): table.freq[d] for d in table.support()},
    }
    if table.source:
        doc["source"] = table.source
    if table.partial:
        doc["partial"] = True
    return doc


def differential_table_from_json(doc: dict) -> DifferentialTable:
    _require_keys(doc, required={"n_games", "freq"}, optional={"source", "partial"})
    return DifferentialTable(
        freq=_parse_keyed_map(doc["freq"], "freq"),
        n_games=int(doc["n_games"]),
        source=str(doc.get("source", "")),
        partial=bool(doc.get("partial", False)),
    )


def weight_table_to_json(table: WeightTable) -> dict:
    doc = {
        "sigma_ref": table.sigma_ref,
        "default_weight": table.default_weight,
        "weights": {str(d): table.weights[d] for d in sorted(table.weights)},
    }
    if table.version:
        doc["version"] = table.version
    return doc


def weight_table_from_json(doc: dict) -> WeightTable:
    _require_keys(doc, required={"sigma_ref", "default_weight", "weights"}, optional={"version"})
    return WeightTable(
        sigma_ref=float(doc["sigma_ref"]),
        weights=_parse_keyed_map(doc["weights"], "weights"),
        default_weight=float(doc["default_weight"]),
        version=str(doc.get("version", "custom")),
    )


def _require_keys(doc: dict, required: set, optional: set) -> None:
    if not isinstance(doc, dict):
        raise DataFormatError(f"expected a JSON object, got {type(doc).__name__}")
    missing = required - doc.keys()
    if missing:
        raise DataFormatError(f"missing key(s): {', '.join(sorted(missing))}")
    unknown = doc.keys() - required - optional
    if unknown:
        raise DataFormatError(f"unknown key(s): {', '.join(sorted(unknown))}")


def _parse_keyed_map(raw: dict, name: str) -> dict[int, float]:
    if not isinstance(raw, dict):
        raise DataFormatError(f"{name} must be an object of differential -> number")
    out = {}
    for key, value in raw.items():
        try:
            d = int(key)
        except (TypeError, ValueError):
            raise DataFormatError(f"{name}: key {key!r} is not an integer differential") from None
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
            raise DataFormatError(f"{name}[{key}]: expected a finite number, got {value!r}")
        out[d] = float(value)
    return out


# --- CSV field parsing ------------------------------------------------------

def _parse_int(fields: dict, column: str, row_num: int) -> int:
    try:
        return int(fields[column])
    except ValueError:
        raise DataFormatError(
            f"row {row_num}, column {column}: {fields[column]!r} is not an integer"
        ) from None


def _parse_score(fields: dict, column: str, row_num: int) -> int:
    value = _parse_int(fields, column, row_num)
    if value < 0:
        raise DataFormatError(f"row {row_num}, column {column}: score {value} is negative")
    return value


def _parse_float(fields: dict, column: str, row_num: int) -> float:
    try:
        value = float(fields[column])
    except ValueError:
        raise DataFormatError(
            f"row {row_num}, column {column}: {fields[column]!r} is not a number"
        ) from None
    if not math.isfinite(value):
        raise DataFormatError(f"row {row_num}, column {column}: value must be finite")
    return value


def _parse_date(fields: dict, column: str, row_num: int) -> date:
    try:
        return date.fromisoformat(fields[column])
    except ValueError:
        raise DataFormatError(
            f"row {row_num}, column {column}: {fields[column]!r} is not a YYYY-MM-DD date"
        ) from None
