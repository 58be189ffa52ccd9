"""Point-spread cover probabilities and betting edges for college football.

Core workflow: take historical score-differential frequencies, derive
key-number multipliers against a reference normal, build a reweighted
conditional margin matrix, and quote cover probability / edge / EV for
a projected spread against a sportsbook line.
"""

from .engine import (
    EdgeMatrix,
    EdgeQuote,
    build_matrix,
    column_distribution,
    conditional_mean,
    cover_push_probabilities,
    edge_quote,
    interpolated_distribution,
    matrix_from_json,
    matrix_to_json,
)
from .errors import DataFormatError, DomainError, OutOfModelError, SpreadEdgeError
from .gaussian import (
    absolute_bin_prob,
    interval_prob,
    std_normal_cdf,
    stern_cover_probability,
)
from .historical import (
    BandStats,
    CoverRate,
    DifferentialTable,
    FitReport,
    GameRecord,
    WeightTable,
    binned_cover_rate,
    default_weight_table,
    derive_weights,
    differential_table_from_json,
    differential_table_to_json,
    empirical_differential_table,
    fit_sigma,
    ingest_games,
    pythagorean_wins,
    shipped_differential_table,
    spread_band_stats,
    weight_table_from_json,
    weight_table_to_json,
)
from .odds import (
    Odds,
    american,
    break_even,
    convert_odds,
    decimal,
    edge,
    ev_per_unit,
    to_decimal_value,
)

__version__ = "0.1.0"
