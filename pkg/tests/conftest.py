import random
from datetime import date, timedelta

import pytest

from spread_edge import build_matrix, default_weight_table, shipped_differential_table
from spread_edge.historical import GameRecord


@pytest.fixture(scope="session")
def shipped_table():
    return shipped_differential_table()


@pytest.fixture(scope="session")
def default_weights():
    return default_weight_table()


@pytest.fixture(scope="session")
def default_matrix(default_weights):
    return build_matrix(default_weights)


def make_random_games(seed: int, n: int = 200) -> list[GameRecord]:
    """Synthetic season with arbitrary scores and closing spreads."""
    rng = random.Random(seed)
    games = []
    start = date(2021, 9, 4)
    for i in range(n):
        games.append(
            GameRecord(
                season=2021,
                date=start + timedelta(days=rng.randrange(100)),
                home_team=f"Home{i}",
                away_team=f"Away{i}",
                home_score=rng.randrange(0, 70),
                away_score=rng.randrange(0, 70),
                closing_spread_home=rng.choice([-1, 1]) * rng.randrange(0, 80) / 2.0,
            )
        )
    return games


def games_to_csv(games) -> str:
    lines = ["season,date,home_team,away_team,home_score,away_score,closing_spread_home"]
    for g in games:
        lines.append(
            f"{g.season},{g.date.isoformat()},{g.home_team},{g.away_team},"
            f"{g.home_score},{g.away_score},{g.closing_spread_home}"
        )
    return "\n".join(lines) + "\n"
