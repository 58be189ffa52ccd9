import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from spread_edge import column_distribution, edge_quote, american
from spread_edge.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


class TestHealthAndConfig:
    def test_health_before_startup_is_503(self):
        # no lifespan entered, so the matrix is not loaded yet
        cold = TestClient(create_app())
        assert cold.get("/api/v1/health").status_code == 503

    def test_health_after_startup(self, client):
        r = client.get("/api/v1/health")
        assert r.status_code == 200
        body = r.json()
        assert body["status"] == "ok"
        assert body["weights_version"]

    def test_config_reports_model(self, client):
        r = client.get("/api/v1/config")
        assert r.status_code == 200
        body = r.json()
        assert body["cell_sd"] == 15.0
        assert body["ref_sigma"] == 22.0
        assert round(body["weights"]["3"], 1) == 2.7
        assert round(body["weights"]["7"], 1) == 2.1


class TestEdgeEndpoint:
    def test_baylor(self, client):
        r = client.post("/api/v1/edge", json={
            "projected_spread": -2.9, "book_spread": -2.5,
            "odds": -110, "odds_format": "american",
        })
        assert r.status_code == 200
        body = r.json()
        assert body["edge"] == pytest.approx(0.008, abs=0.01)
        assert body["cover_probability"] == pytest.approx(0.532, abs=0.01)
        assert body["push_probability"] == 0.0
        assert body["model"]["cell_sd"] == 15.0

    def test_counterintuitive_underdog(self, client):
        r = client.post("/api/v1/edge", json={
            "projected_spread": 8, "book_spread": 7.5,
            "odds": -110, "odds_format": "american",
        })
        assert r.status_code == 200
        assert r.json()["edge"] == pytest.approx(0.012, abs=0.01)

    def test_matches_engine_exactly(self, client, default_matrix):
        r = client.post("/api/v1/edge", json={
            "projected_spread": -6.5, "book_spread": -3.5,
            "odds": -115, "odds_format": "american",
        })
        q = edge_quote(default_matrix, -6.5, -3.5, american(-115))
        body = r.json()
        assert body["cover_probability"] == pytest.approx(q.cover, abs=1e-12)
        assert body["break_even_probability"] == pytest.approx(q.break_even, abs=1e-12)
        assert body["edge"] == pytest.approx(q.edge, abs=1e-12)
        assert body["ev_per_unit"] == pytest.approx(q.ev_per_unit, abs=1e-12)

    def test_probabilities_sum_to_one(self, client):
        r = client.post("/api/v1/edge", json={
            "projected_spread": -3, "book_spread": -3,
            "odds": -110, "odds_format": "american",
        })
        body = r.json()
        loss = 1 - body["cover_probability"] - body["push_probability"]
        assert 0 <= loss <= 1
        assert body["push_probability"] > 0

    def test_out_of_model_projection_422(self, client):
        r = client.post("/api/v1/edge", json={
            "projected_spread": -45, "book_spread": -44,
            "odds": -110, "odds_format": "american",
        })
        assert r.status_code == 422
        assert "detail" in r.json()

    def test_missing_field_400(self, client):
        r = client.post("/api/v1/edge", json={"projected_spread": -3})
        assert r.status_code == 400
        fields = {e["field"] for e in r.json()["errors"]}
        assert "book_spread" in fields

    def test_bad_odds_400(self, client):
        r = client.post("/api/v1/edge", json={
            "projected_spread": -3, "book_spread": -2.5,
            "odds": -50, "odds_format": "american",
        })
        assert r.status_code == 400
        assert r.json()["errors"][0]["field"] == "odds"

    def test_bad_odds_format_400(self, client):
        r = client.post("/api/v1/edge", json={
            "projected_spread": -3, "book_spread": -2.5,
            "odds": -110, "odds_format": "fractional",
        })
        assert r.status_code == 400

    def test_stateless_byte_identical(self, client):
        payload = {"projected_spread": -2.9, "book_spread": -2.5,
                   "odds": -110, "odds_format": "american"}
        bodies = {client.post("/api/v1/edge", json=payload).content for _ in range(5)}
        assert len(bodies) == 1

    def test_concurrent_requests_identical(self, client):
        payload = {"projected_spread": -7.5, "book_spread": -6.5,
                   "odds": -105, "odds_format": "american"}
        def hit(_):
            return client.post("/api/v1/edge", json=payload).content
        with ThreadPoolExecutor(max_workers=16) as pool:
            results = set(pool.map(hit, range(100)))
        assert len(results) == 1


class TestDistributionEndpoint:
    def test_symmetric_at_zero(self, client):
        r = client.get("/api/v1/distribution", params={"projected_spread": 0})
        assert r.status_code == 200
        body = r.json()
        assert body["margins"][0] == -60 and body["margins"][-1] == 60
        probs = body["probabilities"]
        assert len(probs) == 121
        assert probs == pytest.approx(probs[::-1], abs=1e-15)
        assert sum(probs) == pytest.approx(1.0, abs=1e-9)

    def test_key_number_spike(self, client):
        r = client.get("/api/v1/distribution", params={"projected_spread": -3})
        probs = r.json()["probabilities"]
        assert probs[3 + 60] > probs[2 + 60]

    def test_interpolation(self, client, default_matrix):
        r = client.get("/api/v1/distribution", params={"projected_spread": -2.9})
        probs = r.json()["probabilities"]
        expected = 0.9 * column_distribution(default_matrix, 3) + 0.1 * column_distribution(
            default_matrix, 2
        )
        assert probs == pytest.approx(list(expected), abs=1e-12)

    def test_missing_parameter_400(self, client):
        assert client.get("/api/v1/distribution").status_code == 400

    def test_non_numeric_parameter_400(self, client):
        r = client.get("/api/v1/distribution", params={"projected_spread": "three"})
        assert r.status_code == 400

    def test_out_of_range_422(self, client):
        r = client.get("/api/v1/distribution", params={"projected_spread": 40})
        assert r.status_code == 422
