"""Stateless HTTP API serving edge quotes and conditional distributions.

The weight table and matrix are loaded once at startup; every request
reads the same immutable model, so identical requests produce identical
responses and no locking is needed.
"""

from __future__ import annotations

import os
from contextlib import asynccontextmanager
from dataclasses import dataclass

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import (
    DEFAULT_CELL_SD,
    EdgeMatrix,
    build_matrix,
    edge_quote,
    interpolated_distribution,
)
from .errors import DomainError, OutOfModelError
from .historical import WeightTable, default_weight_table
from .odds import AMERICAN, DECIMAL, Odds


@dataclass(frozen=True)
class ServiceModel:
    matrix: EdgeMatrix
    weights: WeightTable


class EdgeRequest(BaseModel):
    projected_spread: float
    book_spread: float
    odds: float
    odds_format: str = AMERICAN


def _cors_origins() -> list[str]:
    raw = os.environ.get("SPREAD_EDGE_CORS_ORIGINS", "*")
    return [origin.strip() for origin in raw.split(",") if origin.strip()]


def create_app(
    weight_table: WeightTable | None = None,
    cell_sd: float = DEFAULT_CELL_SD,
) -> FastAPI:
    """Build the API app; the matrix is constructed during startup."""

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        weights = weight_table if weight_table is not None else default_weight_table()
        matrix = build_matrix(weights, cell_sd=cell_sd)
        app.state.model = ServiceModel(matrix=matrix, weights=weights)
        yield

    app = FastAPI(title="spread-edge", lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=_cors_origins(),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        errors = [
            {"field": ".".join(str(p) for p in err["loc"] if p != "body"), "message": err["msg"]}
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"errors": errors})

    def model_or_none(app: FastAPI) -> ServiceModel | None:
        return getattr(app.state, "model", None)

    @app.get("/api/v1/health")
    async def health(request: Request):
        model = model_or_none(request.app)
        if model is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        return {"status": "ok", "weights_version": model.weights.version}

    @app.get("/api/v1/config")
    async def config(request: Request):
        model = model_or_none(request.app)
        if model is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        return {
            "cell_sd": model.matrix.cell_sd,
            "ref_sigma": model.weights.sigma_ref,
            "weights_version": model.weights.version,
            "default_weight": model.weights.default_weight,
            "weights": {str(d): model.weights.weights[d] for d in sorted(model.weights.weights)},
        }

    @app.post("/api/v1/edge")
    async def post_edge(body: EdgeRequest, request: Request):
        model = model_or_none(request.app)
        if model is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        if body.odds_format not in (AMERICAN, DECIMAL):
            return _field_error("odds_format", f"must be '{AMERICAN}' or '{DECIMAL}'")
        try:
            odds = Odds(body.odds_format, body.odds)
        except DomainError as exc:
            return _field_error("odds", str(exc))
        if abs(body.book_spread) > model.matrix.row_halfwidth:
            return _field_error(
                "book_spread", f"must lie within +/-{model.matrix.row_halfwidth}"
            )
        try:
            quote = edge_quote(model.matrix, body.projected_spread, body.book_spread, odds)
        except OutOfModelError as exc:
            return JSONResponse(status_code=422, content={"detail": str(exc)})
        return {
            "cover_probability": quote.cover,
            "push_probability": quote.push,
            "break_even_probability": quote.break_even,
            "edge": quote.edge,
            "ev_per_unit": quote.ev_per_unit,
            "model": {
                "cell_sd": model.matrix.cell_sd,
                "ref_sigma": model.weights.sigma_ref,
                "weights_version": model.weights.version,
            },
        }

    @app.get("/api/v1/distribution")
    async def distribution(request: Request, projected_spread: float = Query(...)):
        model = model_or_none(request.app)
        if model is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        if abs(projected_spread) > model.matrix.col_halfwidth:
            return JSONResponse(
                status_code=422,
                content={
                    "detail": f"projected_spread must lie within "
                    f"+/-{model.matrix.col_halfwidth}"
                },
            )
        probs = interpolated_distribution(model.matrix, -projected_spread)
        return {
            "margins": [int(s) for s in model.matrix.margins],
            "probabilities": [float(p) for p in probs],
        }

    return app


def _field_error(field: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=400, content={"errors": [{"field": field, "message": message}]})
