"""Command-line front door: quote edges, ingest data, fit sigma, serve HTTP.

Exit codes: 0 success, 2 bad flags or values, 3 projection outside the
modeled range, 4 unreadable or malformed input files.
"""

from __future__ import annotations

import argparse
import json
import os
import socket
import sys

from . import engine, historical
from .errors import DataFormatError, DomainError, OutOfModelError
from .odds import AMERICAN, DECIMAL, Odds

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OUT_OF_MODEL = 3
EXIT_IO = 4

WEIGHTS_ENV_VAR = "SPREAD_EDGE_WEIGHTS"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OutOfModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_MODEL
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataFormatError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spread-edge",
        description="Cover probabilities and betting edges for point-spread bets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("edge", help="quote cover probability, edge, and EV for one bet")
    p.add_argument("--projection", type=float, default=-3.0,
                   help="bettor's projected spread, negative = favored (default -3)")
    p.add_argument("--line", type=float, required=True,
                   help="sportsbook spread for the bet team (required)")
    p.add_argument("--odds", type=float, default=-110.0, help="price (default -110)")
    p.add_argument("--odds-format", choices=[AMERICAN, DECIMAL], default=AMERICAN)
    p.add_argument("--weights", default=None, help="weight table JSON (default: built-in)")
    p.add_argument("--sd", type=float, default=engine.DEFAULT_CELL_SD,
                   help="conditional margin sd (default 15)")
    _add_format_flag(p)
    p.set_defaults(func=cmd_edge)

    p = sub.add_parser("ingest", help="tabulate differential frequencies from a games CSV")
    p.add_argument("--data", required=True, help="games CSV path")
    p.add_argument("--out", required=True, help="output differential table JSON path")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("fit", help="grid-search the reference sigma for a table")
    p.add_argument("--table", default=None, help="differential table JSON (default: built-in)")
    p.add_argument("--min", type=float, default=18.0, dest="grid_lo")
    p.add_argument("--max", type=float, default=26.0, dest="grid_hi")
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--loss", choices=["sse", "sae"], default="sse")
    _add_format_flag(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("build", help="build the conditional margin matrix and save as JSON")
    p.add_argument("--weights", default=None, help="weight table JSON (default: built-in)")
    p.add_argument("--sd", type=float, default=engine.DEFAULT_CELL_SD)
    p.add_argument("--out", required=True, help="output matrix JSON path")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", help="band statistics and cover rates from a games CSV")
    p.add_argument("--data", required=True, help="games CSV path")
    p.add_argument("--spread-lo", type=float, required=True)
    p.add_argument("--spread-hi", type=float, required=True)
    p.add_argument("--threshold", type=float, default=0.0,
                   help="favorite margin must exceed this to count as a cover")
    p.add_argument("--k-sd", type=float, default=2.0)
    p.add_argument("--sd-ref", type=float, default=15.0,
                   help="reference sd for the exceedance band (default 15)")
    _add_format_flag(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("serve", help="run the HTTP edge service")
    p.add_argument("--port", type=int, default=8000, help="0 picks an ephemeral port")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--weights", default=None, help="weight table JSON (default: built-in)")
    p.add_argument("--sd", type=float, default=engine.DEFAULT_CELL_SD)
    p.set_defaults(func=cmd_serve)

    return parser


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text", dest="output_format")


def _load_weights(path: str | None) -> historical.WeightTable:
    if path is None:
        path = os.environ.get(WEIGHTS_ENV_VAR)
    if path is None:
        return historical.default_weight_table()
    with open(path, encoding="utf-8") as fh:
        return historical.weight_table_from_json(json.load(fh))


def _pct(p: float) -> str:
    return f"{100 * p:.1f}%"


def cmd_edge(args) -> int:
    weights = _load_weights(args.weights)
    matrix = engine.build_matrix(weights, cell_sd=args.sd)
    odds = Odds(args.odds_format, args.odds)
    quote = engine.edge_quote(matrix, args.projection, args.line, odds)
    if args.output_format == "json":
        print(json.dumps({
            "cover": quote.cover,
            "push": quote.push,
            "lose": quote.lose,
            "break_even": quote.break_even,
            "edge": quote.edge,
            "ev_per_unit": quote.ev_per_unit,
        }))
    else:
        print(f"cover:      {_pct(quote.cover)}")
        print(f"push:       {_pct(quote.push)}")
        print(f"break-even: {_pct(quote.break_even)}")
        print(f"edge:       {100 * quote.edge:+.1f}%")
        print(f"EV/unit:    {quote.ev_per_unit:+.4f}")
    return EXIT_OK


def cmd_ingest(args) -> int:
    with open(args.data, encoding="utf-8", newline="") as fh:
        games = historical.ingest_games(fh)
    table = historical.empirical_differential_table(games)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(historical.differential_table_to_json(table), fh, indent=2)
        fh.write("\n")
    print(f"n_games: {table.n_games}")
    return EXIT_OK


def cmd_fit(args) -> int:
    if args.table is None:
        table = historical.shipped_differential_table()
    else:
        with open(args.table, encoding="utf-8") as fh:
            table = historical.differential_table_from_json(json.load(fh))
    report = historical.fit_sigma(table, args.grid_lo, args.grid_hi, args.step, args.loss)
    if args.output_format == "json":
        print(json.dumps({
            "best_sigma": report.best_sigma,
            "loss_at_best": report.loss_at_best,
            "loss_kind": report.loss_kind,
            "grid": [{"sigma": s, "loss": l} for s, l in report.grid],
        }))
    else:
        for sigma, loss in report.grid:
            print(f"sigma {sigma:7.3f}  {report.loss_kind} {loss:.8f}")
        print(f"best sigma: {report.best_sigma}")
    return EXIT_OK


def cmd_build(args) -> int:
    weights = _load_weights(args.weights)
    matrix = engine.build_matrix(weights, cell_sd=args.sd)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(engine.matrix_to_json(matrix), fh)
        fh.write("\n")
    print(f"wrote matrix: {matrix.cells.shape[1]} columns x {matrix.cells.shape[0]} margins")
    return EXIT_OK


def cmd_stats(args) -> int:
    with open(args.data, encoding="utf-8", newline="") as fh:
        games = historical.ingest_games(fh)
    band = historical.spread_band_stats(
        games, args.spread_lo, args.spread_hi, args.k_sd, args.sd_ref
    )
    cover = historical.binned_cover_rate(games, args.spread_lo, args.spread_hi, args.threshold)
    if args.output_format == "json":
        print(json.dumps({
            "band": {
                "count": band.count,
                "mean_margin": band.mean_margin,
                "sd_margin": band.sd_margin,
                "exceedance_rate": band.exceedance_rate,
            },
            "cover": {"rate": cover.rate, "n": cover.n},
        }))
    else:
        print(f"games in band:   {band.count}")
        if band.count:
            print(f"mean margin:     {band.mean_margin:.2f}")
            sd = "n/a" if band.sd_margin is None else f"{band.sd_margin:.2f}"
            print(f"sd margin:       {sd}")
            print(f"exceedance rate: {_pct(band.exceedance_rate)}")
        rate = "n/a (empty bin)" if cover.rate is None else _pct(cover.rate)
        print(f"cover rate:      {rate}  (n={cover.n})")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    weights = _load_weights(args.weights)
    app = create_app(weight_table=weights, cell_sd=args.sd)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    sock.bind((args.host, args.port))
    print(f"listening on {sock.getsockname()[0]}:{sock.getsockname()[1]}", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
