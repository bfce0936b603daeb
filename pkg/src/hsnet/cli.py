"""Command-line driver.

Commands: solve a fixed graph, design an optimal network, tabulate the
closed-form bounds, brute-force verify at small n, enumerate graphs up to
isomorphism, and export graphs between formats.  All reports are exact
("p/q" rationals, sorted keys, stable byte-for-byte); floats only appear for
utility families with irrational parameters and are flagged.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .closed_form import value_table_rows
from .designer import design_optimal
from .graphs import (
    GraphFormatError,
    graph_from_json_dict,
    graph_to_json_dict,
    format_graph_text,
    parse_graph_text,
    to_dot,
)
from .matrix_game import solve_zero_sum
from .oracle import (
    DEFAULT_BETAS,
    DEFAULT_FAMILIES,
    EnumerationError,
    enumerate_graphs,
    verify_grid,
)
from .payoff import UtilityError, UtilitySpec, builtin_utilities, capture_probability, payoff_matrix
from .rationals import format_float, format_rational, parse_rational

USAGE_ERROR = 2
CHECK_FAILURE = 1


class CliError(Exception):
    pass


def _utility_from_args(args) -> UtilitySpec:
    if getattr(args, "utility", None):
        raw = args.utility
        if raw.startswith("@"):
            with open(raw[1:], "r", encoding="utf-8") as fh:
                raw = fh.read()
        try:
            return UtilitySpec.from_json_dict(json.loads(raw))
        except json.JSONDecodeError as exc:
            raise CliError(f"invalid utility JSON: {exc}") from exc
    beta = parse_rational(args.beta)
    params = {}
    if args.family == "linear":
        params["slope"] = args.slope
    elif args.family in ("power", "ratio_power"):
        params["gamma"] = args.gamma
    elif args.family == "table":
        if not args.table:
            raise CliError("--table is required for the table family")
        params["values"] = [v.strip() for v in args.table.split(",")]
    return builtin_utilities(args.family, params, beta)


def _add_utility_args(sub):
    sub.add_argument("--utility", help="utility spec as inline JSON or @file")
    sub.add_argument(
        "--family",
        default="linear",
        choices=["linear", "power", "ratio_power", "table"],
    )
    sub.add_argument("--beta", default="0", help="capture penalty, 'p/q'")
    sub.add_argument("--slope", default="1", help="slope for the linear family")
    sub.add_argument("--gamma", default="2", help="exponent for power families")
    sub.add_argument("--table", help="comma-separated values f(0),f(1),...")


def _numeric_renderer(u: UtilitySpec):
    if u.is_exact:
        return format_rational, False
    return (lambda x: format_float(float(x))), True


def _load_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return graph_from_json_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid graph JSON: {exc}")
    return parse_graph_text(text)


def _emit(args, payload: str):
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _emit_json(args, data: dict):
    _emit(args, json.dumps(data, sort_keys=True, indent=2) + "\n")


# -- commands ----------------------------------------------------------------


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    u = _utility_from_args(args)
    if g.node_count < 1:
        raise CliError("cannot solve a game on an empty graph")
    sol = solve_zero_sum(payoff_matrix(g, u))
    cap = capture_probability(g, sol.row_strategy, sol.col_strategy)
    num, inexact = _numeric_renderer(u)
    data = {
        "n": g.node_count,
        "value": num(sol.value),
        "hider_strategy": [num(p) for p in sol.row_strategy],
        "seeker_strategy": [num(p) for p in sol.col_strategy],
        "capture_probability": num(cap),
        "utility": u.to_json_dict(),
    }
    if inexact:
        data["float"] = True
    _emit_json(args, data)
    return 0


def cmd_design(args) -> int:
    u = _utility_from_args(args)
    if args.n < 1:
        raise CliError("--n must be at least 1")
    result = design_optimal(args.n, u)
    num, inexact = _numeric_renderer(u)
    data = result.to_json_dict()
    data["utility"] = u.to_json_dict()
    if inexact:
        data["float"] = True
        data["predicted_value"] = num(result.predicted_value)
        data["hider_strategy"] = [num(p) for p in result.hider]
        data["seeker_strategy"] = [num(p) for p in result.seeker]
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(result.to_dot())
    _emit_json(args, data)
    return 0


def cmd_value_table(args) -> int:
    u = _utility_from_args(args)
    n_lo = args.n
    n_hi = args.n_max if args.n_max is not None else args.n
    if n_lo < 1 or n_hi < n_lo:
        raise CliError("need 1 <= n <= n-max")
    num, _ = _numeric_renderer(u)

    def cell(x):
        return "" if x is None else num(x)

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "s", "m", "T", "A", "B", "rho", "lambda_S", "Q", "Qbar"])
    for n in range(n_lo, n_hi + 1):
        for row in value_table_rows(n, u):
            writer.writerow(
                [
                    row.n,
                    row.s,
                    row.m,
                    cell(row.threshold),
                    cell(row.component),
                    cell(row.singleton),
                    cell(row.residual_weight),
                    cell(row.singleton_weight),
                    cell(row.bound),
                    cell(row.best_bound),
                ]
            )
    _emit(args, buf.getvalue())
    return 0


def cmd_verify(args) -> int:
    families = tuple(f.strip() for f in args.families.split(","))
    betas = tuple(b.strip() for b in args.betas.split(","))
    cells, all_passed = verify_grid(
        args.n_max,
        families=families,
        betas=betas,
        long_run=args.long,
        mutate=args.mutate,
    )
    data = {"n_max": args.n_max, "all_passed": all_passed, "cells": cells}
    _emit_json(args, data)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["n", "family", "beta", "graphs", "best_value",
                 "closed_form_value", "value_match", "checks_passed", "cell_passed"]
            )
            for cell_data in cells:
                writer.writerow(
                    [
                        cell_data["n"],
                        cell_data["utility"]["family"],
                        cell_data["utility"]["beta"],
                        cell_data["graph_count"],
                        cell_data["best_value"],
                        cell_data["closed_form_value"],
                        cell_data["value_match"],
                        all(c["passed"] for c in cell_data["checks"]),
                        cell_data["cell_passed"],
                    ]
                )
    return 0 if all_passed else CHECK_FAILURE


def cmd_enumerate(args) -> int:
    graphs = enumerate_graphs(args.n)
    data = {"n": args.n, "count": len(graphs)}
    if not args.count_only:
        data["graphs"] = [graph_to_json_dict(g) for g in graphs]
    _emit_json(args, data)
    return 0


def cmd_export(args) -> int:
    g = _load_graph(args.graph)
    if args.format == "dot":
        _emit(args, to_dot(g))
    elif args.format == "json":
        _emit(args, json.dumps(graph_to_json_dict(g), sort_keys=True, indent=2) + "\n")
    else:
        _emit(args, format_graph_text(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsnet",
        description="Exact analysis of the hide-and-seek network design game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the game on a fixed graph")
    p.add_argument("--graph", required=True, help="graph file (text or JSON)")
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    _add_utility_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("design", help="construct an optimal network for n nodes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output")
    p.add_argument("--dot", help="also write a DOT rendering with node roles")
    _add_utility_args(p)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("value-table", help="CSV of the closed-form bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--output")
    _add_utility_args(p)
    p.set_defaults(func=cmd_value_table)

    p = sub.add_parser("verify", help="brute-force check of the design claims")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--families", default=",".join(DEFAULT_FAMILIES))
    p.add_argument("--betas", default=",".join(DEFAULT_BETAS))
    p.add_argument("--long", action="store_true", help="allow the n=8 sweep")
    p.add_argument(
        "--mutate",
        action="store_true",
        help="self-test: inject a wrong expected value; the run must fail",
    )
    p.add_argument("--output")
    p.add_argument("--csv", help="also write a one-line-per-cell summary CSV")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="all graphs on n nodes up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export", help="convert a graph file between formats")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=["dot", "json", "text"], default="dot")
    p.add_argument("--output")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphFormatError, UtilityError, EnumerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
