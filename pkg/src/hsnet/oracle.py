"""Brute-force verification: enumerate all small graphs, solve every game
exactly, and confirm the closed-form design claims.

For a node budget n the verifier walks every graph up to isomorphism,
computes the exact game value of each, and checks that

* the best achievable hider value equals minus the minimum closed-form
  seeker bound over admissible isolated-node counts;
* the constructed optimal design is among the argmax graphs;
* argmax graphs never contain 2- or 3-node components;
* in the core-periphery regime the connected part of every argmax graph is
  a maximal core-periphery layout, and in the cycle regime it is
  2-connected with enough degree-2 nodes and the hider avoids busier nodes.

Enumeration is exact up to n = 8 (the n = 8 sweep is long and sits behind an
explicit flag).  Independent games are solved in parallel when HSNET_THREADS
asks for more than one worker; results do not depend on the worker count.
"""

from __future__ import annotations

import dataclasses
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import closed_form as cf
from .designer import design_optimal, is_maximal_core_periphery
from .graphs import (
    Graph,
    canonical_form,
    components,
    graph_from_canonical_key,
    graph_to_json_dict,
    induced_subgraph,
    is_two_connected,
)
from .matrix_game import game_value, max_optimal_mass, solve_zero_sum
from .payoff import UtilitySpec, capture_set, residual_component_sizes
from .rationals import format_rational

ENUMERATION_LIMIT = 8
DEFAULT_LIMIT = 7

# Probing every optimal strategy (not just the solver's vertex) is done via
# per-node mass maximization; kept to small boards where the LP count stays
# negligible.
FULL_SUPPORT_CHECK_LIMIT = 6


class EnumerationError(ValueError):
    pass


@lru_cache(maxsize=None)
def _representative_keys(n: int) -> tuple:
    if n == 0:
        return ((0, 0),)
    keys = set()
    for smaller in _representative_keys(n - 1):
        g = graph_from_canonical_key(smaller)
        base = list(g.edges)
        for mask in range(1 << (n - 1)):
            extra = [(j, n - 1) for j in range(n - 1) if mask >> j & 1]
            keys.add(canonical_form(Graph(n, base + extra)))
    return tuple(sorted(keys))


def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n nodes up to isomorphism, canonical representatives in
    a deterministic order."""
    if n < 0 or n > ENUMERATION_LIMIT:
        raise EnumerationError(
            f"enumeration supports 0 <= n <= {ENUMERATION_LIMIT}, got {n}"
        )
    return tuple(graph_from_canonical_key(k) for k in _representative_keys(n))


def hider_value(g: Graph, u: UtilitySpec) -> Fraction:
    """Exact game value of one graph (hider's payoff)."""
    return game_value(_matrix_rows(g, u))


def _matrix_rows(g: Graph, u: UtilitySpec):
    n = g.node_count
    caps = [capture_set(g, k) for k in range(n)]
    sizes = [residual_component_sizes(g, k) for k in range(n)]
    caught = -u.beta
    return [
        [caught if caps[k] >> h & 1 else u.value(sizes[k][h]) for k in range(n)]
        for h in range(n)
    ]


def _values_chunk(args):
    graphs, u = args
    return [hider_value(g, u) for g in graphs]


def _worker_count() -> int:
    raw = os.environ.get("HSNET_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class StructuralCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class EnumerationReport:
    """Outcome of one exhaustive sweep at fixed (n, utility)."""

    n: int
    utility: UtilitySpec
    graph_count: int
    best_value: Fraction
    argmax_keys: tuple
    closed_form_value: Fraction
    value_match: bool
    structural_checks: tuple = ()

    @property
    def argmax_graphs(self) -> tuple[Graph, ...]:
        return tuple(graph_from_canonical_key(k) for k in self.argmax_keys)

    def all_passed(self) -> bool:
        return self.value_match and all(c.passed for c in self.structural_checks)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "utility": self.utility.to_json_dict(),
            "graph_count": self.graph_count,
            "best_value": format_rational(self.best_value),
            "closed_form_value": format_rational(self.closed_form_value),
            "value_match": self.value_match,
            "argmax_graphs": [
                graph_to_json_dict(g) for g in self.argmax_graphs
            ],
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.structural_checks
            ],
        }


def exhaustive_optimum(
    n: int, u: UtilitySpec, long_run: bool = False, with_checks: bool = True
) -> EnumerationReport:
    """Solve every graph on n nodes and compare against the closed forms."""
    if n > DEFAULT_LIMIT and not long_run:
        raise EnumerationError(
            f"n={n} exceeds the default bound {DEFAULT_LIMIT}; pass long_run=True"
        )
    graphs = enumerate_graphs(n)
    workers = min(_worker_count(), len(graphs))
    if workers > 1:
        chunk = math.ceil(len(graphs) / workers)
        pieces = [
            (graphs[i : i + chunk], u) for i in range(0, len(graphs), chunk)
        ]
        values: list[Fraction] = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_values_chunk, pieces):
                values.extend(part)
    else:
        values = [hider_value(g, u) for g in graphs]
    best = max(values)
    argmax_keys = tuple(
        sorted(canonical_form(g) for g, v in zip(graphs, values) if v == best)
    )
    expected = -cf.optimal_singleton_counts(n, u)[1]
    report = EnumerationReport(
        n=n,
        utility=u,
        graph_count=len(graphs),
        best_value=best,
        argmax_keys=argmax_keys,
        closed_form_value=expected,
        value_match=best == expected,
    )
    if with_checks:
        report = dataclasses.replace(
            report, structural_checks=tuple(check_structure(report))
        )
    return report


# -- structural checks -------------------------------------------------------


def _non_singleton_part(g: Graph):
    keep = [v for v in range(g.node_count) if g.degree(v) > 0]
    return induced_subgraph(g, keep)


def check_structure(report: EnumerationReport, checks=None) -> list[StructuralCheck]:
    """Named pass/fail results over every argmax graph of a report.

    ``checks`` optionally restricts to a subset of check names.
    """
    u = report.utility
    n = report.n
    beta = u.beta
    argmax = report.argmax_graphs
    wanted = set(checks) if checks is not None else None
    out = []

    def emit(name, passed, detail=""):
        if wanted is None or name in wanted:
            out.append(StructuralCheck(name, passed, detail))

    bad_small = []
    bad_s = []
    for g in argmax:
        sizes = components(g).sizes()
        if any(size in (2, 3) for size in sizes):
            bad_small.append(g)
        s = len(g.isolated_nodes())
        if not (s <= n - 4 or s == n):
            bad_s.append(g)
    emit(
        "no_small_components",
        not bad_small,
        f"{len(bad_small)} argmax graphs with a 2- or 3-node component",
    )
    emit(
        "singleton_count_range",
        not bad_s,
        f"{len(bad_s)} argmax graphs with s in {{n-3, n-2, n-1}}",
    )

    counts = sorted({len(g.isolated_nodes()) for g in argmax})
    star = sorted(cf.optimal_singleton_counts(n, u)[0])
    emit(
        "optimal_singleton_sets_agree",
        counts == star,
        f"argmax singleton counts {counts} vs closed form {star}",
    )

    design = design_optimal(n, u)
    emit(
        "constructed_design_in_argmax",
        canonical_form(design.graph) in set(report.argmax_keys),
        f"design topology {design.topology}",
    )

    cp_fail = []
    cyc_fail = []
    support_fail = []
    for g in argmax:
        s = len(g.isolated_nodes())
        if s == n or s > n - 4:
            continue
        t = cf.topology_threshold(n, s, u)
        part = _non_singleton_part(g)
        if t < beta:
            if not is_maximal_core_periphery(part):
                cp_fail.append(g)
        elif t > beta:
            ok = is_two_connected(part)
            deg2 = sum(1 for v in range(part.node_count) if part.degree(v) == 2)
            ok = ok and deg2 >= math.ceil((n - s) / 3)
            if not ok:
                cyc_fail.append(g)
            else:
                sol = solve_zero_sum(_matrix_rows(g, u))
                busy = [v for v in range(g.node_count) if g.degree(v) > 2]
                if any(sol.row_strategy[v] != 0 for v in busy):
                    support_fail.append(g)
                elif n <= FULL_SUPPORT_CHECK_LIMIT:
                    rows = _matrix_rows(g, u)
                    for v in busy:
                        if max_optimal_mass(rows, sol.value, v) != 0:
                            support_fail.append(g)
                            break
    emit(
        "cp_regime_unique_topology",
        not cp_fail,
        f"{len(cp_fail)} argmax graphs not maximal core-periphery",
    )
    emit(
        "cycle_regime_structure",
        not cyc_fail,
        f"{len(cyc_fail)} argmax graphs not 2-connected with enough degree-2 nodes",
    )
    emit(
        "hider_avoids_busy_nodes",
        not support_fail,
        f"{len(support_fail)} argmax graphs with optimal mass on degree>2 nodes",
    )
    return out


# -- grid driver --------------------------------------------------------------


DEFAULT_FAMILIES = ("linear", "power")
DEFAULT_BETAS = ("0", "1/2", "1", "2", "5", "50")


def grid_utilities(families=DEFAULT_FAMILIES, betas=DEFAULT_BETAS):
    from .rationals import parse_rational

    cells = []
    for fam in families:
        for b in betas:
            beta = parse_rational(b)
            if fam == "linear":
                u = UtilitySpec.linear(1, beta)
            elif fam == "power":
                u = UtilitySpec.power(2, beta)
            elif fam == "ratio_power":
                u = UtilitySpec.ratio_power(2, beta)
            else:
                raise EnumerationError(f"unknown grid family {fam!r}")
            cells.append((fam, beta, u))
    return cells


def verify_grid(
    n_max: int,
    families=DEFAULT_FAMILIES,
    betas=DEFAULT_BETAS,
    long_run: bool = False,
    mutate: bool = False,
):
    """Run the verifier over n in 4..n_max and the utility grid.

    Returns (cells, all_passed); each cell is a dict ready for JSON.  With
    ``mutate`` the expected value is deliberately shifted by one, which must
    make every cell fail; it exists to prove the harness can catch errors.
    """
    limit = ENUMERATION_LIMIT if long_run else DEFAULT_LIMIT
    if n_max < 4:
        raise EnumerationError("verification needs n_max >= 4")
    if n_max > limit:
        raise EnumerationError(f"n_max={n_max} above limit {limit}")
    cells = []
    all_passed = True
    for n in range(4, n_max + 1):
        for fam, beta, u in grid_utilities(families, betas):
            report = exhaustive_optimum(n, u, long_run=long_run)
            data = report.to_json_dict()
            if mutate:
                shifted = report.closed_form_value + 1
                data["closed_form_value"] = format_rational(shifted)
                data["value_match"] = report.best_value == shifted
            data["cell_passed"] = data["value_match"] and all(
                c["passed"] for c in data["checks"]
            )
            all_passed = all_passed and data["cell_passed"]
            cells.append(data)
    return cells, all_passed
