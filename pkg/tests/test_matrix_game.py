"""Zero-sum solving: values, strategies, duality, regret certificates."""

import itertools
import random
from fractions import Fraction as F

import pytest

from hsnet.graphs import Graph
from hsnet.matrix_game import (
    MixedStrategy,
    best_response_gap,
    game_value,
    max_optimal_mass,
    solve_zero_sum,
    strategy_payoff,
)
from hsnet.payoff import payoff_matrix
from hsnet.designer import build_cycle

from conftest import identity_u, square_u


PENNIES = [[1, -1], [-1, 1]]


def test_matching_pennies():
    sol = solve_zero_sum(PENNIES)
    assert sol.value == 0
    assert sol.row_strategy == MixedStrategy.uniform(2)
    assert sol.col_strategy == MixedStrategy.uniform(2)
    assert best_response_gap(PENNIES, sol.row_strategy, sol.col_strategy) == (0, 0)


def test_one_by_one():
    assert solve_zero_sum([[F(-2)]]).value == -2
    assert game_value([[F(7, 3)]]) == F(7, 3)


def test_c4_value_zero():
    m = payoff_matrix(build_cycle(4), identity_u(1))
    sol = solve_zero_sum(m)
    assert sol.value == 0
    # cross-check the arithmetic the value decomposes into
    assert F(3, 4) * (-1) + F(1, 4) * 3 == 0


def test_pure_deviation_gap():
    gap = best_response_gap(PENNIES, MixedStrategy([1, 0]), MixedStrategy.uniform(2))
    assert gap == (0, 1)


def test_strategy_validation():
    with pytest.raises(ValueError):
        MixedStrategy([F(1, 2), F(1, 3)])
    with pytest.raises(ValueError):
        MixedStrategy([F(3, 2), F(-1, 2)])
    s = MixedStrategy.uniform_over([0, 2], 4)
    assert s.probs == (F(1, 2), 0, F(1, 2), 0)
    assert s.support() == (0, 2)


def test_scale_shift_covariance_random():
    rng = random.Random(42)
    for _ in range(30):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        m = [
            [F(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(nc)]
            for _ in range(nr)
        ]
        sol = solve_zero_sum(m)
        alpha, c = F(rng.randint(1, 5), rng.randint(1, 3)), F(rng.randint(-4, 4))
        m2 = [[alpha * v + c for v in row] for row in m]
        sol2 = solve_zero_sum(m2)
        assert sol2.value == alpha * sol.value + c
        # optimal strategies transfer both ways (value equality + zero regret)
        assert best_response_gap(m2, sol.row_strategy, sol.col_strategy) == (0, 0)
        assert best_response_gap(m, sol2.row_strategy, sol2.col_strategy) == (0, 0)


def test_duality_certificate_on_random_graphs():
    rng = random.Random(4)
    for _ in range(25):
        n = rng.randint(1, 6)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        g = Graph(n, edges)
        for u in (identity_u(rng.randint(0, 3)), square_u(F(1, 2))):
            m = payoff_matrix(g, u)
            sol = solve_zero_sum(m)
            assert best_response_gap(m, sol.row_strategy, sol.col_strategy) == (0, 0)
            assert strategy_payoff(m, sol.row_strategy, sol.col_strategy) == sol.value
            assert game_value(m) == sol.value


def test_zero_gap_certificate_every_graph_up_to_five():
    from hsnet.oracle import enumerate_graphs

    u = identity_u(F(3, 2))
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            m = payoff_matrix(g, u)
            sol = solve_zero_sum(m)
            assert best_response_gap(m, sol.row_strategy, sol.col_strategy) == (0, 0)


def test_zero_gap_certificate_sampled_larger_graphs():
    from hsnet.oracle import enumerate_graphs

    rng = random.Random(8)
    for n in (6, 7):
        graphs = enumerate_graphs(n)
        for g in rng.sample(graphs, 15):
            m = payoff_matrix(g, square_u(F(1, 2)))
            sol = solve_zero_sum(m)
            assert best_response_gap(m, sol.row_strategy, sol.col_strategy) == (0, 0)


def test_max_optimal_mass():
    assert max_optimal_mass(PENNIES, F(0), 0) == F(1, 2)
    # row 1 strictly dominated: no optimal strategy touches it
    m = [[1, 1], [0, 0]]
    assert max_optimal_mass(m, F(1), 1) == 0
    # multiple optima: either pure row can carry full mass
    m = [[2, 2], [2, 2]]
    assert max_optimal_mass(m, F(2), 0) == 1
    assert max_optimal_mass(m, F(2), 1) == 1


def test_dimension_checks():
    with pytest.raises(ValueError):
        best_response_gap(PENNIES, MixedStrategy.uniform(3), MixedStrategy.uniform(2))
    with pytest.raises(ValueError):
        solve_zero_sum([])
