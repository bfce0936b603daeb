"""Exact solver for two-player zero-sum matrix games.

The row player maximizes, the column player minimizes.  Values and optimal
strategies are computed by the rational simplex on the standard normalized
formulation: after shifting the matrix to be strictly positive, the column
player's program  max sum(w), M w <= 1, w >= 0  and the row player's program
min sum(u), M^T u >= 1, u >= 0  share the optimum 1/value.  Both programs are
solved and their values asserted equal, which is an exact strong-duality
certificate for every solve.

Optimal strategies are generally not unique; callers should compare values
and regrets, never strategy vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import format_rational
from .simplex import solve_lp

ZERO = Fraction(0)
ONE = Fraction(1)


class MixedStrategy:
    """Probability vector over actions; exact, validated at construction."""

    __slots__ = ("probs",)

    def __init__(self, probs):
        probs = tuple(Fraction(p) for p in probs)
        if any(p < 0 for p in probs):
            raise ValueError("strategy probabilities must be nonnegative")
        if sum(probs, ZERO) != 1:
            raise ValueError("strategy probabilities must sum to exactly 1")
        self.probs = probs

    @staticmethod
    def uniform(n: int) -> "MixedStrategy":
        return MixedStrategy([Fraction(1, n)] * n)

    @staticmethod
    def uniform_over(indices, n: int) -> "MixedStrategy":
        idx = sorted(set(indices))
        if not idx:
            raise ValueError("uniform_over needs a nonempty index set")
        p = Fraction(1, len(idx))
        probs = [ZERO] * n
        for i in idx:
            probs[i] = p
        return MixedStrategy(probs)

    @staticmethod
    def from_weights(weights: dict, n: int) -> "MixedStrategy":
        probs = [ZERO] * n
        for i, w in weights.items():
            probs[i] += Fraction(w)
        return MixedStrategy(probs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p > 0)

    def to_pq(self) -> list[str]:
        return [format_rational(p) for p in self.probs]

    def __len__(self):
        return len(self.probs)

    def __getitem__(self, i):
        return self.probs[i]

    def __iter__(self):
        return iter(self.probs)

    def __eq__(self, other):
        return isinstance(other, MixedStrategy) and self.probs == other.probs

    def __hash__(self):
        return hash(self.probs)

    def __repr__(self):
        return f"MixedStrategy({[str(p) for p in self.probs]})"


@dataclass(frozen=True)
class GameSolution:
    """Value plus one optimal strategy per player (row = maximizer)."""

    value: Fraction
    row_strategy: MixedStrategy
    col_strategy: MixedStrategy

    def to_json_dict(self) -> dict:
        return {
            "value": format_rational(self.value),
            "row_strategy": self.row_strategy.to_pq(),
            "col_strategy": self.col_strategy.to_pq(),
        }


def _entries(matrix):
    # Accept a PayoffMatrix or a plain nested sequence.
    entries = getattr(matrix, "entries", matrix)
    rows = [tuple(Fraction(v) for v in row) for row in entries]
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("matrix rows must have equal length")
    return rows

def _positive_shift(rows):
    lo = min(min(r) for r in rows)
    shift = ONE - lo if lo < 1 else ZERO
    return [[v + shift for v in row] for row in rows], shift


def game_value(matrix) -> Fraction:
    """Value of the game for the row player (no strategies computed).

    Solves only the column player's slack-feasible program, which needs no
    phase-1 work; this is the fast path used by the graph enumerator.
    """
    rows, shift = _positive_shift(_entries(matrix))
    ncols = len(rows[0])
    w, total = solve_lp(
        c=[ONE] * ncols,
        rows=rows,
        senses=["<="] * len(rows),
        rhs=[ONE] * len(rows),
        maximize=True,
    )
    return ONE / total - shift


def solve_zero_sum(matrix) -> GameSolution:
    """Exact minimax value and one optimal strategy per player.

    The two players' programs are solved independently and must agree
    exactly; a mismatch would mean a solver bug, so it is asserted.
    """
    rows, shift = _positive_shift(_entries(matrix))
    nrows, ncols = len(rows), len(rows[0])

    w, col_total = solve_lp(
        c=[ONE] * ncols,
        rows=rows,
        senses=["<="] * nrows,
        rhs=[ONE] * nrows,
        maximize=True,
    )
    transposed = [[rows[r][k] for r in range(nrows)] for k in range(ncols)]
    u, row_total = solve_lp(
        c=[ONE] * nrows,
        rows=transposed,
        senses=[">="] * ncols,
        rhs=[ONE] * ncols,
        maximize=False,
    )
    if col_total != row_total:
        raise AssertionError("LP duality gap is nonzero; solver bug")
    shifted_value = ONE / col_total
    value = shifted_value - shift
    row_strategy = MixedStrategy([ui * shifted_value for ui in u])
    col_strategy = MixedStrategy([wk * shifted_value for wk in w])
    return GameSolution(value, row_strategy, col_strategy)


def strategy_payoff(matrix, row: MixedStrategy, col: MixedStrategy) -> Fraction:
    rows = _entries(matrix)
    if len(row) != len(rows) or len(col) != len(rows[0]):
        raise ValueError("strategy dimensions do not match the matrix")
    total = ZERO
    for h, r in enumerate(rows):
        ph = row[h]
        if ph:
            total += ph * sum(r[k] * col[k] for k in range(len(r)))
    return total


def best_response_gap(matrix, row: MixedStrategy, col: MixedStrategy):
    """(row regret, column regret): gain available to each player by the best
    pure deviation.  Both are zero exactly when (row, col) is an equilibrium."""
    rows = _entries(matrix)
    nrows, ncols = len(rows), len(rows[0])
    if len(row) != nrows or len(col) != ncols:
        raise ValueError("strategy dimensions do not match the matrix")
    current = strategy_payoff(rows, row, col)
    best_row = max(
        sum(rows[h][k] * col[k] for k in range(ncols)) for h in range(nrows)
    )
    best_col = min(
        sum(rows[h][k] * row[h] for h in range(nrows)) for k in range(ncols)
    )
    return best_row - current, current - best_col


def max_optimal_mass(matrix, value: Fraction, index: int) -> Fraction:
    """Largest probability any optimal row strategy can place on one action.

    Maximizes x[index] over the full polytope of optimal row strategies
    (sum to one, guarantee at least ``value`` against every column).  A zero
    answer certifies that no equilibrium uses the action at all.
    """
    rows = _entries(matrix)
    nrows, ncols = len(rows), len(rows[0])
    if not (0 <= index < nrows):
        raise ValueError("row index out of range")
    cons_rows = [[ONE] * nrows]
    senses = ["=="]
    rhs = [ONE]
    for k in range(ncols):
        cons_rows.append([rows[h][k] for h in range(nrows)])
        senses.append(">=")
        rhs.append(Fraction(value))
    c = [ZERO] * nrows
    c[index] = ONE
    x, best = solve_lp(c, cons_rows, senses, rhs, maximize=True)
    return best
