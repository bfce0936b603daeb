"""Exact two-phase primal simplex over rationals with Bland's rule.

Solves   min / max  c . x   subject to  A x (<=|==|>=) b,  x >= 0,
entirely in Fraction arithmetic.  Bland's smallest-index pivoting rule makes
cycling impossible, so termination needs no epsilon tuning; the price is a
few extra pivots, irrelevant at the matrix sizes this package works with.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class InfeasibleError(ArithmeticError):
    pass


class UnboundedError(ArithmeticError):
    pass


def solve_lp(c, rows, senses, rhs, maximize=False):
    """Solve the LP and return (x, objective_value) as exact rationals.

    c: objective coefficients (length nvars)
    rows/senses/rhs: constraints, senses drawn from '<=', '==', '>='
    Raises InfeasibleError or UnboundedError accordingly.
    """
    nvars = len(c)
    m = len(rows)
    if not (m == len(senses) == len(rhs)):
        raise ValueError("constraint arrays must have equal length")
    c = [Fraction(v) for v in c]
    if maximize:
        c = [-v for v in c]

    # Normalize to b >= 0 so the artificial/slack start is feasible.
    norm_rows, norm_senses, norm_rhs = [], [], []
    flip = {"<=": ">=", ">=": "<=", "==": "=="}
    for row, sense, b in zip(rows, senses, rhs):
        row = [Fraction(v) for v in row]
        b = Fraction(b)
        if len(row) != nvars:
            raise ValueError("constraint row length mismatch")
        if sense not in flip:
            raise ValueError(f"unknown sense {sense!r}")
        if b < 0:
            row = [-v for v in row]
            b = -b
            sense = flip[sense]
        norm_rows.append(row)
        norm_senses.append(sense)
        norm_rhs.append(b)

    # Column layout: structural | slack/surplus | artificial.
    slack_of = {}
    art_of = {}
    ncols = nvars
    for i, sense in enumerate(norm_senses):
        if sense in ("<=", ">="):
            slack_of[i] = ncols
            ncols += 1
    for i, sense in enumerate(norm_senses):
        if sense in (">=", "=="):
            art_of[i] = ncols
            ncols += 1

    tableau = []
    basis = []
    for i, (row, sense, b) in enumerate(zip(norm_rows, norm_senses, norm_rhs)):
        t = row + [ZERO] * (ncols - nvars) + [b]
        if sense == "<=":
            t[slack_of[i]] = ONE
            basis.append(slack_of[i])
        elif sense == ">=":
            t[slack_of[i]] = -ONE
            t[art_of[i]] = ONE
            basis.append(art_of[i])
        else:
            t[art_of[i]] = ONE
            basis.append(art_of[i])
        tableau.append(t)

    artificial = set(art_of.values())

    def pivot(prow, pcol):
        piv = tableau[prow][pcol]
        inv = ONE / piv
        tableau[prow] = [v * inv for v in tableau[prow]]
        prow_vals = tableau[prow]
        for r in range(m):
            if r == prow:
                continue
            factor = tableau[r][pcol]
            if factor:
                tableau[r] = [
                    v - factor * pv for v, pv in zip(tableau[r], prow_vals)
                ]
        basis[prow] = pcol

    def run(cost, allowed):
        # cost: full-length objective row (cost[j] for column j).  Returns the
        # optimal objective value for min cost.x over the current tableau.
        while True:
            # Reduced costs relative to the current basis.
            zrow = list(cost)
            for r, bv in enumerate(basis):
                cb = cost[bv]
                if cb:
                    row = tableau[r]
                    for j in range(ncols):
                        if row[j]:
                            zrow[j] -= cb * row[j]
            enter = -1
            for j in range(ncols):
                if j in allowed and zrow[j] < 0:
                    enter = j
                    break
            if enter < 0:
                obj = ZERO
                for r, bv in enumerate(basis):
                    obj += cost[bv] * tableau[r][-1]
                return obj
            leave = -1
            best = None
            for r in range(m):
                a = tableau[r][enter]
                if a > 0:
                    ratio = tableau[r][-1] / a
                    key = (ratio, basis[r])
                    if best is None or key < best:
                        best = key
                        leave = r
            if leave < 0:
                raise UnboundedError("objective unbounded")
            pivot(leave, enter)

    if artificial:
        phase1_cost = [ZERO] * ncols
        for j in artificial:
            phase1_cost[j] = ONE
        allowed = set(range(ncols))
        infeas = run(phase1_cost, allowed)
        if infeas != 0:
            raise InfeasibleError("no feasible point")
        # Drive leftover artificials out of the basis where possible.
        for r in range(m):
            if basis[r] in artificial:
                pcol = next(
                    (
                        j
                        for j in range(ncols)
                        if j not in artificial and tableau[r][j] != 0
                    ),
                    None,
                )
                if pcol is not None:
                    pivot(r, pcol)
        allowed = set(j for j in range(ncols) if j not in artificial)
    else:
        allowed = set(range(ncols))

    phase2_cost = c + [ZERO] * (ncols - nvars)
    obj = run(phase2_cost, allowed)
    x = [ZERO] * nvars
    for r, bv in enumerate(basis):
        if bv < nvars:
            x[bv] = tableau[r][-1]
    return x, (-obj if maximize else obj)
