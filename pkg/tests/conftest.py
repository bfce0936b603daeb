"""Shared fixtures: utility constructors and a session-wide oracle cache.

Exhaustive sweeps at n=7 cost seconds each, and several test modules (the
oracle unit tests and the acceptance battery) look at the same cells, so
reports are memoized for the whole session.
"""

from fractions import Fraction

import pytest

from hsnet.oracle import exhaustive_optimum
from hsnet.payoff import UtilitySpec


def identity_u(beta=0) -> UtilitySpec:
    return UtilitySpec.linear(1, beta)


def square_u(beta=0) -> UtilitySpec:
    return UtilitySpec.power(2, beta)


def ratio_u(beta=0) -> UtilitySpec:
    return UtilitySpec.ratio_power(2, beta)


BETA_GRID = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5), Fraction(50))

_REPORTS = {}


@pytest.fixture(scope="session")
def oracle_report():
    """Memoized exhaustive_optimum, keyed by (n, utility)."""

    def get(n, u):
        key = (n, u.family, u.params, u.beta)
        if key not in _REPORTS:
            _REPORTS[key] = exhaustive_optimum(n, u)
        return _REPORTS[key]

    return get
