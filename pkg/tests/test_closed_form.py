"""Closed-form bounds, mixing weights, and their internal identities."""

import random
from fractions import Fraction as F

import pytest

import hsnet.closed_form as cf
from hsnet.payoff import UtilitySpec

from conftest import identity_u, square_u, ratio_u


def test_threshold_examples():
    assert cf.topology_threshold(7, 0, identity_u()) == -1
    assert cf.topology_threshold(12, 0, square_u()) == 89
    # with only four connected nodes the threshold is f(3) - 2f(2)
    for u in (identity_u(3), square_u(1), ratio_u(2)):
        for n in (5, 9, 20):
            assert cf.topology_threshold(n, n - 4, u) == u.value(3) - 2 * u.value(2)
    with pytest.raises(cf.DomainError):
        cf.topology_threshold(6, 4, identity_u())


def test_threshold_form_equivalence_random():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(4, 25)
        s = rng.randint(0, n - 3)
        u = UtilitySpec.linear(
            F(rng.randint(1, 5), rng.randint(1, 3)), F(rng.randint(0, 9), rng.randint(1, 4))
        )
        x = n - s
        d = u.value(x - 1) + u.beta
        d1 = u.value(x - 2) + u.beta
        assert cf.topology_threshold(n, s, u) == (x - 3) * d - (x - 2) * d1 + u.beta


def test_component_guarantee_examples():
    assert cf.component_guarantee(8, 4, 0, identity_u(2), r_empty=True) == -4
    # cycle form at m=0: capture 3/(n-s), residual n-s-1
    assert cf.component_guarantee(4, 0, 0, identity_u(1), r_empty=False) == 0
    assert cf.component_guarantee(8, 2, 0, identity_u(1), r_empty=False) == F(-79, 19)
    with pytest.raises(cf.DomainError):
        cf.component_guarantee(8, 3, 0, identity_u(2), r_empty=True)
    with pytest.raises(cf.DomainError):
        cf.component_guarantee(7, 0, 4, identity_u(2), r_empty=False)


def test_component_guarantee_branch_agreement():
    for u in (identity_u(2), square_u(F(1, 2)), ratio_u(5)):
        for n in (4, 6, 8, 10):
            m = n // 2
            both = cf.component_guarantee(n, m, 0, u, r_empty=True)
            general = cf.component_guarantee(n, m, 0, u, r_empty=False)
            assert both == general


def test_cycle_form_of_component_guarantee():
    # at m=0 the guarantee is exactly the uniform-cycle payoff
    for u in (identity_u(1), square_u(2)):
        for n in (5, 8, 13):
            a = cf.component_guarantee(n, 0, 0, u, r_empty=False)
            assert a == F(3, n) * u.beta - (1 - F(3, n)) * u.value(n - 1)


def test_singleton_guarantee_examples():
    assert cf.singleton_guarantee(1, identity_u(7)) == 7
    assert cf.singleton_guarantee(4, identity_u(0)) == F(-3, 4)
    assert cf.singleton_guarantee(5, identity_u(1)) == F(-3, 5)
    with pytest.raises(cf.DomainError):
        cf.singleton_guarantee(0, identity_u())


def test_residual_seek_weight_examples():
    u = identity_u(1)
    assert cf.residual_seek_weight(8, 2, 0, u, r_empty=False) == F(7, 19)
    assert cf.residual_seek_weight(8, 4, 0, identity_u(2), r_empty=True) == 0
    assert cf.residual_seek_weight(8, 0, 0, u, r_empty=False) == 1  # no attachments


def test_equalized_guarantees_identity():
    # the residual weight makes both component-side guarantees equal to the
    # component guarantee, for any singleton weight
    for u in (identity_u(1), square_u(2), ratio_u(F(1, 2))):
        for (n, m, s) in [(8, 2, 0), (9, 1, 2), (12, 3, 1), (10, 2, 4)]:
            rho = cf.interior_seek_weight(n, m, s, u)
            a = cf.component_guarantee(n, m, s, u, r_empty=False)
            for lam_s in (F(0), F(1, 3)):
                lr = cf.guarantee_hiding_residual(n, m, s, u, rho, lam_s)
                lm = cf.guarantee_hiding_attachments(n, m, s, u, rho, lam_s)
                assert lr == lm == (1 - lam_s) * a - lam_s * u.value(n - s)


def test_singleton_seek_weight_branches():
    u = identity_u(2)
    assert cf.singleton_seek_weight(6, 0, 6, u) == 1
    assert cf.singleton_seek_weight(8, 4, 0, u) == 0
    # blended branch is a genuine probability strictly inside (0,1)
    w = cf.singleton_seek_weight(7, 2, 3, u)
    assert 0 < w < 1
    # third branch: component guarantee at or below -f(1)
    assert cf.singleton_seek_weight(8, 3, 2, identity_u(0)) == 0


def test_seeker_bound_examples():
    assert cf.seeker_bound(4, 2, 4, identity_u(0)) == F(-3, 4)  # all singles
    assert cf.seeker_bound(8, 4, 0, identity_u(2)) == -4
    u = identity_u(2)
    # blended value matches its weight form (checked internally too)
    q = cf.seeker_bound(7, 2, 3, u)
    lam = cf.singleton_seek_weight(7, 2, 3, u)
    a = cf.component_guarantee(7, 2, 3, u, r_empty=True)
    assert q == (1 - lam) * a - lam * u.value(4)
    for bad_s in (5, 6, 7):
        with pytest.raises(cf.DomainError):
            cf.seeker_bound(8, 0, bad_s, u)


def test_best_seeker_bound_branches():
    # threshold above beta: cycle branch (m = 0)
    assert cf.best_seeker_bound(12, 0, square_u(1)) == cf.seeker_bound(12, 0, 0, square_u(1))
    # below beta, even part: half leaves
    assert cf.best_seeker_bound(8, 0, identity_u(2)) == -4
    # below beta, odd part: (x-3)/2 leaves
    assert cf.best_seeker_bound(5, 0, identity_u(2)) == F(-8, 11)
    assert cf.best_seeker_bound(9, 9, identity_u(1)) == cf.singleton_guarantee(9, identity_u(1))


def test_bound_constant_at_threshold_tie():
    # square utility, four connected nodes: threshold equals beta at 1
    u = square_u(1)
    vals = {cf.seeker_bound(8, m, 4, u) for m in range(0, 3)}
    assert len(vals) == 1
    assert cf.best_seeker_bound(8, 4, u) == vals.pop()


def test_component_hide_weight_branches():
    u = identity_u(2)
    abar = cf.branch_component_guarantee(5, 0, u)
    assert cf.component_hide_weight(5, 0, u, abar) == 1  # no singletons
    # blended branch in (0,1) when the component guarantee beats -f(1)
    abar2 = cf.branch_component_guarantee(7, 3, u)
    k = cf.component_hide_weight(7, 3, u, abar2)
    assert 0 < k <= 1
    assert cf.component_hide_weight(9, 2, u, F(-10)) == 1  # deep component


def test_periphery_hide_weight_example():
    assert cf.periphery_hide_weight(9, 0, identity_u(10)) == F(51, 71)
    with pytest.raises(cf.DomainError):
        cf.periphery_hide_weight(8, 0, identity_u(10))
    with pytest.raises(cf.DomainError):
        cf.periphery_hide_weight(5, 2, identity_u(10))


def test_crowded_cp_bounds_example():
    x, y = cf.crowded_cp_bounds(9, 0, identity_u(10))
    assert x == F(-11, 4)
    assert x > cf.component_guarantee(9, 3, 0, identity_u(10), r_empty=False)
    assert y > cf.seeker_bound(9, 3, 0, identity_u(10))


def test_blend_monotone_random_pairs():
    rng = random.Random(123)
    for _ in range(300):
        n = rng.randint(5, 20)
        s = rng.randint(1, n - 4)
        u = identity_u(F(rng.randint(0, 10), rng.randint(1, 4)))
        z1 = F(rng.randint(-40, 40), rng.randint(1, 7))
        z2 = F(rng.randint(-40, 40), rng.randint(1, 7))
        if z1 == z2:
            continue
        lo, hi = min(z1, z2), max(z1, z2)
        assert cf.singleton_blend(lo, s, n, u) < cf.singleton_blend(hi, s, n, u)


def test_blend_fixed_point_and_identity_branch():
    u = identity_u(2)
    f1 = u.value(1)
    assert cf.singleton_blend(-f1, 3, 9, u) == -f1
    assert cf.singleton_blend(F(-5), 3, 9, u) == -5
    with pytest.raises(cf.DomainError):
        cf.singleton_blend(F(0), 0, 9, u)


def test_optimal_singleton_counts_examples():
    assert cf.optimal_singleton_counts(8, identity_u(2)) == ((0,), F(-4))
    counts, best = cf.optimal_singleton_counts(7, identity_u(50))
    assert counts == (7,) and best == F(44, 7)
    # tiny boards only admit the fully isolated design
    for n in (1, 2, 3):
        counts, _ = cf.optimal_singleton_counts(n, identity_u(1))
        assert counts == (n,)
    # a genuine tie is returned whole
    counts, _ = cf.optimal_singleton_counts(4, identity_u(1))
    assert counts == (0, 4)


def test_optimal_singleton_counts_small_boards_cap():
    # boards up to 5 nodes can only use 0, 1, or all isolated nodes
    for n in (4, 5):
        for u in (identity_u(0), identity_u(3), square_u(1), ratio_u(2)):
            counts, _ = cf.optimal_singleton_counts(n, u)
            assert set(counts) <= {0, 1, n}


def test_linear_even_bound_identities():
    u = identity_u(7)
    assert cf.linear_even_bound(9, 9, u) == cf.singleton_guarantee(9, u)
    for n in (6, 8, 10, 12):
        for s in range(0, n - 3):
            if (n - s) % 2 == 0:
                a_tilde = cf.component_guarantee(n, (n - s) // 2, s, u, r_empty=True)
                if a_tilde > -u.value(1):
                    assert cf.linear_even_bound(n, s, u) == cf.seeker_bound(
                        n, (n - s) // 2, s, u
                    )
    with pytest.raises(cf.DomainError):
        cf.linear_even_bound(8, 2, square_u(1))


def test_value_table_rows_domain():
    rows = cf.value_table_rows(8, identity_u(1))
    ss = {r.s for r in rows}
    assert ss == {0, 1, 2, 3, 4, 8}  # nothing in {n-3, n-2, n-1}
    for r in rows:
        if r.s == 8:
            assert r.threshold is None and r.component is None
        else:
            assert 0 <= r.m <= (8 - r.s) // 2
