"""Finite pair-sum, convolution and truncated series identities."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qident.identities import (
    bressoud_identity,
    involution_zero_sum,
    pair_sum,
    pair_sum_forms,
    pair_sum_recurrence_check,
    pent,
    pent2,
    q_vandermonde,
    q_vandermonde_diagonal,
    rr5a,
    rr5b,
    rr_product_side,
    rr_sum_side,
    shifted_pair_sum,
)
from qident.oracles import rr_oracle_series
from qident.qbinom import qbin
from qident.qpoly import QSeries, ZERO


def test_exponent_helpers_frozen():
    assert [pent(j) for j in (-2, -1, 0, 1, 2)] == [7, 2, 0, 1, 5]
    assert [pent2(j) for j in (-2, -1, 0, 1, 2)] == [5, 1, 0, 2, 7]
    assert [rr5a(j) for j in (-2, -1, 0, 1, 2)] == [11, 3, 0, 2, 9]
    assert [rr5b(j) for j in (-2, -1, 0, 1, 2)] == [13, 4, 0, 1, 7]


@given(st.integers(min_value=-200, max_value=200))
def test_exponent_helpers_are_nonnegative_integers(j):
    for f in (pent, pent2, rr5a, rr5b):
        assert f(j) >= 0


def test_pent_swaps_under_negation():
    for j in range(-20, 21):
        assert pent(-j) == pent2(j)


def test_pair_sum_equals_gaussian_binomial():
    for n in range(14):
        for k in range(n + 1):
            assert pair_sum(n, k) == qbin(n, k), (n, k)


def test_pair_sum_variants_agree():
    """Substituting j -> -j swaps the two exponent conventions, so both
    must produce the same polynomial."""
    for n in range(12):
        for k in range(n + 1):
            assert pair_sum(n, k, "minus") == pair_sum(n, k, "plus")
    with pytest.raises(ValueError):
        pair_sum(3, 1, "times")


def test_pair_sum_spot_value():
    # n=2, k=1: j=0 gives [2,1]^2 = 1+2q+q^2, j=+-1 each subtract q^e*[2,0][2,2]
    assert pair_sum(2, 1).coeffs == (1, 1)
    assert qbin(2, 1).coeffs == (1, 1)


def test_all_three_forms_equal():
    for n in range(14):
        for k in range(n + 1):
            f1, f2, f3 = pair_sum_forms(n, k)
            expected = qbin(n, k)
            assert f1 == expected, (n, k, 1)
            assert f2 == expected, (n, k, 2)
            assert f3 == expected, (n, k, 3)


def test_involution_sum_vanishes():
    for n in range(14):
        for k in range(n + 2):
            assert involution_zero_sum(n, k) == ZERO, (n, k)


def test_shifted_pair_sum():
    for n in range(14):
        for k in range(n + 1):
            assert shifted_pair_sum(n, k) == qbin(n, k).shift_scale(1, k), (n, k)


def test_pair_sum_recurrences_hold():
    for n in range(1, 14):
        for k in range(1, n + 1):
            assert pair_sum_recurrence_check(n, k), (n, k)
    with pytest.raises(ValueError):
        pair_sum_recurrence_check(3, 0)
    with pytest.raises(ValueError):
        pair_sum_recurrence_check(2, 3)


def test_q_vandermonde_small_cube():
    for m in range(10):
        for n in range(10):
            for k in range(10):
                lhs, rhs = q_vandermonde(m, n, k)
                assert lhs == rhs, (m, n, k)


def test_q_vandermonde_spot():
    # [2+2, 2] = [2,0][2,2]q^4 + [2,1][2,1]q^1 + [2,2][2,0]q^0
    lhs, rhs = q_vandermonde(2, 2, 2)
    assert lhs == qbin(4, 2)
    assert rhs == qbin(4, 2)


def test_q_vandermonde_diagonal():
    for n in range(14):
        for j in range(-n - 2, n + 3):
            lhs, rhs = q_vandermonde_diagonal(n, j)
            assert lhs == rhs, (n, j)
            assert rhs == qbin(2 * n, n - 2 * j)


def test_bressoud_lhs_spot_n2():
    lhs, rhs = bressoud_identity(2, "first")
    assert lhs.coeffs == (1, 1, 1, 0, 1)
    assert rhs.coeffs == (1, 1, 1, 0, 1)


def test_bressoud_identity_sweep():
    for n in range(18):
        for variant in ("first", "second"):
            lhs, rhs = bressoud_identity(n, variant)
            assert lhs == rhs, (n, variant)
    with pytest.raises(ValueError):
        bressoud_identity(3, "zeroth")


def test_bressoud_lhs_coefficients_stabilize():
    """Once n >= N the first N+1 coefficients of the sum side stop moving
    and agree with the infinite series."""
    order = 20
    target = rr_sum_side(order, "first")
    for n in (order, order + 3):
        lhs, _ = bressoud_identity(n, "first")
        assert lhs.to_series(order) == target
    target2 = rr_sum_side(order, "second")
    lhs2, _ = bressoud_identity(order + 1, "second")
    assert lhs2.to_series(order) == target2


def test_rr_sum_side_head():
    assert rr_sum_side(6, "first").coeffs == (1, 1, 1, 1, 2, 2, 3)
    assert rr_sum_side(6, "second").coeffs == (1, 0, 1, 1, 1, 1, 2)
    assert rr_sum_side(0, "first").coeffs == (1,)
    with pytest.raises(ValueError):
        rr_sum_side(5, "third")


def test_rr_sum_equals_product():
    for variant in ("first", "second"):
        assert rr_sum_side(60, variant) == rr_product_side(60, variant), variant


def test_rr_sides_match_brute_force():
    for variant in ("first", "second"):
        assert rr_sum_side(45, variant) == rr_oracle_series(45, variant), variant


def test_rr_truncation_order_independence():
    """Computing at a higher order and truncating equals computing at the
    lower order directly; truncation policy leaks nowhere."""
    lo, hi = 25, 60
    for side in (rr_sum_side, rr_product_side):
        for variant in ("first", "second"):
            wide = side(hi, variant)
            narrow = side(lo, variant)
            assert narrow.coeffs == wide.coeffs[: lo + 1], (side.__name__, variant)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=30))
def test_rr_sides_agree_at_random_orders(order):
    assert rr_sum_side(order, "first") == rr_product_side(order, "first")
