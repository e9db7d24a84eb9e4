"""Sums with halved upper indices and their closed forms."""

import pytest

from qident.identities import rr_sum_side
from qident.qbinom import qbin
from qident.qpoly import ONE, ZERO
from qident.schur import (
    schur_core_sum,
    schur_identity,
    schur_offset_sum,
    schur_recursion_check,
    schur_shifted_sum,
    schur_vanishing_sum,
)


def test_core_sum_closed_form():
    for n in range(20):
        for k in range(n + 1):
            assert schur_core_sum(n, k) == qbin(n - k, k), (n, k)


def test_core_sum_spot_values():
    assert schur_core_sum(3, 1).coeffs == (1, 1)  # [2,1]
    assert schur_core_sum(0, 0) == ONE
    assert schur_core_sum(5, 2) == qbin(3, 2)


def test_core_sum_boundary_values():
    """The recursion's seed values: 1 on the k=0 edge, 0 just past the
    diagonal."""
    for n in range(16):
        assert schur_core_sum(n, 0) == ONE
    for k in range(1, 12):
        assert schur_core_sum(k, k) == ZERO
    for k in range(2, 12):
        assert schur_core_sum(k + 1, k) == ZERO
    # k=1 is genuinely outside that boundary pattern
    assert schur_core_sum(2, 1) == ONE


def test_shifted_sum_is_qk_times_core():
    for n in range(18):
        for k in range(n + 1):
            assert schur_shifted_sum(n, k) == schur_core_sum(n, k).shift_scale(1, k), (n, k)


def test_shifted_sum_spot():
    assert schur_shifted_sum(2, 1).coeffs == (0, 1)


def test_vanishing_sum_is_zero():
    for n in range(18):
        for k in range(n + 2):
            assert schur_vanishing_sum(n, k) == ZERO, (n, k)


def test_offset_sum_drops_both_indices():
    for n in range(1, 18):
        for k in range(1, n + 1):
            assert schur_offset_sum(n, k) == schur_core_sum(n - 1, k - 1), (n, k)


def test_recursion_holds():
    for n in range(1, 16):
        for k in range(1, n + 1):
            assert schur_recursion_check(n, k), (n, k)
    with pytest.raises(ValueError):
        schur_recursion_check(0, 1)
    with pytest.raises(ValueError):
        schur_recursion_check(3, 0)


def test_identity_first_spot_n4():
    lhs, rhs = schur_identity(4, "first")
    assert lhs.coeffs == (1, 1, 1, 1, 1)
    assert rhs.coeffs == (1, 1, 1, 1, 1)


def test_identity_second_spot_n3():
    lhs, rhs = schur_identity(3, "second")
    assert lhs.coeffs == (1, 0, 1)
    assert rhs.coeffs == (1, 0, 1)


def test_identity_sweeps():
    for n in range(18):
        for variant in ("first", "second_pre"):
            lhs, rhs = schur_identity(n, variant)
            assert lhs == rhs, (n, variant)
    for n in range(1, 18):
        lhs, rhs = schur_identity(n, "second")
        assert lhs == rhs, n


def test_identity_argument_validation():
    with pytest.raises(ValueError):
        schur_identity(0, "second")
    with pytest.raises(ValueError):
        schur_identity(3, "fourth")
    with pytest.raises(ValueError):
        schur_identity(3, "first", half_index="round")


def test_drop_convention_breaks_immediately():
    """Discarding half-integer-index terms instead of flooring them kills
    the identity at n=1 already: the only surviving term is dropped."""
    lhs, rhs = schur_identity(1, "first", half_index="drop")
    assert lhs == ONE
    assert rhs == ZERO
    # and the floor convention holds there
    lhs_f, rhs_f = schur_identity(1, "first", half_index="floor")
    assert lhs_f == rhs_f == ONE


def test_drop_convention_differs_on_even_sizes_too():
    lhs, rhs = schur_identity(4, "first", half_index="drop")
    assert lhs != rhs
    assert lhs.coeffs == (1, 1, 1, 1, 1)
    assert rhs == qbin(4, 2)  # only the j=0 term survives the parity filter


def test_first_identity_lhs_stabilizes_to_rr():
    """The gap-2 sum side converges coefficient-wise: for n >= 2N the head
    through q^N equals the full series."""
    order = 15
    target = rr_sum_side(order, "first")
    lhs, _ = schur_identity(2 * order, "first")
    assert lhs.to_series(order) == target
    lhs_bigger, _ = schur_identity(2 * order + 5, "first")
    assert lhs_bigger.to_series(order) == target
