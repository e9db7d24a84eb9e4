"""Telescoping certificate, checked entirely in cleared polynomial form."""

import pytest

from qident.certificate import (
    CertTerm,
    InvalidDomain,
    telescoped_recurrence_sides,
    telescoping_check,
    telescoping_sides,
    wz_certificate_term,
    wz_summand,
)
from qident.qbinom import qbin
from qident.qpoly import ONE, ZERO, IntPoly, one_minus_qpow


def test_summand_spot_values():
    # j=0 at (2,1): weight is q^0+q^0 = 2, base [2,1]^2 = (1+q)^2
    assert wz_summand(2, 1, 0).coeffs == (2, 4, 2)
    # outside the support the binomials kill the term
    assert wz_summand(2, 1, 2) == ZERO
    assert wz_summand(2, 1, -2) == ZERO


def test_summand_negative_j_is_polynomial():
    """Folding the (1+q^j) factor into two pentagonal-type exponents keeps
    every term a genuine polynomial, including j < 0."""
    p = wz_summand(5, 3, -2)
    assert not p.is_zero
    assert all(isinstance(c, int) for c in p.coeffs)


def test_summands_total_twice_the_binomial():
    for n in range(12):
        for k in range(n + 1):
            total = ZERO
            for j in range(-k, k + 1):
                total = total + wz_summand(n, k, j)
            assert total == 2 * qbin(n, k), (n, k)


def test_cert_term_cross_multiplied_equality():
    half = CertTerm(IntPoly([1]), IntPoly([2]))
    scaled = CertTerm(IntPoly([3]), IntPoly([6]))
    assert half == scaled
    assert CertTerm(ONE, ONE) != half


def test_cert_term_zero_denominator_rejected():
    with pytest.raises(InvalidDomain):
        CertTerm(ONE, ZERO)


def test_certificate_term_has_fixed_denominator():
    term = wz_certificate_term(5, 2, 1)
    assert term.denominator == one_minus_qpow(3) * one_minus_qpow(5)
    # out-of-support j keeps the denominator but zeroes the numerator
    assert wz_certificate_term(5, 2, 4).numerator == ZERO


def test_domain_enforced():
    for fn in (lambda: wz_certificate_term(3, 3, 0),
               lambda: telescoping_sides(2, 5, 0),
               lambda: telescoped_recurrence_sides(0, 0),
               lambda: telescoping_check(4, -1)):
        with pytest.raises(InvalidDomain):
            fn()
    # wz_summand alone has no domain restriction
    assert wz_summand(0, 0, 0).coeffs == (2,)


def test_per_j_telescoping_spot():
    """Hand-checked point (n,k,j) = (2,1,0): both sides 2q(1-q^2)^2."""
    lhs, rhs = telescoping_sides(2, 1, 0)
    expected = IntPoly([0, 2]) * one_minus_qpow(2) * one_minus_qpow(2)
    assert lhs == expected
    assert rhs == expected


def test_telescoping_sweep():
    for n in range(1, 13):
        for k in range(n):
            assert telescoping_check(n, k), (n, k)


def test_boundary_j_terms_vanish():
    """At j = -k-1 and j = k+1 the summand is zero, which is what lets the
    telescoped sum collapse."""
    for n in range(2, 10):
        for k in range(n):
            assert wz_summand(n, k, k + 1) == ZERO
            assert wz_summand(n, k, -k - 1) == ZERO


def test_recurrence_consequence_matches_direct_computation():
    for n in range(2, 12):
        for k in range(n):
            lhs, rhs = telescoped_recurrence_sides(n, k)
            assert lhs == one_minus_qpow(n - k) * (2 * qbin(n, k))
            assert rhs == one_minus_qpow(n) * (2 * qbin(n - 1, k))
            assert lhs == rhs
