"""WZ-style telescoping certificate for the pair-sum recurrence.

The doubled summand

    A(n,k,j) = (-1)^j (q^{j(3j-1)/2} + q^{j(3j+1)/2}) [n,k-j] [n,k+j]

(the 1+q^j factor of the usual presentation folded into the two exponents,
which are nonnegative for every integer j) satisfies, for n > k, a
telescoping relation against a companion term B(n,k,j) whose denominator is
always (1-q^{n-k})(1-q^n).  Multiplying through by that denominator gives a
pure polynomial identity per j:

    (1-q^{n-k})(1-q^n) A(n,k,j) - (1-q^n)^2 A(n-1,k,j)
        = cleared_B(n,k,j) - cleared_B(n,k,j-1)

with

    cleared_B(n,k,j) = (-1)^j q^{3j(j+1)/2 + n-k} (1-q^{k-j}) (1-q^{n-k-j})
                       [n,k-j] [n,k+j].

Summing over j in [-k-1, k+1] telescopes the right side to zero (both ends
vanish through the binomial factors) and recovers the contiguous recurrence
(1-q^{n-k}) sum_j A(n,k,j) = (1-q^n) sum_j A(n-1,k,j).
"""

from __future__ import annotations

from dataclasses import dataclass

from .qbinom import qbin
from .qpoly import IntPoly, ZERO, monomial, one_minus_qpow

from .identities import pent, pent2, _sign


class InvalidDomain(ValueError):
    """Raised when the certificate is evaluated outside n > k >= 0."""


@dataclass(frozen=True, eq=False)
class CertTerm:
    """A rational term numerator/denominator in lowest-intent form.

    Terms compare by cross-multiplication, so equal values with different
    scalings of numerator and denominator still compare equal.
    """

    numerator: IntPoly
    denominator: IntPoly

    def __post_init__(self) -> None:
        if self.denominator.is_zero:
            raise InvalidDomain("certificate term with zero denominator")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CertTerm):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"CertTerm({self.numerator.pretty()!r}, {self.denominator.pretty()!r})"


def _domain(n: int, k: int) -> None:
    if not (n > k >= 0):
        raise InvalidDomain(f"certificate needs n > k >= 0, got n={n}, k={k}")


def wz_summand(n: int, k: int, j: int) -> IntPoly:
    """The doubled summand A(n,k,j); zero once j leaves [-k, k]."""
    base = qbin(n, k - j) * qbin(n, k + j)
    if base.is_zero:
        return ZERO
    weight = monomial(_sign(j), pent(j)) + monomial(_sign(j), pent2(j))
    return weight * base


def wz_certificate_term(n: int, k: int, j: int) -> CertTerm:
    """The companion term B(n,k,j) as numerator over the fixed denominator
    (1-q^{n-k})(1-q^n); requires n > k >= 0."""
    _domain(n, k)
    denominator = one_minus_qpow(n - k) * one_minus_qpow(n)
    base = qbin(n, k - j) * qbin(n, k + j)
    if base.is_zero:
        return CertTerm(ZERO, denominator)
    # base nonzero forces 0 <= k-j and k+j <= n, so both binomial-factor
    # exponents below are nonnegative, as is 3j(j+1)/2.
    numerator = (
        base
        * one_minus_qpow(k - j)
        * one_minus_qpow(n - k - j)
    ).shift_scale(_sign(j), 3 * j * (j + 1) // 2 + n - k)
    return CertTerm(numerator, denominator)


def telescoping_sides(n: int, k: int, j: int) -> tuple[IntPoly, IntPoly]:
    """Both sides of the cleared per-j telescoping identity (n > k >= 0)."""
    _domain(n, k)
    fa = one_minus_qpow(n - k) * one_minus_qpow(n)
    fb = one_minus_qpow(n) * one_minus_qpow(n)
    lhs = fa * wz_summand(n, k, j) - fb * wz_summand(n - 1, k, j)
    rhs = wz_certificate_term(n, k, j).numerator - wz_certificate_term(n, k, j - 1).numerator
    return lhs, rhs


def telescoped_recurrence_sides(n: int, k: int) -> tuple[IntPoly, IntPoly]:
    """Both sides of the recurrence obtained by summing the certificate:

        (1-q^{n-k}) sum_j A(n,k,j)  =  (1-q^n) sum_j A(n-1,k,j)
    """
    _domain(n, k)
    sum_n = ZERO
    sum_prev = ZERO
    for j in range(-k, k + 1):
        sum_n = sum_n + wz_summand(n, k, j)
        sum_prev = sum_prev + wz_summand(n - 1, k, j)
    return one_minus_qpow(n - k) * sum_n, one_minus_qpow(n) * sum_prev


def telescoping_check(n: int, k: int) -> bool:
    """Verify every per-j cleared identity for j in [-k-1, k+1] plus the
    telescoped recurrence; requires n > k >= 0."""
    _domain(n, k)
    for j in range(-k - 1, k + 2):
        lhs, rhs = telescoping_sides(n, k, j)
        if lhs != rhs:
            return False
    lhs, rhs = telescoped_recurrence_sides(n, k)
    return lhs == rhs
