"""Schur's polynomial family: halved-index pair sums and the polynomial
Rogers-Ramanujan identities built on [n-k, k].

The sums here put floor-halved upper indices into the q-binomials; the
halving always floors toward minus infinity (Python ``//``), and negative
floored indices fall into qbin's zero convention.  For the identity right
sides, whose *lower* index is a halved expression, an alternative "drop"
convention (skip terms whose halved index is not an integer) is available
behind a flag; only "floor" reproduces the closed forms.
"""

from __future__ import annotations

from .qbinom import qbin, qbin_floor2
from .qpoly import IntPoly, ZERO

from .identities import pent, rr5a, rr5b, _sign


def schur_core_sum(n: int, k: int) -> IntPoly:
    """sum_{j=-k..k} (-1)^j q^{pent(j)} [floor((n+j)/2), k-j] [floor((n-j+1)/2), k+j],
    which evaluates to [n-k, k]."""
    total = ZERO
    for j in range(-k, k + 1):
        term = qbin_floor2(n + j, k - j) * qbin_floor2(n - j + 1, k + j)
        if not term.is_zero:
            total = total + term.shift_scale(_sign(j), pent(j))
    return total


def schur_shifted_sum(n: int, k: int) -> IntPoly:
    """sum_j (-1)^j q^{j(3j-3)/2} [floor((n+j)/2), k-j] [floor((n-j+3)/2), k+j],
    which evaluates to q^k times the core sum."""
    total = ZERO
    for j in range(-k, k + 1):
        term = qbin_floor2(n + j, k - j) * qbin_floor2(n - j + 3, k + j)
        if not term.is_zero:
            total = total + term.shift_scale(_sign(j), 3 * j * (j - 1) // 2)
    return total


def schur_vanishing_sum(n: int, k: int) -> IntPoly:
    """sum_j (-1)^j q^{j(3j-3)/2} [floor((n+j)/2), k-j] [floor((n-j+1)/2), k+j-1],
    identically zero by the sign-reversing involution j <-> 1-j."""
    total = ZERO
    for j in range(-k, k + 2):
        term = qbin_floor2(n + j, k - j) * qbin_floor2(n - j + 1, k + j - 1)
        if not term.is_zero:
            total = total + term.shift_scale(_sign(j), 3 * j * (j - 1) // 2)
    return total


def schur_offset_sum(n: int, k: int) -> IntPoly:
    """sum_j (-1)^j q^{pent(j)} [floor((n+j+1)/2), k-j] [floor((n-j)/2), k+j-1],
    which evaluates to the core sum at (n-1, k-1)."""
    total = ZERO
    for j in range(-k, k + 2):
        term = qbin_floor2(n + j + 1, k - j) * qbin_floor2(n - j, k + j - 1)
        if not term.is_zero:
            total = total + term.shift_scale(_sign(j), pent(j))
    return total


def schur_recursion_check(n: int, k: int) -> bool:
    """Check the three-term recursion of the core sum S (n >= 1, k >= 1):

        S(n+2,k) = q^{2k} S(n,k) + q^k S(n-1,k-1) + S(n,k-1)

    and its closed-form counterpart

        [n+2-k, k] = q^{2k} [n-k,k] + q^k [n-k,k-1] + [n-k+1,k-1].
    """
    if n < 1 or k < 1:
        raise ValueError("recursion check needs n >= 1 and k >= 1")
    lhs = schur_core_sum(n + 2, k)
    rhs = (
        schur_core_sum(n, k).shift_scale(1, 2 * k)
        + schur_core_sum(n - 1, k - 1).shift_scale(1, k)
        + schur_core_sum(n, k - 1)
    )
    if lhs != rhs:
        return False
    closed_lhs = qbin(n + 2 - k, k)
    closed_rhs = (
        qbin(n - k, k).shift_scale(1, 2 * k)
        + qbin(n - k, k - 1).shift_scale(1, k)
        + qbin(n - k + 1, k - 1)
    )
    return closed_lhs == closed_rhs


def schur_identity(
    n: int, variant: str = "first", half_index: str = "floor"
) -> tuple[IntPoly, IntPoly]:
    """Both sides of Schur's polynomial Rogers-Ramanujan identities:

        first:      sum_k q^{k^2}   [n-k, k]    =  sum_j (-1)^j q^{rr5a(j)} [n,   (n+5j)/2]
        second_pre: sum_k q^{k^2+k} [n-k, k]    =  sum_j (-1)^j q^{rr5b(j)} [n+1, (n-5j+3)/2]
        second:     sum_k q^{k^2+k} [n-k-1, k]  =  sum_j (-1)^j q^{rr5b(j)} [n,   (n-5j+2)/2]
                    (second requires n >= 1)

    half_index selects what happens to right-side terms whose halved lower
    index is not an integer: "floor" floors it, "drop" skips the term.
    Only "floor" matches the left side everywhere.
    """
    if half_index not in ("floor", "drop"):
        raise ValueError(f"unknown half_index {half_index!r}")
    if variant == "first":
        upper, numer, exponent = n, (lambda j: n + 5 * j), rr5a
        lhs_terms = [(k * k, n - k, k) for k in range(0, n + 1)]
    elif variant == "second_pre":
        upper, numer, exponent = n + 1, (lambda j: n - 5 * j + 3), rr5b
        lhs_terms = [(k * k + k, n - k, k) for k in range(0, n + 1)]
    elif variant == "second":
        if n < 1:
            raise ValueError("second variant requires n >= 1")
        upper, numer, exponent = n, (lambda j: n - 5 * j + 2), rr5b
        lhs_terms = [(k * k + k, n - k - 1, k) for k in range(0, n)]
    else:
        raise ValueError(f"unknown variant {variant!r}")

    lhs = ZERO
    for shift, top, k in lhs_terms:
        term = qbin(top, k)
        if not term.is_zero:
            lhs = lhs + term.shift_scale(1, shift)

    rhs = ZERO
    bound = n // 5 + 2
    for j in range(-bound, bound + 1):
        num = numer(j)
        if half_index == "drop" and num % 2 != 0:
            continue
        term = qbin(upper, num // 2)
        if not term.is_zero:
            rhs = rhs + term.shift_scale(_sign(j), exponent(j))
    return lhs, rhs
