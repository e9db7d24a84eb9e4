"""Finite q-binomial identity sides: pair sums, q-Vandermonde, Bressoud,
and the truncated Rogers-Ramanujan series.

Functions here build both sides of each identity as exact polynomials (or
truncated series); they never assume the identity they are meant to check.
Bilateral sums iterate j over the full range on which any factor can be
nonzero, relying on the out-of-range-is-zero convention of :func:`qbin`.

Exponent helpers (all integer-valued on integers):

    pent(j)  = j(3j-1)/2      pent2(j) = j(3j+1)/2
    rr5a(j)  = j(5j-1)/2      rr5b(j)  = j(5j-3)/2
"""

from __future__ import annotations

from .qbinom import qbin
from .qpoly import IntPoly, QSeries, ZERO, euler_series, one_minus_qpow, pochhammer_qq


def pent(j: int) -> int:
    """Generalized pentagonal exponent j(3j-1)/2."""
    return j * (3 * j - 1) // 2


def pent2(j: int) -> int:
    """Mirror pentagonal exponent j(3j+1)/2."""
    return j * (3 * j + 1) // 2


def rr5a(j: int) -> int:
    """Exponent j(5j-1)/2 of the first Rogers-Ramanujan theta sum."""
    return j * (5 * j - 1) // 2


def rr5b(j: int) -> int:
    """Exponent j(5j-3)/2 of the second Rogers-Ramanujan theta sum."""
    return j * (5 * j - 3) // 2


def _sign(j: int) -> int:
    return -1 if j & 1 else 1


def pair_sum(n: int, k: int, variant: str = "minus") -> IntPoly:
    """Alternating pentagonal pair sum over products of two q-binomials:

        sum_j (-1)^j q^{pent(j)} [n,k-j] [n,k+j]      (variant "minus")
        sum_j (-1)^j q^{pent2(j)} [n,k-j] [n,k+j]     (variant "plus")

    Both variants coincide (send j to -j) and evaluate to [n,k].
    """
    if variant == "minus":
        exponent = pent
    elif variant == "plus":
        exponent = pent2
    else:
        raise ValueError(f"unknown variant {variant!r}")
    total = ZERO
    for j in range(-k, k + 1):
        term = qbin(n, k - j) * qbin(n, k + j)
        if not term.is_zero:
            total = total + term.shift_scale(_sign(j), exponent(j))
    return total


def pair_sum_forms(n: int, k: int) -> tuple[IntPoly, IntPoly, IntPoly]:
    """The three equivalent pair-sum forms, all equal to [n,k]:

    1. sum_j (-1)^j q^{pent(j)}  [n,k-j] [n,k+j]
    2. sum_j (-1)^j q^{pent(j)}  [n,k-j] [n+1,k+j]
    3. sum_j (-1)^j q^{pent2(j)} [n,k-j] [n+1,k+j+1]

    Form 3's support reaches j = -k-1 (where [n+1, k+j+1] = [n+1, 0] = 1),
    so its loop starts one step lower.
    """
    form1 = pair_sum(n, k, "minus")
    form2 = ZERO
    for j in range(-k, k + 1):
        term = qbin(n, k - j) * qbin(n + 1, k + j)
        if not term.is_zero:
            form2 = form2 + term.shift_scale(_sign(j), pent(j))
    form3 = ZERO
    for j in range(-k - 1, k + 1):
        term = qbin(n, k - j) * qbin(n + 1, k + j + 1)
        if not term.is_zero:
            form3 = form3 + term.shift_scale(_sign(j), pent2(j))
    return form1, form2, form3


def involution_zero_sum(n: int, k: int) -> IntPoly:
    """sum_j (-1)^j q^{3j(j-1)/2} [n,k-j] [n,k+j-1].

    The terms cancel in pairs under the sign-reversing involution
    j <-> 1-j, so the value is identically zero; callers verify that.
    """
    total = ZERO
    for j in range(-k, k + 2):
        term = qbin(n, k - j) * qbin(n, k + j - 1)
        if not term.is_zero:
            total = total + term.shift_scale(_sign(j), 3 * j * (j - 1) // 2)
    return total


def shifted_pair_sum(n: int, k: int) -> IntPoly:
    """sum_j (-1)^j q^{j(3j-3)/2} [n,k-j] [n+1,k+j], which equals q^k [n,k]."""
    total = ZERO
    for j in range(-k, k + 1):
        term = qbin(n, k - j) * qbin(n + 1, k + j)
        if not term.is_zero:
            total = total + term.shift_scale(_sign(j), 3 * j * (j - 1) // 2)
    return total


def pair_sum_recurrence_check(n: int, k: int) -> bool:
    """Check the two contiguous relations satisfied by the pair sum
    (1 <= k <= n):

        S(n+1,k) = S(n,k) + q^{n-k+1} S(n,k-1)
        (1-q^{n-k}) S(n,k) = (1-q^n) S(n-1,k)      (only for n > k)
    """
    if not 1 <= k <= n:
        raise ValueError("recurrence check needs 1 <= k <= n")
    lhs = pair_sum(n + 1, k)
    rhs = pair_sum(n, k) + pair_sum(n, k - 1).shift_scale(1, n - k + 1)
    if lhs != rhs:
        return False
    if n > k:
        cleared_lhs = one_minus_qpow(n - k) * pair_sum(n, k)
        cleared_rhs = one_minus_qpow(n) * pair_sum(n - 1, k)
        if cleared_lhs != cleared_rhs:
            return False
    return True


def q_vandermonde(m: int, n: int, k: int) -> tuple[IntPoly, IntPoly]:
    """Both sides of the q-Vandermonde convolution:

        [m+n, k]  =  sum_j [m,j] [n,k-j] q^{(m-j)(k-j)}
    """
    lhs = qbin(m + n, k)
    rhs = ZERO
    for j in range(0, min(m, k) + 1):
        term = qbin(m, j) * qbin(n, k - j)
        if not term.is_zero:
            rhs = rhs + term.shift_scale(1, (m - j) * (k - j))
    return lhs, rhs


def q_vandermonde_diagonal(n: int, j: int) -> tuple[IntPoly, IntPoly]:
    """Both sides of the diagonal specialization:

        sum_{k >= |j|} q^{(k-j)(k+j)} [n,k-j] [n,k+j]  =  [2n, n-2j]
    """
    rhs = qbin(2 * n, n - 2 * j)
    lhs = ZERO
    for k in range(abs(j), n + 1):
        term = qbin(n, k - j) * qbin(n, k + j)
        if not term.is_zero:
            lhs = lhs + term.shift_scale(1, (k - j) * (k + j))
    return lhs, rhs


def bressoud_identity(n: int, variant: str = "first") -> tuple[IntPoly, IntPoly]:
    """Both sides of Bressoud's polynomial Rogers-Ramanujan identities:

        first:  sum_k q^{k^2}   [n,k]  =  sum_j (-1)^j q^{rr5a(j)} [2n,   n-2j]
        second: sum_k q^{k^2+k} [n,k]  =  sum_j (-1)^j q^{rr5b(j)} [2n+1, n+1-2j]
    """
    if variant == "first":
        lhs = ZERO
        for k in range(0, n + 1):
            lhs = lhs + qbin(n, k).shift_scale(1, k * k)
        rhs = ZERO
        for j in range(-(n // 2) - 1, n // 2 + 2):
            term = qbin(2 * n, n - 2 * j)
            if not term.is_zero:
                rhs = rhs + term.shift_scale(_sign(j), rr5a(j))
        return lhs, rhs
    if variant == "second":
        lhs = ZERO
        for k in range(0, n + 1):
            lhs = lhs + qbin(n, k).shift_scale(1, k * k + k)
        rhs = ZERO
        for j in range(-(n // 2) - 2, n // 2 + 2):
            term = qbin(2 * n + 1, n + 1 - 2 * j)
            if not term.is_zero:
                rhs = rhs + term.shift_scale(_sign(j), rr5b(j))
        return lhs, rhs
    raise ValueError(f"unknown variant {variant!r}")


def rr_sum_side(order: int, variant: str = "first") -> QSeries:
    """Truncated Rogers-Ramanujan sum side:

        first:  sum_k q^{k^2}   / (q;q)_k
        second: sum_k q^{k^2+k} / (q;q)_k

    A term enters iff its minimal exponent (k^2 resp. k^2+k) is at most the
    truncation order, which makes the result independent of any larger
    cutoff.
    """
    if variant == "first":
        lead = lambda k: k * k
    elif variant == "second":
        lead = lambda k: k * k + k
    else:
        raise ValueError(f"unknown variant {variant!r}")
    total = QSeries.zero(order)
    k = 0
    while lead(k) <= order:
        inv = QSeries.from_poly(pochhammer_qq(k), order).invert()
        total = total + inv.shift_scale(1, lead(k))
        k += 1
    return total


def rr_product_side(order: int, variant: str = "first") -> QSeries:
    """Truncated Rogers-Ramanujan product side:

        (1 / (q;q)_inf) * sum_{j in Z} (-1)^j q^{e(j)}

    with e = rr5a for the first variant and e = rr5b for the second; the
    bilateral theta sum keeps every j whose exponent fits the truncation.
    """
    if variant == "first":
        exponent = rr5a
    elif variant == "second":
        exponent = rr5b
    else:
        raise ValueError(f"unknown variant {variant!r}")
    theta = [0] * (order + 1)
    j = 0
    while True:
        hit = False
        for jj in ((j, -j) if j else (0,)):
            e = exponent(jj)
            if 0 <= e <= order:
                theta[e] += _sign(jj)
                hit = True
        if not hit and j > 0:
            break
        j += 1
    return euler_series(order).invert() * QSeries(theta)
