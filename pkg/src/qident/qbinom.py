"""Gaussian binomial coefficients [n,k] by three independent strategies.

All three agree on their common domain and that agreement is itself a test:

* :func:`qbin` -- shared memo table filled row-by-row with the recurrence
  [n,k] = [n-1,k] + q^(n-k) [n-1,k-1];
* :func:`qbin_alt` -- the companion recurrence [n,k] = q^k [n-1,k] + [n-1,k-1],
  memoized separately so the strategies stay independent;
* :func:`qbin_product` -- the product formula
  prod_{i=1..k} (1-q^(n-k+i)) / (1-q^i), with the denominator divided out
  exactly (a NotDivisible here is a bug by definition).

Out-of-range arguments (k < 0, k > n, or n < 0) yield the zero polynomial
rather than an error; every bilateral sum in the identity modules leans on
that convention.  Half-integer upper indices are resolved by flooring
toward minus infinity, see :func:`qbin_floor2`.
"""

from __future__ import annotations

import functools
import threading

from .qpoly import IntPoly, ONE, ZERO, one_minus_qpow, pochhammer_qq


class QBinomTable:
    """Lower-triangular memo of Gaussian binomials.

    Row n is built from row n-1 in one shot and appended only when complete,
    so concurrent readers never observe a half-built row; growth is
    serialized by a lock and rows are immutable afterwards.
    """

    def __init__(self) -> None:
        self._rows: list[list[IntPoly]] = [[ONE]]
        self._lock = threading.Lock()

    def ensure(self, n: int) -> None:
        """Fill the table up to and including row n."""
        if n < len(self._rows):
            return
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(self._rows)
                row = [ONE]
                for k in range(1, m):
                    row.append(prev[k] + prev[k - 1].shift_scale(1, m - k))
                row.append(ONE)
                self._rows.append(row)

    def get(self, n: int, k: int) -> IntPoly:
        """[n,k], or the zero polynomial outside 0 <= k <= n."""
        if n < 0 or k < 0 or k > n:
            return ZERO
        self.ensure(n)
        return self._rows[n][k]

    def __len__(self) -> int:
        return len(self._rows)


_TABLE = QBinomTable()


def qbin(n: int, k: int) -> IntPoly:
    """Gaussian binomial [n,k] from the shared table.

    >>> qbin(4, 2).pretty()
    '1+q+2q^2+q^3+q^4'
    >>> qbin(3, 5).is_zero and qbin(-1, 0).is_zero
    True
    """
    return _TABLE.get(n, k)


@functools.cache
def _alt_entry(n: int, k: int) -> IntPoly:
    if n < 0 or k < 0 or k > n:
        return ZERO
    if k == 0:
        return ONE
    return _alt_entry(n - 1, k).shift_scale(1, k) + _alt_entry(n - 1, k - 1)


def qbin_alt(n: int, k: int) -> IntPoly:
    """[n,k] via the q^k-weighted recurrence; independent of the table."""
    return _alt_entry(n, k)


def qbin_product(n: int, k: int) -> IntPoly:
    """[n,k] via the product formula with exact denominator division."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    num = ONE
    for i in range(1, k + 1):
        num = num * one_minus_qpow(n - k + i)
    return num.exact_div(pochhammer_qq(k))


def qbin_floor2(num2: int, k: int) -> IntPoly:
    """[floor(num2/2), k]: the doubled upper index num2 is halved, flooring
    toward minus infinity (so qbin_floor2(7, 2) = [3,2] and
    qbin_floor2(-1, 0) = 0)."""
    return qbin(num2 // 2, k)
