"""Exact polynomial and truncated power-series arithmetic in the variable q.

Everything in this package reduces to two value types defined here:

* :class:`IntPoly` -- a polynomial in q with arbitrary-precision integer
  coefficients, stored densely by exponent and kept canonical (no trailing
  zero coefficients), so ``==`` is mathematical equality.
* :class:`QSeries` -- a formal power series truncated at a fixed order:
  coefficients of q^0 .. q^order are exact, everything above is discarded.
  Arithmetic refuses to mix truncation orders rather than guess.

There is no floating point anywhere; all results are exact.  Multiplication
dispatches between schoolbook convolution (small operands) and an exact
big-integer packing of the coefficient vectors (large operands).  The packed
path is plain integer multiplication on Python ints, so it stays exact for
any coefficient size.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class QPolyError(Exception):
    """Base class for arithmetic errors raised by this module."""


class DivisionByZero(QPolyError, ZeroDivisionError):
    """Raised when dividing by the zero polynomial."""


class NotDivisible(QPolyError):
    """Raised by exact division when the quotient would not be a polynomial."""


class NotInvertible(QPolyError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


class OrderMismatch(QPolyError):
    """Raised when combining two QSeries truncated at different orders."""


# Below this many coefficients (on the smaller operand) plain schoolbook
# convolution beats the packing overhead; measured on CPython 3.10.
_PACK_CUTOFF = 25


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    """Exact convolution of two nonempty coefficient tuples."""
    if min(len(a), len(b)) < _PACK_CUTOFF:
        return _convolve_schoolbook(a, b)
    return _convolve_packed(a, b)


def _convolve_schoolbook(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _convolve_packed(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    """Convolution via evaluation at 2**W (Kronecker substitution).

    Coefficient vectors are packed into single big integers with limbs wide
    enough that no convolution entry can overflow into its neighbour, the two
    ints are multiplied, and signed limbs are read back after adding a bias
    that makes every limb nonnegative.  Exact for arbitrary magnitudes.
    """
    amax = max(map(abs, a))
    bmax = max(map(abs, b))
    if amax == 0 or bmax == 0:
        return [0] * (len(a) + len(b) - 1)
    # |entry| <= amax*bmax*min(len) < 2**(W-1); +2 bits pad the sign headroom.
    bound = amax * bmax * min(len(a), len(b))
    limb = (bound.bit_length() + 2 + 7) // 8
    width = 8 * limb

    def pack(cs: tuple[int, ...]) -> int:
        pos = bytearray(len(cs) * limb)
        neg = bytearray(len(cs) * limb)
        for i, c in enumerate(cs):
            if c > 0:
                pos[i * limb:(i + 1) * limb] = c.to_bytes(limb, "little")
            elif c < 0:
                neg[i * limb:(i + 1) * limb] = (-c).to_bytes(limb, "little")
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    n = len(a) + len(b) - 1
    half = 1 << (width - 1)
    bias = ((1 << (n * width)) - 1) // ((1 << width) - 1) * half
    raw = (pack(a) * pack(b) + bias).to_bytes(n * limb, "little")
    return [
        int.from_bytes(raw[i * limb:(i + 1) * limb], "little") - half
        for i in range(n)
    ]


class IntPoly:
    """Dense polynomial in q over the integers, canonical and immutable.

    ``coeffs[i]`` is the coefficient of q^i; trailing zeros are stripped on
    construction, and the zero polynomial is the empty tuple.

    >>> p = IntPoly([1, 1])
    >>> p * p
    IntPoly('1+2q+q^2')
    >>> (p * p - IntPoly([0, 2])).pretty()
    '1+q^2'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else float("-inf")

    def coeff(self, i: int) -> int:
        """Coefficient of q^i (0 outside the stored range)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self._coeffs])

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly((other,)) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return self.shift_scale(other, 0)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return _ZERO
        return IntPoly(_convolve(self._coeffs, other._coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power wants a nonnegative integer")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift_scale(self, c: int, m: int = 0) -> IntPoly:
        """Return c * q^m * self (m must be nonnegative)."""
        if m < 0:
            raise ValueError("shift exponent must be nonnegative")
        if c == 0 or not self._coeffs:
            return _ZERO
        if c == 1:
            return IntPoly((0,) * m + self._coeffs)
        return IntPoly((0,) * m + tuple(c * x for x in self._coeffs))

    def exact_div(self, other: IntPoly) -> IntPoly:
        """Quotient self/other when the division is exact.

        Raises :class:`DivisionByZero` for a zero divisor and
        :class:`NotDivisible` when any remainder would be left.

        >>> IntPoly([-1, 0, 1]).exact_div(IntPoly([-1, 1])).pretty()
        '1+q'
        """
        if not other._coeffs:
            raise DivisionByZero("division by the zero polynomial")
        if not self._coeffs:
            return _ZERO
        if len(self._coeffs) < len(other._coeffs):
            raise NotDivisible("divisor degree exceeds dividend degree")
        rem = list(self._coeffs)
        div = other._coeffs
        lead = div[-1]
        steps = len(rem) - len(div)
        out = [0] * (steps + 1)
        for i in range(steps, -1, -1):
            c = rem[i + len(div) - 1]
            if c == 0:
                continue
            qc, rc = divmod(c, lead)
            if rc:
                raise NotDivisible("leading coefficient does not divide")
            out[i] = qc
            for j, d in enumerate(div):
                rem[i + j] -= qc * d
        if any(rem):
            raise NotDivisible("nonzero remainder")
        return IntPoly(out)

    def eval_at(self, x: int) -> int:
        """Evaluate at an integer point by Horner's rule.

        >>> IntPoly([1, 1, 2, 1, 1]).eval_at(1)
        6
        """
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def to_series(self, order: int) -> QSeries:
        """Truncate to a QSeries; coefficients 0..order are kept exactly."""
        return QSeries.from_poly(self, order)

    def pretty(self) -> str:
        """Human-readable form like ``1+q+2q^2`` (ascending exponents)."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{i}" if mag == 1 else f"{mag}q^{i}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({self.pretty()!r})"


_ZERO = IntPoly()
_ONE = IntPoly((1,))

ZERO = _ZERO
ONE = _ONE
Q = IntPoly((0, 1))


def monomial(c: int, m: int) -> IntPoly:
    """The monomial c * q^m."""
    if m < 0:
        raise ValueError("monomial exponent must be nonnegative")
    if c == 0:
        return _ZERO
    return IntPoly((0,) * m + (c,))


def one_minus_qpow(m: int) -> IntPoly:
    """The binomial 1 - q^m; for m = 0 this is the zero polynomial."""
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    if m == 0:
        return _ZERO
    return IntPoly((1,) + (0,) * (m - 1) + (-1,))


def pochhammer_qq(k: int) -> IntPoly:
    """The q-Pochhammer product (1-q)(1-q^2)...(1-q^k); empty product is 1.

    >>> pochhammer_qq(2).pretty()
    '1-q-q^2+q^3'
    """
    if k < 0:
        raise ValueError("pochhammer index must be nonnegative")
    cs = [1]
    for i in range(1, k + 1):
        nxt = cs + [0] * i
        for j, c in enumerate(cs):
            if c:
                nxt[j + i] -= c
        cs = nxt
    return IntPoly(cs)


class QSeries:
    """Power series truncated at a fixed order; coeffs has length order+1.

    >>> euler_series(5).coeffs
    (1, -1, -1, 0, 0, 1)
    >>> (euler_series(5) * euler_series(5).invert()).coeffs
    (1, 0, 0, 0, 0, 0)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]) -> None:
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a QSeries needs at least the q^0 coefficient")
        self._coeffs = cs

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls((1,) + (0,) * order)

    @classmethod
    def from_poly(cls, p: IntPoly, order: int) -> QSeries:
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        return cls(tuple(p.coeff(i) for i in range(order + 1)))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> int:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} outside truncation order {self.order}")
        return self._coeffs[i]

    def _check_order(self, other: QSeries) -> None:
        if len(self._coeffs) != len(other._coeffs):
            raise OrderMismatch(
                f"cannot combine series of orders {self.order} and {other.order}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(("QSeries", self._coeffs))

    def __add__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_order(other)
        return QSeries(tuple(a + b for a, b in zip(self._coeffs, other._coeffs)))

    def __sub__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_order(other)
        return QSeries(tuple(a - b for a, b in zip(self._coeffs, other._coeffs)))

    def __neg__(self) -> QSeries:
        return QSeries(tuple(-c for c in self._coeffs))

    def __mul__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_order(other)
        n = len(self._coeffs)
        full = _convolve(self._coeffs, other._coeffs)
        return QSeries(tuple(full[:n]))

    def shift_scale(self, c: int, m: int = 0) -> QSeries:
        """Return c * q^m * self truncated at the same order."""
        if m < 0:
            raise ValueError("shift exponent must be nonnegative")
        n = len(self._coeffs)
        if m >= n or c == 0:
            return QSeries.zero(self.order)
        head = tuple(c * x for x in self._coeffs[: n - m])
        return QSeries((0,) * m + head)

    def invert(self) -> QSeries:
        """Multiplicative inverse as a truncated series.

        Only defined when the constant term is +1 or -1 (the only integer
        units); anything else raises :class:`NotInvertible`.
        """
        c0 = self._coeffs[0]
        if c0 not in (1, -1):
            raise NotInvertible("series constant term must be +1 or -1")
        n = len(self._coeffs)
        inv = [c0] + [0] * (n - 1)
        for m in range(1, n):
            s = 0
            for i in range(1, m + 1):
                ai = self._coeffs[i]
                if ai:
                    s += ai * inv[m - i]
            inv[m] = -c0 * s
        return QSeries(inv)

    def pretty(self) -> str:
        body = IntPoly(self._coeffs).pretty()
        return f"{body} + O(q^{self.order + 1})"

    def __repr__(self) -> str:
        return f"QSeries({self.pretty()!r})"


def euler_series(order: int) -> QSeries:
    """Truncation of the Euler product (1-q)(1-q^2)(1-q^3)... at the order.

    Factors beyond q^order cannot touch the kept coefficients, so the
    product stops there.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    cs = [0] * (order + 1)
    cs[0] = 1
    for k in range(1, order + 1):
        for i in range(order, k - 1, -1):
            cs[i] -= cs[i - k]
    return QSeries(cs)
