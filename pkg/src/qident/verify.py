"""Verification driver: sweep an identity over a parameter range and report.

Each identity ID maps to a generator of (params, lhs, rhs) cases in a fixed
lexicographic order; the driver compares sides exactly, short-circuits at
the first mismatch, and returns a :class:`VerifyReport`.  Case generators
look their building blocks up through the module objects at call time, so a
corrupted implementation (deliberate or otherwise) is caught by the sweep
rather than frozen in at import.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Union

from . import certificate, identities, qbinom, schur
from .qpoly import IntPoly, QSeries, ZERO

PolyLike = Union[IntPoly, QSeries]
Case = tuple[dict[str, int], PolyLike, PolyLike]
CaseGen = Callable[[int, int], Iterator[Case]]


class UnknownIdentity(ValueError):
    """Raised for an identity ID outside the catalog."""


@dataclass(frozen=True)
class Counterexample:
    params: dict[str, int]
    lhs: PolyLike
    rhs: PolyLike


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    checked: int
    passed: bool
    counterexample: Counterexample | None

    def as_dict(self) -> dict:
        """JSON-ready report; polynomial coefficients as decimal strings."""
        ce = None
        if self.counterexample is not None:
            ce = {
                "params": dict(self.counterexample.params),
                "lhs": _poly_json(self.counterexample.lhs),
                "rhs": _poly_json(self.counterexample.rhs),
            }
        return {
            "identity": self.identity,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": ce,
        }


def _poly_json(value: PolyLike) -> dict:
    return {"var": "q", "coeffs": [str(c) for c in value.coeffs]}


def _triangle(n_max: int, k_max: int) -> Iterator[tuple[int, int]]:
    for n in range(0, n_max + 1):
        for k in range(0, min(n, k_max) + 1):
            yield n, k


def _cases_eq1(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        yield {"n": n, "k": k}, identities.pair_sum(n, k), qbinom.qbin(n, k)


def _cases_eq4(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        forms = identities.pair_sum_forms(n, k)
        yield {"n": n, "k": k}, forms[1], identities.pair_sum(n, k)


def _cases_eq6(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        forms = identities.pair_sum_forms(n, k)
        yield {"n": n, "k": k}, forms[2], identities.pair_sum(n, k)


def _cases_eq7(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        expected = qbinom.qbin(n, k)
        for index, form in enumerate(identities.pair_sum_forms(n, k), start=1):
            yield {"n": n, "k": k, "form": index}, form, expected


def _cases_eq9(n_max: int, k_max: int) -> Iterator[Case]:
    for m in range(0, n_max + 1):
        for n in range(0, n_max + 1):
            for k in range(0, k_max + 1):
                lhs, rhs = identities.q_vandermonde(m, n, k)
                yield {"m": m, "n": n, "k": k}, lhs, rhs


def _cases_eq10(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(0, n_max + 1):
        for j in range(-n, n + 1):
            lhs, rhs = identities.q_vandermonde_diagonal(n, j)
            yield {"n": n, "j": j}, lhs, rhs


def _cases_eq11(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(0, n_max + 1):
        lhs, rhs = identities.bressoud_identity(n, "first")
        yield {"n": n}, lhs, rhs


def _cases_eq12(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(0, n_max + 1):
        lhs, rhs = identities.bressoud_identity(n, "second")
        yield {"n": n}, lhs, rhs


def _cases_eq12pre(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        lhs = identities.shifted_pair_sum(n, k)
        rhs = qbinom.qbin(n, k).shift_scale(1, k)
        yield {"n": n, "k": k}, lhs, rhs


def _cases_involution(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        yield {"n": n, "k": k}, identities.involution_zero_sum(n, k), ZERO


def _cases_eq15(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        lhs = schur.schur_core_sum(n, k)
        rhs = qbinom.qbin(n - k, k)
        yield {"n": n, "k": k}, lhs, rhs


def _cases_eq16(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        lhs = schur.schur_shifted_sum(n, k)
        rhs = schur.schur_core_sum(n, k).shift_scale(1, k)
        yield {"n": n, "k": k}, lhs, rhs


def _cases_eq17(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(1, n_max + 1):
        for k in range(1, min(n, k_max) + 1):
            lhs = schur.schur_core_sum(n + 2, k)
            rhs = (
                schur.schur_core_sum(n, k).shift_scale(1, 2 * k)
                + schur.schur_core_sum(n - 1, k - 1).shift_scale(1, k)
                + schur.schur_core_sum(n, k - 1)
            )
            yield {"n": n, "k": k}, lhs, rhs


def _cases_eq18(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(0, n_max + 1):
        lhs, rhs = schur.schur_identity(n, "first")
        yield {"n": n}, lhs, rhs


def _cases_eq19(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(1, n_max + 1):
        lhs, rhs = schur.schur_identity(n, "second")
        yield {"n": n}, lhs, rhs


def _cases_eq19pre(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(0, n_max + 1):
        lhs, rhs = schur.schur_identity(n, "second_pre")
        yield {"n": n}, lhs, rhs


def _cases_ell(n_max: int, k_max: int) -> Iterator[Case]:
    for n, k in _triangle(n_max, k_max):
        yield {"n": n, "k": k}, schur.schur_vanishing_sum(n, k), ZERO


def _cases_h(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(1, n_max + 1):
        for k in range(1, min(n, k_max) + 1):
            lhs = schur.schur_offset_sum(n, k)
            rhs = schur.schur_core_sum(n - 1, k - 1)
            yield {"n": n, "k": k}, lhs, rhs


def _cases_cert(n_max: int, k_max: int) -> Iterator[Case]:
    for n in range(1, n_max + 1):
        for k in range(0, min(n - 1, k_max) + 1):
            for j in range(-k - 1, k + 2):
                lhs, rhs = certificate.telescoping_sides(n, k, j)
                yield {"n": n, "k": k, "j": j}, lhs, rhs
            lhs, rhs = certificate.telescoped_recurrence_sides(n, k)
            yield {"n": n, "k": k}, lhs, rhs


def _cases_rr1(n_max: int, k_max: int) -> Iterator[Case]:
    lhs = identities.rr_sum_side(n_max, "first")
    rhs = identities.rr_product_side(n_max, "first")
    yield {"order": n_max}, lhs, rhs


def _cases_rr2(n_max: int, k_max: int) -> Iterator[Case]:
    lhs = identities.rr_sum_side(n_max, "second")
    rhs = identities.rr_product_side(n_max, "second")
    yield {"order": n_max}, lhs, rhs


_REGISTRY: dict[str, CaseGen] = {
    "eq1": _cases_eq1,
    "eq4": _cases_eq4,
    "eq6": _cases_eq6,
    "eq7": _cases_eq7,
    "eq9": _cases_eq9,
    "eq10": _cases_eq10,
    "eq11": _cases_eq11,
    "eq12": _cases_eq12,
    "eq12pre": _cases_eq12pre,
    "eq15": _cases_eq15,
    "eq16": _cases_eq16,
    "eq17": _cases_eq17,
    "eq18": _cases_eq18,
    "eq19": _cases_eq19,
    "eq19pre": _cases_eq19pre,
    "ell": _cases_ell,
    "h": _cases_h,
    "involution": _cases_involution,
    "cert": _cases_cert,
    "rr1": _cases_rr1,
    "rr2": _cases_rr2,
}

IDENTITY_IDS: tuple[str, ...] = (
    "eq1",
    "eq4",
    "eq6",
    "eq7",
    "eq9",
    "eq10",
    "eq11",
    "eq12",
    "eq12pre",
    "eq15",
    "eq16",
    "eq17",
    "eq18",
    "eq19",
    "eq19pre",
    "ell",
    "h",
    "involution",
    "cert",
    "rr1",
    "rr2",
)


def run_verify(identity: str, n_max: int, k_max: int | None = None) -> VerifyReport:
    """Sweep one identity up to n_max (k bounded by k_max when given).

    Cases run in lexicographic parameter order and the sweep stops at the
    first counterexample, so a failure report is minimal and deterministic.
    """
    gen = _REGISTRY.get(identity)
    if gen is None:
        raise UnknownIdentity(f"unknown identity {identity!r}; see IDENTITY_IDS")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    bound = n_max if k_max is None else k_max
    checked = 0
    for params, lhs, rhs in gen(n_max, bound):
        checked += 1
        if lhs != rhs:
            return VerifyReport(identity, checked, False, Counterexample(params, lhs, rhs))
    return VerifyReport(identity, checked, True, None)


def run_all(n_max: int, k_max: int | None = None) -> list[VerifyReport]:
    """Run every identity in catalog order with the same bounds."""
    return [run_verify(identity, n_max, k_max) for identity in IDENTITY_IDS]
