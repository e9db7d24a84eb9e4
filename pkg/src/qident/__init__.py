"""qident: exact q-series kernel and identity verification engine.

Computes Gaussian (q-binomial) coefficients by several independent
strategies, mechanically verifies a catalog of finite q-series identities
(pentagonal pair sums, q-Vandermonde, the Bressoud and Schur polynomial
forms of the Rogers-Ramanujan identities, a WZ-style telescoping
certificate), cross-checks everything against brute-force partition
oracles, and exposes the lot through a small expression language, a
FastAPI service, and a CLI.
"""

from .qpoly import (
    IntPoly,
    QSeries,
    QPolyError,
    DivisionByZero,
    NotDivisible,
    NotInvertible,
    OrderMismatch,
    euler_series,
    pochhammer_qq,
)
from .qbinom import QBinomTable, qbin, qbin_alt, qbin_floor2, qbin_product
from .verify import IDENTITY_IDS, UnknownIdentity, VerifyReport, run_all, run_verify

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "QSeries",
    "QPolyError",
    "DivisionByZero",
    "NotDivisible",
    "NotInvertible",
    "OrderMismatch",
    "euler_series",
    "pochhammer_qq",
    "QBinomTable",
    "qbin",
    "qbin_alt",
    "qbin_floor2",
    "qbin_product",
    "IDENTITY_IDS",
    "UnknownIdentity",
    "VerifyReport",
    "run_all",
    "run_verify",
    "__version__",
]
