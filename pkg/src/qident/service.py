"""HTTP service exposing the q-series kernel.

All computation happens in the core modules; this layer only shapes
requests and responses.  Polynomial coefficients travel as decimal strings
so arbitrary-precision integers survive JSON round trips.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__, identities, oracles, qexpr, verify
from .qbinom import qbin
from .qpoly import IntPoly, QPolyError, QSeries, euler_series


class PolyValue(BaseModel):
    var: Literal["q"] = "q"
    coeffs: list[str]


class PolyResult(PolyValue):
    pretty: str


class QBinRequest(BaseModel):
    n: int
    k: int


class SeriesRequest(BaseModel):
    kind: Literal["rr1", "rr2", "euler"]
    order: int = Field(ge=0)


class EvalRequest(BaseModel):
    expr: str
    bindings: dict[str, int] = Field(default_factory=dict)


class OracleRequest(BaseModel):
    kind: Literal["box", "rr1", "rr2"]
    n: Optional[int] = None
    k: Optional[int] = None
    order: Optional[int] = Field(default=None, ge=0)


class VerifyRequest(BaseModel):
    identity: str
    n_max: int = Field(ge=0)
    k_max: Optional[int] = Field(default=None, ge=0)


class CounterexampleOut(BaseModel):
    params: dict[str, int]
    lhs: PolyValue
    rhs: PolyValue


class ReportOut(BaseModel):
    identity: str
    checked: int
    passed: bool
    counterexample: Optional[CounterexampleOut] = None


class VerifyResponse(BaseModel):
    passed: bool
    reports: list[ReportOut]


def _poly_result(value: Union[IntPoly, QSeries]) -> PolyResult:
    return PolyResult(coeffs=[str(c) for c in value.coeffs], pretty=value.pretty())


def _report_out(report: verify.VerifyReport) -> ReportOut:
    ce = None
    if report.counterexample is not None:
        ce = CounterexampleOut(
            params=dict(report.counterexample.params),
            lhs=PolyValue(coeffs=[str(c) for c in report.counterexample.lhs.coeffs]),
            rhs=PolyValue(coeffs=[str(c) for c in report.counterexample.rhs.coeffs]),
        )
    return ReportOut(
        identity=report.identity,
        checked=report.checked,
        passed=report.passed,
        counterexample=ce,
    )


app = FastAPI(title="qident", version=__version__)


@app.exception_handler(qexpr.ExprError)
async def _expr_error(request: Request, exc: qexpr.ExprError) -> JSONResponse:
    detail: dict = {"kind": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, qexpr.ParseError):
        detail["line"] = exc.line
        detail["col"] = exc.col
    return JSONResponse(status_code=400, content={"detail": detail})


@app.exception_handler(verify.UnknownIdentity)
async def _unknown_identity(request: Request, exc: verify.UnknownIdentity) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"detail": {"kind": "UnknownIdentity", "message": str(exc)}},
    )


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"detail": {"kind": "ValueError", "message": str(exc)}},
    )


@app.exception_handler(QPolyError)
async def _arithmetic_error(request: Request, exc: QPolyError) -> JSONResponse:
    # Reaching this handler means an exact-arithmetic invariant broke.
    return JSONResponse(
        status_code=500,
        content={"detail": {"kind": "arithmetic_error", "message": str(exc)}},
    )


@app.get("/health")
async def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/identities")
async def identity_catalog() -> dict:
    return {"identities": list(verify.IDENTITY_IDS)}


@app.post("/qbin", response_model=PolyResult)
async def qbin_endpoint(req: QBinRequest) -> PolyResult:
    return _poly_result(qbin(req.n, req.k))


@app.post("/series", response_model=PolyResult)
async def series_endpoint(req: SeriesRequest) -> PolyResult:
    if req.kind == "rr1":
        value = identities.rr_sum_side(req.order, "first")
    elif req.kind == "rr2":
        value = identities.rr_sum_side(req.order, "second")
    else:
        value = euler_series(req.order)
    return _poly_result(value)


@app.post("/eval", response_model=PolyResult)
async def eval_endpoint(req: EvalRequest) -> PolyResult:
    return _poly_result(qexpr.evaluate(req.expr, req.bindings))


@app.post("/oracle", response_model=PolyResult)
async def oracle_endpoint(req: OracleRequest) -> PolyResult:
    if req.kind == "box":
        if req.n is None or req.k is None:
            raise ValueError("box oracle needs n and k")
        return _poly_result(oracles.gaussian_from_box(req.n, req.k))
    if req.order is None:
        raise ValueError(f"{req.kind} oracle needs order")
    variant = "first" if req.kind == "rr1" else "second"
    return _poly_result(oracles.rr_oracle_series(req.order, variant))


@app.post("/verify", response_model=VerifyResponse)
async def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    if req.identity == "all":
        reports = verify.run_all(req.n_max, req.k_max)
    else:
        reports = [verify.run_verify(req.identity, req.n_max, req.k_max)]
    return VerifyResponse(
        passed=all(r.passed for r in reports),
        reports=[_report_out(r) for r in reports],
    )
