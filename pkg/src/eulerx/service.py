"""HTTP service wrapping the calculator.

Run with ``uvicorn eulerx.service:app``.  The endpoints mirror the CLI
subcommands and take the input document text in the request body, so a
client never needs filesystem access to the server.

Status codes: 400 malformed input, 409 input not checkerboard-colorable
where a colorable-only method was requested.  A failed verification is a
200 response with ``ok: false`` and the mismatch details.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import reports
from .euler import CircuitError
from .graphs import GraphFormatError, NotCheckerboardColorable
from .links import GaussFormatError

app = FastAPI(
    title="eulerx",
    description=(
        "Exact Euler-circuit expansion polynomials for checkerboard-colorable "
        "2-digraphs and Jones-Kauffman polynomials of virtual link diagrams."
    ),
    version="0.1.0",
)


class ComputeRequest(BaseModel):
    source: str = Field(description="graph JSON document or signed Gauss code")
    format: Literal["graph", "gauss"]
    method: Literal["expansion", "skein", "bracket", "all"] = "expansion"
    max_n: Optional[int] = 20


class CircuitRow(BaseModel):
    word: str
    activity: str
    weight: str


class ComputeReport(BaseModel):
    n: int
    components: int
    x: str
    writhe: Optional[int] = None
    jones: Optional[str] = None
    circuits: Optional[list[CircuitRow]] = None
    method: str


class CircuitsRequest(BaseModel):
    source: str
    format: Literal["graph", "gauss"]
    max_n: Optional[int] = 20


class VerifyRequest(BaseModel):
    source: str
    format: Literal["graph", "gauss"]
    seed: int = 0
    max_n: Optional[int] = 20


class VerifyReport(BaseModel):
    ok: bool
    n: Optional[int] = None
    x: Optional[str] = None
    methods: Optional[dict[str, str]] = None
    relabelings: Optional[int] = None
    seed: Optional[int] = None
    stage: Optional[str] = None
    values: Optional[dict[str, str]] = None
    perm: Optional[dict[int, int]] = None


class CountRequest(BaseModel):
    source: str
    format: Literal["graph", "gauss"]
    max_n: Optional[int] = 20


class CountReport(BaseModel):
    n: int
    components: int
    circuits: int
    best: int
    one_loop_states: Optional[int] = None


def _guarded(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except NotCheckerboardColorable as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc
    except (GraphFormatError, GaussFormatError, CircuitError, reports.BudgetExceeded, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/compute", response_model=ComputeReport)
def compute(request: ComputeRequest) -> ComputeReport:
    report = _guarded(
        reports.compute_report,
        request.source,
        request.format,
        method=request.method,
        max_n=request.max_n,
    )
    return ComputeReport(**report)


@app.post("/circuits", response_model=ComputeReport)
def circuits(request: CircuitsRequest) -> ComputeReport:
    report = _guarded(
        reports.compute_report,
        request.source,
        request.format,
        method="expansion",
        include_circuits=True,
        max_n=request.max_n,
    )
    return ComputeReport(**report)


@app.post("/verify", response_model=VerifyReport)
def verify(request: VerifyRequest) -> VerifyReport:
    try:
        report = _guarded(
            reports.verify_report,
            request.source,
            request.format,
            seed=request.seed,
            max_n=request.max_n,
        )
    except reports.VerifyMismatch as exc:
        return VerifyReport(**exc.report)
    return VerifyReport(**report)


@app.post("/count", response_model=CountReport)
def count(request: CountRequest) -> CountReport:
    report = _guarded(reports.count_report, request.source, request.format, max_n=request.max_n)
    return CountReport(**report)
