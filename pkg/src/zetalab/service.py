"""HTTP service exposing the verification runners and sequence tables.

The CLI talks to this app in-process by default (or to a remote
instance via --server); POST bodies and responses are pydantic models,
so the wire format is the schema-stable form of the Report/row types.
Domain and capability errors map to 422 with a detail message.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .checks import VERIFY_TARGETS, Report, run_target
from .errata import errata_table
from .errors import DomainError
from .precision import DEFAULT_DIGITS, PrecisionContext
from .sequences import SEQUENCE_FAMILIES, sequence_rows


class VerifyRequest(BaseModel):
    target: str
    digits: int = DEFAULT_DIGITS
    n: int = 1
    r: int = 1
    k: int = 1
    m: int = 1
    seed: int = 0
    samples: int = Field(default=10 ** 6, ge=10 ** 4)
    timings: bool = False


class VerifyResponse(BaseModel):
    reports: list[Report]
    all_pass: bool


class SequenceRequest(BaseModel):
    family: str
    k_max: int = 10
    m: int = 3
    digits: int = DEFAULT_DIGITS
    errata: bool = False


class SequenceResponse(BaseModel):
    rows: list[dict[str, str]]
    errata: list[dict[str, str]] | None = None


app = FastAPI(title="zetalab", version="1.0.0")


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


def _context(digits: int) -> PrecisionContext:
    if digits < 15 or digits > 1000:
        raise DomainError(f"digits must lie in 15..1000, got {digits}")
    return PrecisionContext(digits=digits)


@app.get("/health")
async def health():
    return {"status": "ok"}


@app.get("/errata")
async def errata():
    return errata_table()


@app.post("/verify", response_model=VerifyResponse)
async def verify(req: VerifyRequest) -> VerifyResponse:
    if req.target not in VERIFY_TARGETS:
        raise DomainError(
            f"unknown target {req.target!r}; choose from {', '.join(VERIFY_TARGETS)}"
        )
    ctx = _context(req.digits)
    reports = run_target(
        req.target, ctx,
        n=req.n, r=req.r, k=req.k, m=req.m,
        seed=req.seed, samples=req.samples,
    )
    # deterministic order; timing is the one nondeterministic field
    reports.sort(key=lambda rep: (rep.id, sorted(rep.params.items())))
    if not req.timings:
        reports = [rep.model_copy(update={"runtime_ms": 0}) for rep in reports]
    return VerifyResponse(
        reports=reports, all_pass=all(r.status == "pass" for r in reports)
    )


@app.post("/sequence", response_model=SequenceResponse)
async def sequence(req: SequenceRequest) -> SequenceResponse:
    if req.family not in SEQUENCE_FAMILIES:
        raise DomainError(
            f"unknown family {req.family!r}; choose from {', '.join(SEQUENCE_FAMILIES)}"
        )
    ctx = _context(req.digits)
    rows = sequence_rows(req.family, req.k_max, ctx, m=req.m)
    return SequenceResponse(
        rows=rows, errata=errata_table() if req.errata else None
    )
