"""Verification runners: each target pairs an implementation route with
an independent reference and emits Report records.

A Report's numeric fields are decimal strings (shortest representation
that round-trips at the precision used), so serialized output is stable
and diff-friendly.  runtime_ms is measured; callers that need
byte-identical output zero it out (the CLI does unless --timings).
"""
from __future__ import annotations

import random
import time
from typing import Literal

from mpmath import mp
from pydantic import BaseModel

from . import antider
from .closedforms import (
    closed_form_i,
    closed_form_ii,
    oracle_i,
    oracle_ii,
    oracle_z,
    z_closed_form,
)
from .errors import DomainError, UnsupportedDimensionError
from .precision import FLOAT_CTX, PrecisionContext
from .quad import (
    IntegralSpec,
    euler_phi_identity_check,
    integrate,
    monte_carlo_kontsevich,
)
from .specfun import zeta

VERIFY_TARGETS = (
    "thm21",
    "cor23",
    "thm25",
    "zkm",
    "janous",
    "eulerphi",
    "mn-partial",
    "kontsevich",
)


class Report(BaseModel):
    id: str
    params: dict[str, str]
    numeric: str
    reference: str
    residual: str
    tolerance: str
    status: Literal["pass", "fail", "skip"]
    runtime_ms: int


def _fmt(x, ctx: PrecisionContext) -> str:
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, int):
        return str(x)
    return mp.nstr(x, ctx.digits)


def _report(check_id, params, numeric, reference, tolerance, ctx, t0) -> Report:
    with mp.workdps(max(ctx.dps, 30)):
        residual = abs(mp.mpf(numeric) - mp.mpf(reference))
        status = "pass" if residual <= mp.mpf(tolerance) else "fail"
        residual_s = mp.nstr(residual, 8)
    return Report(
        id=check_id,
        params={k: _fmt(v, ctx) for k, v in params.items()},
        numeric=_fmt(numeric, ctx),
        reference=_fmt(reference, ctx),
        residual=residual_s,
        tolerance=repr(float(tolerance)),
        status=status,
        runtime_ms=int((time.perf_counter() - t0) * 1000),
    )


def spec_i(k: int) -> IntegralSpec:
    return IntegralSpec(family="theorem25i", n=2, r=1, monomial_exponent=2 * k + 1)


def spec_ii(k: int) -> IntegralSpec:
    return IntegralSpec(family="theorem25ii", n=2, r=2, monomial_exponent=2 * k + 1)


def spec_z(k: int, m: int) -> IntegralSpec:
    return IntegralSpec(
        family="z_km", n=1, monomial_exponent=2 * k + 1, log_power=m
    )


# ---------------------------------------------------------------------------
# runners

def run_thm21(n: int, ctx: PrecisionContext) -> list[Report]:
    """(-1)^(n+1) * quadrature vs the zeta summation oracle, n <= 3.
    Dimension 3 always runs on the float64 backend: its 10^-6 contract
    is well inside float64 reach and the multiprecision triple integral
    is orders of magnitude slower."""
    if not 1 <= n <= 3:
        raise DomainError(f"thm21 supports n in 1..3, got {n}")
    t0 = time.perf_counter()
    if n == 3:
        run_ctx, tol, quad_tol = FLOAT_CTX, 1e-6, 5e-8
    else:
        run_ctx, tol, quad_tol = ctx, 1e-12, 1e-13
    raw = integrate(IntegralSpec(family="theorem21", n=n), run_ctx, tol=quad_tol)
    value = raw if n % 2 == 1 else -raw
    reference = zeta(2 * n + 1, run_ctx)
    return [
        _report("thm21", {"n": n}, value, reference, tol, run_ctx, t0)
    ]


def run_cor23(n: int, r: int, ctx: PrecisionContext) -> list[Report]:
    """quadrature * r^(2n) vs zeta(2n+1), for n <= 2 (3-D scaling runs
    would repeat thm21's float backend for every r at lower accuracy)."""
    if not 1 <= n <= 2:
        raise DomainError(f"cor23 supports n in 1..2, got {n}")
    if not 1 <= r <= 9:
        raise DomainError(f"cor23 supports r in 1..9, got {r}")
    t0 = time.perf_counter()
    raw = integrate(
        IntegralSpec(family="corollary23", n=n, r=r), ctx, tol=1e-13
    )
    value = (raw if n % 2 == 1 else -raw) * r ** (2 * n)
    reference = zeta(2 * n + 1, ctx)
    return [
        _report("cor23", {"n": n, "r": r}, value, reference, 1e-10, ctx, t0)
    ]


def run_thm25(k: int, ctx: PrecisionContext) -> list[Report]:
    """Both closed-form families at index k: exact form vs series
    oracle, and direct quadrature vs the oracle."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    reports = []
    for variant, form_fn, oracle_fn, spec_fn in (
        ("i", closed_form_i, oracle_i, spec_i),
        ("ii", closed_form_ii, oracle_ii, spec_ii),
    ):
        oracle = oracle_fn(k)
        t0 = time.perf_counter()
        form_val = form_fn(k).evaluate(ctx)
        reports.append(
            _report(
                f"thm25{variant}-form", {"k": k}, form_val, oracle, 1e-10, ctx, t0
            )
        )
        t0 = time.perf_counter()
        quad_val = integrate(spec_fn(k), ctx, tol=1e-11)
        reports.append(
            _report(
                f"thm25{variant}-quad", {"k": k}, quad_val, oracle, 1e-10, ctx, t0
            )
        )
    return reports


def run_zkm(k: int, m: int, ctx: PrecisionContext) -> list[Report]:
    """Z family at (k, m): exact form vs series oracle, quadrature vs
    the oracle."""
    oracle = oracle_z(k, m)
    t0 = time.perf_counter()
    form, _ = z_closed_form(k, m)
    reports = [
        _report(
            "zkm-form", {"k": k, "m": m}, form.evaluate(ctx), oracle, 1e-10,
            ctx, t0,
        )
    ]
    t0 = time.perf_counter()
    quad_val = integrate(spec_z(k, m), ctx, tol=1e-11)
    reports.append(
        _report("zkm-quad", {"k": k, "m": m}, quad_val, oracle, 1e-10, ctx, t0)
    )
    return reports


def run_janous(ctx: PrecisionContext) -> list[Report]:
    """(1/2) int log(x) log(1-x)/(x(1-x)) dx vs zeta(3)."""
    t0 = time.perf_counter()
    raw = integrate(IntegralSpec(family="janous", n=1), ctx, tol=1e-13)
    return [
        _report("janous", {}, raw / 2, zeta(3, ctx), 1e-12, ctx, t0)
    ]


def run_eulerphi(n: int, ctx: PrecisionContext, phi_terms=None) -> list[Report]:
    """Residual of the phi-weighted integral identity against
    zeta(2n) zeta(2n+1).  n = 2 runs on the float64 backend (contract
    10^-6; the multiprecision double integral with a phi evaluation per
    node is far slower)."""
    if n not in (1, 2):
        raise DomainError(f"eulerphi supports n in {{1, 2}}, got {n}")
    t0 = time.perf_counter()
    if n == 1:
        run_ctx, tol = ctx, 1e-8
    else:
        run_ctx, tol = FLOAT_CTX, 1e-6
    residual = euler_phi_identity_check(n, run_ctx, phi_terms=phi_terms)
    params = {"n": n}
    if phi_terms is not None:
        params["phi_terms"] = phi_terms
    return [_report("eulerphi", params, residual, 0, tol, run_ctx, t0)]


def run_mn_partial(
    n: int, seed: int = 0, points: int = 5, step: float = 1e-4
) -> list[Report]:
    """Mixed-partial identity of the antiderivative at seeded
    pseudo-random interior points: worst relative residual over the
    sample.  Runs at 40 digits (the step's cancellation budget)."""
    if not 1 <= n <= 3:
        raise DomainError(f"mn-partial supports n in 1..3, got {n}")
    ctx = PrecisionContext(40)
    rng = random.Random(seed)
    t0 = time.perf_counter()
    worst = mp.mpf(0)
    with ctx.workdps():
        for _ in range(points):
            x = [rng.uniform(0.1, 0.9) for _ in range(n)]
            resid = antider.mixed_partial_residual(x, step, ctx)
            scale = abs(antider.integrand(x, ctx))
            worst = max(worst, resid / scale)
    return [
        _report(
            "mn-partial",
            {"n": n, "seed": seed, "points": points, "step": step},
            worst, 0, 1e-6, ctx, t0,
        )
    ]


def run_kontsevich(
    k: int, ctx: PrecisionContext, samples: int = 10 ** 6, seed: int = 0
) -> list[Report]:
    """Monte Carlo mean of 1/(1 - u_1..u_k) vs zeta(k); passes when the
    truth lies inside estimate +- 3 standard errors."""
    t0 = time.perf_counter()
    estimate, stderr = monte_carlo_kontsevich(k, samples, seed, ctx)
    reference = zeta(k, ctx)
    return [
        _report(
            "kontsevich",
            {"k": k, "samples": samples, "seed": seed, "stderr": stderr},
            estimate, reference, 3 * stderr, ctx, t0,
        )
    ]


def run_target(
    target: str,
    ctx: PrecisionContext,
    *,
    n: int = 1,
    r: int = 1,
    k: int = 1,
    m: int = 1,
    seed: int = 0,
    samples: int = 10 ** 6,
) -> list[Report]:
    """Dispatch a verify target with its parameter subset."""
    if target == "thm21":
        return run_thm21(n, ctx)
    if target == "cor23":
        return run_cor23(n, r, ctx)
    if target == "thm25":
        return run_thm25(k, ctx)
    if target == "zkm":
        return run_zkm(k, m, ctx)
    if target == "janous":
        return run_janous(ctx)
    if target == "eulerphi":
        return run_eulerphi(n, ctx)
    if target == "mn-partial":
        return run_mn_partial(n, seed=seed)
    if target == "kontsevich":
        return run_kontsevich(k if k > 1 else 2, ctx, samples=samples, seed=seed)
    raise DomainError(f"unknown verify target {target!r}")
