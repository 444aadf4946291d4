"""Sequence table builders: one row per k, as plain dicts ready for
CSV/JSON serialization (string values only, stable key order)."""
from __future__ import annotations

from mpmath import mp

from .beukers import beukers_linear_form, lcm_seq
from .closedforms import (
    bound_rhs,
    bound_z_decreased,
    bound_z_scaled,
    sequence_record,
)
from .errors import DomainError
from .precision import PrecisionContext
from .specfun import zeta

SEQUENCE_FAMILIES = ("ik", "jk", "zkm", "beukers", "lcm", "bounds")


def _krange(k_max: int):
    if k_max < 1:
        raise DomainError(f"k-max must be positive, got {k_max}")
    return range(1, k_max + 1)


def _rows_record_family(family: str, k_max: int, ctx: PrecisionContext, m: int):
    rows = []
    for k in _krange(k_max):
        rec = sequence_record(family, k, ctx, m=m)
        row = {"family": family, "k": str(k)}
        if family == "Z_km":
            row["m"] = str(m)
        row.update(
            closed=rec.closed.describe(),
            numeric=repr(rec.numeric),
            oracle=repr(rec.oracle),
            residual=repr(rec.residual),
        )
        if family == "Z_km":
            row["bound"] = mp.nstr(bound_rhs("Z", k, m, ctx), 17)
            row["bound_decreased"] = (
                str(bound_z_decreased(k, m, ctx)) if k > 1 else "n/a"
            )
        rows.append(row)
    return rows


def sequence_rows(
    family: str, k_max: int, ctx: PrecisionContext, m: int = 3
) -> list[dict]:
    if family == "ik":
        return _rows_record_family("I_k", k_max, ctx, m)
    if family == "jk":
        return _rows_record_family("J_k", k_max, ctx, m)
    if family == "zkm":
        return _rows_record_family("Z_km", k_max, ctx, m)
    if family == "beukers":
        rows = []
        with ctx.workdps():
            z3 = zeta(3, ctx)
            for k in _krange(k_max):
                lf = beukers_linear_form(k)
                value = abs(lf.A + lf.B * z3)
                rows.append(
                    {
                        "family": "beukers",
                        "k": str(k),
                        "A": str(lf.A),
                        "B": str(lf.B),
                        "abs_form": mp.nstr(value, 17),
                        "bound": repr((4 / 5) ** k),
                        "within_bound": str(bool(value <= mp.mpf(4) ** k / 5 ** k)),
                    }
                )
        return rows
    if family == "lcm":
        rows = []
        for k in _krange(k_max):
            d = lcm_seq(k)
            rows.append(
                {
                    "family": "lcm",
                    "k": str(k),
                    "d_k": str(d),
                    "pow3": str(3 ** k),
                    "below_pow3": str(d < 3 ** k),
                }
            )
        return rows
    if family == "bounds":
        rows = []
        for k in _krange(k_max):
            rows.append(
                {
                    "family": "bounds",
                    "k": str(k),
                    "m": str(m),
                    "bound_i": mp.nstr(bound_rhs("I", k, m, ctx), 17),
                    "bound_j": mp.nstr(bound_rhs("J", k, m, ctx), 17),
                    "bound_z": mp.nstr(bound_rhs("Z", k, m, ctx), 17),
                    "bound_z_scaled": mp.nstr(bound_z_scaled(k, m, ctx), 8),
                }
            )
        return rows
    raise DomainError(f"unknown sequence family {family!r}")
