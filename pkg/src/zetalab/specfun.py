"""Special functions: polylogarithms, zeta values, harmonic sums, Euler phi.

Even-argument zeta goes through Euler's Bernoulli-number formula with the
rational factor kept exact; odd arguments are summed directly with an
Euler-Maclaurin tail correction.  Polylogarithms are plain series
summation with an explicit tail bound; no functional-equation
acceleration (all call sites either keep z away from 1 or have order
>= 2 where convergence at z = 1 is polynomial).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal

import numpy as np
from mpmath import mp

from .errors import DomainError
from .precision import PrecisionContext

Parity = Literal["all", "odd"]


def _mpf(x):
    """mpf from a real-like value; exact rationals convert losslessly."""
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact)

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n via the convolution recurrence."""
    if n < 0:
        raise DomainError("Bernoulli index must be non-negative")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


def even_zeta_rational(s: int) -> Fraction:
    """Exact rational q with zeta(s) = q * pi^s, for even s >= 2."""
    if s < 2 or s % 2 != 0:
        raise DomainError("even_zeta_rational requires even s >= 2")
    n = s // 2
    return (
        Fraction((-1) ** (n + 1))
        * bernoulli(2 * n)
        * Fraction(2 ** (2 * n))
        / (2 * Fraction(math.factorial(2 * n)))
    )


# ---------------------------------------------------------------------------
# zeta

_zeta_cache: dict[tuple[int, int], object] = {}


def zeta(s: int, ctx: PrecisionContext):
    """zeta(s) for integer s >= 2, to within ctx.epsilon (returns mpf)."""
    if s < 2:
        raise DomainError(f"zeta argument must be >= 2, got {s}")
    key = (s, ctx.dps)
    cached = _zeta_cache.get(key)
    if cached is not None:
        return cached
    with ctx.workdps():
        if s % 2 == 0:
            q = even_zeta_rational(s)
            val = mp.pi ** s * q.numerator / q.denominator
        else:
            val = _zeta_direct(s, ctx)
        _zeta_cache[key] = +val
    return _zeta_cache[key]


def _zeta_direct(s: int, ctx: PrecisionContext):
    """Direct summation with Euler-Maclaurin tail correction."""
    n_terms = max(10 ** 4, ctx.digits ** 2)
    total = mp.mpf(0)
    for k in range(n_terms - 1, 0, -1):
        total += mp.mpf(1) / k ** s
    n = mp.mpf(n_terms)
    # sum_{k>=N} k^-s = N^(1-s)/(s-1) + N^-s/2 + s N^-(s+1)/12
    #                   - s(s+1)(s+2) N^-(s+3)/720 + ...
    tail = n ** (1 - s) / (s - 1) + n ** (-s) / 2 + s * n ** (-s - 1) / 12
    tail -= s * (s + 1) * (s + 2) * n ** (-s - 3) / 720
    tail += s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * n ** (-s - 5) / 30240
    return total + tail


# ---------------------------------------------------------------------------
# polylogarithms

def polylog(s: int, z, ctx: PrecisionContext):
    """Li_s(z) = sum z^k / k^s for z in [0, 1] (s >= 2 required at z = 1)."""
    if s < 1:
        raise DomainError(f"polylog order must be >= 1, got {s}")
    vals = polylog_multi((s,), z, ctx)
    return vals[s]


def polylog_multi(orders: Iterable[int], z, ctx: PrecisionContext):
    """Li_s(z) for several orders s at once, sharing the power recurrence."""
    orders = tuple(sorted(set(int(s) for s in orders)))
    if not orders:
        return {}
    if orders[0] < 1:
        raise DomainError("polylog order must be >= 1")
    zf = float(z)
    if zf < 0 or zf > 1:
        raise DomainError(f"polylog argument must lie in [0, 1], got {zf}")
    if zf == 1.0 and z == 1:
        if orders[0] == 1:
            raise DomainError("Li_1(1) diverges")
        return {s: zeta(s, ctx) for s in orders}
    if zf == 0.0 and z == 0:
        return {s: mp.mpf(0) for s in orders}
    if ctx.use_float:
        return _polylog_float(orders, zf, ctx)
    return _polylog_mp(orders, z, ctx)


def _polylog_mp(orders, z, ctx):
    s_min = orders[0]
    with ctx.workdps():
        zm = _mpf(z)
        one_minus = 1 - zm
        eps = mp.mpf(10) ** (-ctx.dps)
        totals = {s: mp.mpf(0) for s in orders}
        p = mp.mpf(1)
        k = 0
        while True:
            k += 1
            p *= zm
            ks = k ** s_min
            totals[s_min] += p / ks
            prev = s_min
            for s in orders[1:]:
                ks *= k ** (s - prev)
                prev = s
                totals[s] += p / ks
            # tail bound: sum_{j>k} z^j/j^s <= z^(k+1) / ((1-z) k^s)
            if k % 32 == 0 or zm < mp.mpf("0.5"):
                if p * zm / (one_minus * k ** s_min) <= eps:
                    break
            if k > 50_000_000:  # safety net; unreachable for supported z
                raise RuntimeError("polylog series failed to terminate")
        return {s: +totals[s] for s in orders}


def _polylog_float(orders, z, ctx):
    s_min = orders[0]
    eps = ctx.epsilon * 1e-2
    totals = {s: 0.0 for s in orders}
    chunk = 1 << 14
    start = 1
    while True:
        ks = np.arange(start, start + chunk, dtype=np.float64)
        powers = z ** ks
        for s in orders:
            totals[s] += float(np.sum(powers / ks ** s))
        start += chunk
        tail = z ** start / ((1.0 - z) * (start - 1) ** s_min)
        if tail <= eps:
            break
        if start > 200_000_000:
            raise RuntimeError("polylog series failed to terminate")
    return totals


# ---------------------------------------------------------------------------
# harmonic sums (exact)

@dataclass(frozen=True)
class HarmonicSum:
    upper: int
    order: int
    parity: Parity
    value: Fraction


def harmonic(upper: int, order: int, parity: Parity = "all") -> HarmonicSum:
    """Exact generalized harmonic number.

    parity="all":  sum_{i=1}^{upper} 1/i^order          (upper=0 -> 0)
    parity="odd":  sum_{i=0}^{upper} 1/(2i+1)^order     (upper=0 -> 1)
    """
    if upper < 0:
        raise DomainError("upper must be non-negative")
    if order < 1:
        raise DomainError("order must be positive")
    if parity == "all":
        value = sum((Fraction(1, i ** order) for i in range(1, upper + 1)), Fraction(0))
    elif parity == "odd":
        value = sum(
            (Fraction(1, (2 * i + 1) ** order) for i in range(upper + 1)), Fraction(0)
        )
    else:
        raise DomainError(f"unknown parity {parity!r}")
    return HarmonicSum(upper=upper, order=order, parity=parity, value=value)


def odd_zeta_reduction(m: int, ctx: PrecisionContext):
    """sum_{u>=1} 1/(2u+1)^m = (1 - 2^-m) * zeta(m) - 1, for m >= 2."""
    if m < 2:
        raise DomainError(f"order must be >= 2, got {m}")
    with ctx.workdps():
        return +((1 - mp.mpf(2) ** (-m)) * zeta(m, ctx) - 1)


# ---------------------------------------------------------------------------
# Euler's phi product

def euler_phi_partial(q, ctx: PrecisionContext):
    """prod_{n=1}^{N} (1 - q^n) with N chosen so the dropped tail of the
    log-product is below ctx.epsilon (bounded by q^(N+1)/(1-q)^2)."""
    qf = float(q)
    if qf < 0 or qf >= 1:
        raise DomainError(f"euler_phi_partial requires 0 <= q < 1, got {qf}")
    if qf == 0.0 and q == 0:
        return mp.mpf(1)
    with ctx.workdps():
        qm = _mpf(q)
        eps = mp.mpf(ctx.epsilon)
        one_minus = 1 - qm
        prod = mp.mpf(1)
        p = mp.mpf(1)
        n = 0
        while True:
            n += 1
            p *= qm
            prod *= 1 - p
            if p * qm / (one_minus * one_minus) <= eps:
                break
            if n > 10_000_000:
                raise RuntimeError("euler phi product failed to terminate")
        return +prod


def log_euler_phi(q, ctx: PrecisionContext, qc=None, max_terms=None):
    """log(phi(q)) for q in (0, 1), stable arbitrarily close to 1.

    For q below exp(-2*pi) the log-product is summed directly.  Above
    that, the modular transformation of the product is used:

        log phi(e^-t) = -pi^2/(6t) + t/24 - (1/2) log(t/(2 pi))
                        + log phi(e^(-4 pi^2 / t))

    where the reflected argument is tiny, so its product converges in a
    handful of terms.  ``qc`` may supply 1 - q to full accuracy when q is
    so close to 1 that the complement has cancelled.  ``max_terms`` caps
    the series length (truncation-stability experiments).
    """
    if ctx.use_float:
        return _log_euler_phi_float(
            float(q), float(qc) if qc is not None else None, max_terms
        )
    with ctx.workdps():
        qm = _mpf(q)
        if qc is not None and qm >= mp.mpf("0.5"):
            # near 1 the complement carries the accuracy
            t = -mp.log1p(-_mpf(qc))
        else:
            if qm <= 0 or qm >= 1:
                raise DomainError("log_euler_phi requires 0 < q < 1")
            t = -mp.log(qm)
        if t >= 2 * mp.pi:
            return +_log_phi_series_mp(mp.e ** (-t), ctx, max_terms)
        t_ref = 4 * mp.pi ** 2 / t
        val = (
            -mp.pi ** 2 / (6 * t)
            + t / 24
            - mp.log(t / (2 * mp.pi)) / 2
            + _log_phi_series_mp(mp.e ** (-t_ref), ctx, max_terms)
        )
        return +val


def _log_phi_series_mp(q, ctx, max_terms=None):
    if q == 0:
        return mp.mpf(0)
    # cutoff relative to the leading term -q, which must never be dropped
    cutoff = q * mp.mpf(10) ** (-ctx.dps)
    total = mp.mpf(0)
    p = mp.mpf(1)
    n = 0
    while True:
        n += 1
        if max_terms is not None and n > max_terms:
            break
        p *= q
        total += mp.log1p(-p)
        if p * q <= cutoff:
            break
    return total


def _log_euler_phi_float(q, qc=None, max_terms=None):
    t = -math.log1p(-qc) if (qc is not None and q >= 0.5) else -math.log(q)
    if t >= 2 * math.pi:
        return _log_phi_series_float(math.exp(-t), max_terms)
    t_ref = 4 * math.pi ** 2 / t
    tail = (
        _log_phi_series_float(math.exp(-t_ref), max_terms) if t_ref < 745 else 0.0
    )
    return (
        -math.pi ** 2 / (6 * t)
        + t / 24
        - 0.5 * math.log(t / (2 * math.pi))
        + tail
    )


def _log_phi_series_float(q, max_terms=None):
    if q == 0.0:
        return 0.0
    cutoff = q * 1e-18
    total = 0.0
    p = 1.0
    n = 0
    while True:
        n += 1
        if max_terms is not None and n > max_terms:
            return total
        p *= q
        total += math.log1p(-p)
        if p * q <= cutoff:
            return total
