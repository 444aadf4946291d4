"""Numerical integration of every integrand family in the toolkit.

The engine is tanh-sinh (double-exponential) quadrature on (0, 1) with
level doubling: the mesh is halved until two successive estimates agree
within the requested tolerance.  Abscissas approach but never reach the
endpoints; every node carries both x and 1-x to full precision so that
integrands with log(1-x)-type endpoint singularities never cancel.

Multidimensional integrals are iterated (nested) tanh-sinh.  Contexts at
15 digits run on a float64 backend with a numpy-vectorized innermost
dimension; higher precisions run on mpmath.

The Kontsevich hypercube formula gets a seeded Monte Carlo smoke oracle
(counter-based Philox generator, fixed chunk layout, bit-reproducible).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from mpmath import mp

from .errors import (
    DomainError,
    QuadratureConvergenceError,
    UnsupportedDimensionError,
)
from .precision import PrecisionContext
from .specfun import log_euler_phi, zeta

MAX_LEVEL_DEFAULT = 12

# agreement below this is roundoff noise on the float64 backend
_FLOAT_TOL_FLOOR = 1e-14

# assumed outer node count when splitting tolerance across nested dims
_NESTED_NODE_ESTIMATE = 300


# ---------------------------------------------------------------------------
# nodes

@lru_cache(maxsize=None)
def _mp_nodes(dps: int, level: int):
    """One-sided tanh-sinh nodes (x, 1-x, weight/h) new at this level.

    Level 1 holds all t = k/2, k >= 1; level L >= 2 holds the odd
    multiples of 2^-L.  The t = 0 node is handled by the caller.  Weights
    are v = pi * cosh(t) * x * (1-x), i.e. the mesh factor h is excluded
    so partial sums can be reused across levels.
    """
    with mp.workdps(dps + 5):
        h = mp.mpf(2) ** (-level)
        step = 1 if level == 1 else 2
        thresh = mp.mpf(10) ** (-(dps + 8))
        nodes = []
        k = 1
        while True:
            t = k * h
            u = mp.pi / 2 * mp.sinh(t)
            x = 1 / (1 + mp.e ** (-2 * u))
            xc = 1 / (1 + mp.e ** (2 * u))
            v = mp.pi * mp.cosh(t) * x * xc
            if v < thresh and t > 1:
                break
            nodes.append((x, xc, v))
            k += step
        return tuple(nodes)


@lru_cache(maxsize=None)
def _float_nodes(level: int):
    """Float64 analogue of _mp_nodes, as numpy arrays (x, 1-x, v)."""
    h = 2.0 ** (-level)
    step = 1 if level == 1 else 2
    ks = np.arange(1, int(math.ceil(4.5 / h)) + 1, step, dtype=np.float64)
    t = ks * h
    u = 0.5 * math.pi * np.sinh(t)
    two_u = np.minimum(2.0 * u, 700.0)
    x = 1.0 / (1.0 + np.exp(-two_u))
    xc = 1.0 / (1.0 + np.exp(two_u))
    v = math.pi * np.cosh(t) * x * xc
    keep = v >= 1e-22
    return x[keep], xc[keep], v[keep]


# ---------------------------------------------------------------------------
# 1-D tanh-sinh

def tanh_sinh_1d(
    f: Callable,
    ctx: PrecisionContext,
    tol=None,
    max_level: int = MAX_LEVEL_DEFAULT,
):
    """Integrate f over (0, 1) to the requested absolute tolerance.

    ``f`` is called as ``f(x, xc)`` with ``xc = 1 - x`` exact to working
    precision.  Raises QuadratureConvergenceError (carrying the last two
    estimates) if level doubling runs out before agreement.
    """
    if tol is None:
        tol = ctx.epsilon
    if ctx.use_float:
        return _ts_float_scalar(f, float(tol), max_level)
    return _ts_mp(f, ctx, tol, max_level)


def _ts_mp(f, ctx, tol, max_level):
    with ctx.workdps():
        tol = mp.mpf(tol)
        # agreement below working-precision-relative-to-magnitude is
        # roundoff; matters when an inner integral carries a huge prefactor
        rel_floor = mp.mpf(10) ** (-(ctx.dps - 4))
        half = mp.mpf(1) / 2
        total = mp.pi / 4 * f(half, half)
        prev = None
        for level in range(1, max_level + 1):
            for x, xc, v in _mp_nodes(ctx.dps, level):
                total += v * (f(x, xc) + f(xc, x))
            estimate = total * mp.mpf(2) ** (-level)
            if prev is not None and abs(estimate - prev) <= tol + rel_floor * abs(estimate):
                return +estimate
            prev = estimate
        raise QuadratureConvergenceError(
            f"tanh-sinh did not converge to {tol} within {max_level} levels",
            (prev, estimate),
        )


def _ts_float_scalar(f, tol, max_level):
    fvec = lambda xa, xca: np.array(
        [f(float(x), float(xc)) for x, xc in zip(xa, xca)]
    )
    return _ts_float_vec(fvec, tol, max_level)


def _ts_float_vec(fvec, tol, max_level):
    total = math.pi / 4 * float(
        np.asarray(fvec(np.array([0.5]), np.array([0.5]))).ravel()[0]
    )
    prev = None
    for level in range(1, max_level + 1):
        x, xc, v = _float_nodes(level)
        total += float(np.dot(v, fvec(x, xc))) + float(np.dot(v, fvec(xc, x)))
        estimate = total * 2.0 ** (-level)
        eff_tol = max(tol, _FLOAT_TOL_FLOOR * (1.0 + abs(estimate)))
        if prev is not None and abs(estimate - prev) <= eff_tol:
            return estimate
        prev = estimate
    raise QuadratureConvergenceError(
        f"tanh-sinh (float backend) did not converge to {tol} "
        f"within {max_level} levels",
        (prev, estimate),
    )


# ---------------------------------------------------------------------------
# nested integration

def integrate_nd(
    f: Callable,
    n: int,
    ctx: PrecisionContext,
    tol=None,
    f_last_vec: Callable | None = None,
    axis_order: Sequence[int] | None = None,
    max_level: int = MAX_LEVEL_DEFAULT,
):
    """Iterated tanh-sinh over (0,1)^n.

    ``f(xs, xcs)`` takes coordinate tuples.  On the float backend,
    ``f_last_vec(xs, xcs, x_arr, xc_arr)`` (prefix of n-1 fixed
    coordinates plus vectorized innermost) is used when provided.  Inner
    integrals run at tolerance tol / (10 * estimated outer node count).
    ``axis_order`` permutes which source variable each nesting level
    binds (Fubini order checks).
    """
    if tol is None:
        tol = ctx.epsilon
    order = tuple(axis_order) if axis_order is not None else tuple(range(n))
    if sorted(order) != list(range(n)):
        raise DomainError(f"axis_order must permute 0..{n - 1}")

    def call(xs, xcs):
        perm_x = [None] * n
        perm_xc = [None] * n
        for slot, src in enumerate(order):
            perm_x[src] = xs[slot]
            perm_xc[src] = xcs[slot]
        return f(tuple(perm_x), tuple(perm_xc))

    use_vec = ctx.use_float and f_last_vec is not None and order == tuple(range(n))

    def recurse(prefix_x, prefix_xc, dims_left, tol_d):
        if dims_left == 1:
            if use_vec:
                return _ts_float_vec(
                    lambda xa, xca: f_last_vec(prefix_x, prefix_xc, xa, xca),
                    tol_d,
                    max_level,
                )
            return tanh_sinh_1d(
                lambda x, xc: call(prefix_x + (x,), prefix_xc + (xc,)),
                ctx,
                tol_d,
                max_level,
            )
        tol_inner = tol_d / (10 * _NESTED_NODE_ESTIMATE)
        return tanh_sinh_1d(
            lambda x, xc: recurse(
                prefix_x + (x,), prefix_xc + (xc,), dims_left - 1, tol_inner
            ),
            ctx,
            tol_d,
            max_level,
        )

    return recurse((), (), n, tol)


# ---------------------------------------------------------------------------
# integrand specifications

FAMILIES = (
    "theorem21",
    "corollary23",
    "theorem25i",
    "theorem25ii",
    "z_km",
    "janous",
    "kontsevich",
    "beukers_cell",
)


@dataclass(frozen=True)
class IntegralSpec:
    """One integrand: dimension, power inside log(1 - t^r), monomial
    exponent ((xy)^(2k+1)-type factor, 0 if absent), and extra log power."""

    family: str
    n: int = 1
    r: int = 1
    monomial_exponent: int = 0
    log_power: int = 0
    # second monomial exponent for asymmetric 2-D cells (x^a y^b)
    monomial_exponent_y: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.n < 1 or self.r < 1:
            raise DomainError("dimension and power must be positive")
        if self.monomial_exponent < 0 or self.log_power < 0:
            raise DomainError("exponents must be non-negative")
        if self.family in ("theorem25i", "theorem25ii") and self.n != 2:
            raise DomainError(f"{self.family} requires n = 2")
        if self.family == "theorem25i" and self.r != 1:
            raise DomainError("theorem25i requires r = 1")
        if self.family == "theorem25ii" and self.r != 2:
            raise DomainError("theorem25ii requires r = 2")
        if self.family in ("z_km", "janous") and self.n != 1:
            raise DomainError(f"{self.family} requires n = 1")
        if self.family == "kontsevich" and self.n < 2:
            raise DomainError("kontsevich requires dimension >= 2")
        if self.monomial_exponent_y is not None and self.family != "beukers_cell":
            raise DomainError("monomial_exponent_y is for beukers_cell only")


def _one_minus_prod(xs, xcs):
    """1 - prod(xs) without cancellation: fold 1-ab = (1-a) + a(1-b)."""
    c = xcs[-1]
    for x, xc in zip(reversed(xs[:-1]), reversed(xcs[:-1])):
        c = xc + x * c
    return c


def _one_minus_pow(p, pc, r):
    """1 - p^r from p and pc = 1-p: pc * (1 + p + ... + p^(r-1))."""
    if r == 1:
        return pc
    geom = 1 + p
    q = p
    for _ in range(r - 2):
        q = q * p
        geom = geom + q
    return pc * geom


def _log_one_minus_pow(p, pc, r, use_float):
    """log(1 - p^r), accurate for p near 0 (log1p branch) and near 1
    (complement-product branch)."""
    if p < 0.5:
        pr = p ** r
        return math.log1p(-pr) if use_float else mp.log1p(-pr)
    val = _one_minus_pow(p, pc, r)
    return math.log(val) if use_float else mp.log(val)


def _make_scalar_integrand(spec: IntegralSpec, use_float):
    fam = spec.family
    r = spec.r
    log = math.log if use_float else mp.log
    if fam in ("theorem21", "corollary23"):

        def f(xs, xcs):
            factor = 1
            for x in xs:
                factor *= log(x) / x
            p = xs[0]
            for x in xs[1:]:
                p = p * x
            pc = _one_minus_prod(xs, xcs)
            return factor * _log_one_minus_pow(p, pc, r, use_float)

        return f
    if fam in ("theorem25i", "theorem25ii"):
        e = spec.monomial_exponent - 1  # (log t)^2 t^(e) per variable

        def f(xs, xcs):
            (x, y) = xs
            p = x * y
            pc = _one_minus_prod(xs, xcs)
            return (
                log(x) ** 2 * x ** e
                * log(y) ** 2 * y ** e
                * _log_one_minus_pow(p, pc, r, use_float)
            )

        return f
    if fam == "z_km":
        e = spec.monomial_exponent - 1
        mpow = spec.log_power + 1

        def f(xs, xcs):
            x = xs[0]
            return log(x) ** mpow * x ** e * log(xcs[0])

        return f
    if fam == "janous":

        def f(xs, xcs):
            x, xc = xs[0], xcs[0]
            return log(x) * log(xc) / (x * xc)

        return f
    if fam == "beukers_cell":
        a = spec.monomial_exponent
        b = spec.monomial_exponent_y if spec.monomial_exponent_y is not None else a

        def f(xs, xcs):
            x, y = xs
            pc = _one_minus_prod(xs, xcs)
            return -(log(x) + log(y)) * x ** a * y ** b / pc

        return f
    raise DomainError(f"family {fam} has no direct quadrature integrand")


def _make_last_vec_integrand(spec: IntegralSpec):
    """Vectorized innermost-dimension integrand for the float backend."""
    fam = spec.family
    r = spec.r
    if fam in ("theorem21", "corollary23"):

        def fvec(xs, xcs, xa, xca):
            factor = 1.0
            p = 1.0
            for x in xs:
                factor *= math.log(x) / x
                p *= x
            pc = _one_minus_prod(xs, xcs) if xs else None
            one_minus = xca + xa * pc if xs else xca
            pa = p * xa
            if r > 1:
                geom = np.ones_like(pa)
                q = np.ones_like(pa)
                for _ in range(r - 1):
                    q = q * pa
                    geom = geom + q
                one_minus = one_minus * geom
            pr = pa ** r
            with np.errstate(divide="ignore", invalid="ignore"):
                log_small = np.log1p(-pr)
                log_near_one = np.log(one_minus)
            log_term = np.where(pa < 0.5, log_small, log_near_one)
            return factor * (np.log(xa) / xa) * log_term

        return fvec
    return None


def integrate(
    spec: IntegralSpec,
    ctx: PrecisionContext,
    tol=None,
    axis_order: Sequence[int] | None = None,
    max_level: int = MAX_LEVEL_DEFAULT,
):
    """Signed value of the spec's integral (no (-1)^(n+1) prefactor)."""
    if spec.family == "kontsevich":
        raise UnsupportedDimensionError(
            "kontsevich integrals are evaluated by monte_carlo_kontsevich"
        )
    if spec.family in ("theorem21", "corollary23") and spec.n > 3:
        raise UnsupportedDimensionError(
            f"n = {spec.n}: dimensions above 3 only via integrate_mc (n <= 5)"
        )
    f = _make_scalar_integrand(spec, ctx.use_float)
    f_last_vec = _make_last_vec_integrand(spec) if ctx.use_float else None
    if spec.n == 1:
        return tanh_sinh_1d(
            lambda x, xc: f((x,), (xc,)), ctx, tol, max_level
        )
    return integrate_nd(
        f, spec.n, ctx, tol, f_last_vec=f_last_vec,
        axis_order=axis_order, max_level=max_level,
    )


# ---------------------------------------------------------------------------
# Monte Carlo

_MC_CHUNK = 1 << 16  # fixed chunk layout keeps runs bit-reproducible


def _mc_mean_stderr(sampler, samples):
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        take = min(_MC_CHUNK, samples - done)
        vals = sampler(take)
        total += float(np.sum(vals))
        total_sq += float(np.sum(vals * vals))
        done += take
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    stderr = math.sqrt(var / samples)
    return mean, stderr


def monte_carlo_kontsevich(
    k: int, samples: int, seed: int, ctx: PrecisionContext
):
    """Sample mean of 1/(1 - u_1 ... u_k) over uniform points, with its
    standard error.  Deterministic for a fixed seed."""
    if k < 2:
        raise DomainError(f"kontsevich requires k >= 2, got {k}")
    if samples < 10 ** 4:
        raise DomainError("at least 10^4 samples required")
    rng = np.random.Generator(np.random.Philox(key=seed))

    def sampler(count):
        u = rng.random((count, k))
        return 1.0 / (1.0 - np.prod(u, axis=1))

    return _mc_mean_stderr(sampler, samples)


def integrate_mc(
    spec: IntegralSpec,
    samples: int,
    seed: int,
    ctx: PrecisionContext,
):
    """Monte Carlo fallback for theorem21/corollary23 in dimensions 4-5.

    Returns (estimate, stderr).  The integrand has unbounded variance at
    the coordinate hyperplanes, so the standard error is indicative, not
    a certified bound."""
    if spec.family not in ("theorem21", "corollary23"):
        raise DomainError("integrate_mc serves theorem21/corollary23 only")
    if not 4 <= spec.n <= 5:
        raise UnsupportedDimensionError("integrate_mc covers n in {4, 5}")
    rng = np.random.Generator(np.random.Philox(key=seed))
    r = spec.r

    def sampler(count):
        u = rng.random((count, spec.n))
        logs = np.log(u)
        factor = np.prod(logs / u, axis=1)
        p = np.prod(u, axis=1)
        return factor * np.log(1.0 - p ** r)

    return _mc_mean_stderr(sampler, samples)


# ---------------------------------------------------------------------------
# Euler phi identity

def euler_phi_identity_check(n: int, ctx: PrecisionContext, tol=None, phi_terms=None):
    """|(-1)^(n+1) * integral - zeta(2n) zeta(2n+1)| for n in {1, 2}.

    The integrand is prod(log x_i / x_i) * log(phi(prod x_i)).
    ``phi_terms`` caps the series length inside the phi evaluation
    (truncation-stability experiments)."""
    if n not in (1, 2):
        raise UnsupportedDimensionError("euler phi identity check supports n in {1, 2}")
    if tol is None:
        tol = max(ctx.epsilon, 1e-12 if n == 1 else 1e-8)
    use_float = ctx.use_float
    log = math.log if use_float else mp.log

    def logphi(p, pc):
        return log_euler_phi(p, ctx, qc=pc, max_terms=phi_terms)

    def f(xs, xcs):
        factor = 1
        p = xs[0]
        for x in xs[1:]:
            p = p * x
        for x in xs:
            factor *= log(x) / x
        return factor * logphi(p, _one_minus_prod(xs, xcs))

    if n == 1:
        integral = tanh_sinh_1d(lambda x, xc: f((x,), (xc,)), ctx, tol)
    else:
        integral = integrate_nd(f, n, ctx, tol)
    value = integral if n % 2 == 1 else -integral
    reference = zeta(2 * n, ctx) * zeta(2 * n + 1, ctx)
    return abs(value - reference)
