"""Desk-scale reconstruction of the classical irrationality pipeline for
zeta(3): shifted Legendre polynomials, exact cell integrals, the integer
linear forms A_k + B_k zeta(3), lcm denominators, and the supporting
suprema and identities.

The central object is

    I_k = int_0^1 int_0^1 -log(xy)/(1 - xy) * P_k(x) P_k(y) dx dy

with P_k the shifted Legendre-type polynomial.  Expanding the product
and integrating each monomial cell exactly gives I_k as a rational plus
a rational multiple of zeta(3); clearing denominators by d_k^3
(d_k = lcm(1..k)) yields integers A_k, B_k with
I_k * d_k^3 = A_k + B_k zeta(3).  Independent numerical routes (direct
2-D quadrature, and the 3-D integral the pipeline derives by
integrating out the logarithm) cross-check the exact construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from mpmath import mp

from .errors import DomainError, IntegrityError
from .forms import ZetaLinearForm
from .precision import FLOAT_CTX, PrecisionContext
from .quad import _one_minus_prod, integrate_nd, tanh_sinh_1d
from .specfun import harmonic, zeta


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[i] is the degree-i coefficient."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        for c in self.coeffs:
            if not isinstance(c, int):
                raise ValueError("coefficients must be integers")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class LinearFormZ3:
    """Integer pair with I_k * d_k^3 = A + B * zeta(3)."""

    A: int
    B: int
    k: int

    def evaluate(self, ctx: PrecisionContext):
        with ctx.workdps():
            return +(self.A + self.B * zeta(3, ctx))


def legendre_poly(k: int) -> IntPolynomial:
    """(1/k!) d^k/dx^k [x^k (1-x)^k]: coefficient of x^j is
    (-1)^j C(k,j) C(k+j,j)."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    coeffs = tuple(
        (-1) ** j * math.comb(k, j) * math.comb(k + j, j) for j in range(k + 1)
    )
    return IntPolynomial(coeffs=coeffs)


def cell_integral(r: int, s: int) -> ZetaLinearForm:
    """Exact value of int int -log(xy)/(1-xy) x^r y^s dx dy.

    Expanding 1/(1-xy) termwise gives
    sum_n [1/((n+r+1)^2 (n+s+1)) + 1/((n+r+1)(n+s+1)^2)]; for r = s this
    is 2(zeta(3) - H_r^(3)), for r != s partial fractions telescope the
    whole series to the pure rational (H_max^(2) - H_min^(2))/|r - s|.
    """
    if r < 0 or s < 0:
        raise DomainError("cell exponents must be non-negative")
    if r == s:
        return ZetaLinearForm.make(
            constant=-2 * harmonic(r, 3).value, zeta={3: 2}
        )
    hi, lo = max(r, s), min(r, s)
    value = (harmonic(hi, 2).value - harmonic(lo, 2).value) / (hi - lo)
    return ZetaLinearForm.make(constant=value)


def cell_series_oracle(r: int, s: int, terms: int = 10 ** 6) -> float:
    """Brute-force value of the cell series
    sum_n [1/((n+r+1)^2 (n+s+1)) + 1/((n+r+1)(n+s+1)^2)],
    summed termwise in float64 with an Euler-Maclaurin tail: the exact
    tail integral is 1/((N+r+1)(N+s+1)) (by partial-fraction
    integration), plus half the first dropped term."""
    a, b = r + 1, s + 1

    def g(n):
        return 1.0 / ((n + a) ** 2 * (n + b)) + 1.0 / ((n + a) * (n + b) ** 2)

    partial = math.fsum(g(n) for n in range(terms))
    return partial + 1.0 / ((terms + a) * (terms + b)) + g(terms) / 2


def lcm_seq(k: int) -> int:
    """d_k = lcm(1..k), built incrementally: d_j grows by a factor p
    exactly when j is a power of the prime p."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    d = 1
    for j in range(2, k + 1):
        p = _prime_power_base(j)
        if p is not None:
            d *= p
    return d


def _prime_power_base(j: int) -> int | None:
    """The prime p if j = p^e for some e >= 1, else None."""
    for p in range(2, math.isqrt(j) + 1):
        if j % p == 0:
            while j % p == 0:
                j //= p
            return p if j == 1 else None
    return j  # j is prime


def beukers_linear_form(k: int) -> LinearFormZ3:
    """Exact integers (A, B) with I_k * d_k^3 = A + B * zeta(3).

    Sums cell_integral over all monomial pairs of P_k(x) P_k(y); the
    rational part's denominator must divide d_k^3 or the construction's
    integrality claim is falsified (IntegrityError).
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if k > 30:
        raise DomainError("k > 30 exceeds the coefficient growth guard")
    p = legendre_poly(k).coeffs
    d3 = lcm_seq(k) ** 3
    b_coeff = 2 * sum(c * c for c in p)
    rational = Fraction(0)
    for i, pi in enumerate(p):
        rational -= 2 * pi * pi * harmonic(i, 3).value
        for j, pj in enumerate(p):
            if i < j:
                cell = (harmonic(j, 2).value - harmonic(i, 2).value) / (j - i)
                rational += 2 * pi * pj * cell
    a_scaled = rational * d3
    if a_scaled.denominator != 1:
        raise IntegrityError(
            f"rational part denominator {rational.denominator} does not "
            f"divide d_{k}^3 = {d3}"
        )
    return LinearFormZ3(A=int(a_scaled), B=b_coeff * d3, k=k)


def beukers_exact_form(k: int) -> ZetaLinearForm:
    """I_k itself (before clearing denominators) as an exact form."""
    lf = beukers_linear_form(k)
    d3 = lcm_seq(k) ** 3
    return ZetaLinearForm.make(
        constant=Fraction(lf.A, d3), zeta={3: Fraction(lf.B, d3)}
    )


# ---------------------------------------------------------------------------
# independent numerical routes

def beukers_quadrature_2d(k: int, ctx: PrecisionContext, tol=None):
    """Direct 2-D tanh-sinh value of the defining I_k integral."""
    poly = legendre_poly(k)
    use_float = ctx.use_float
    log = math.log if use_float else mp.log

    def f(xs, xcs):
        x, y = xs
        pc = _one_minus_prod(xs, xcs)
        return -(log(x) + log(y)) * poly(x) * poly(y) / pc

    return integrate_nd(f, 2, ctx, tol)


def beukers_quadrature_3d(k: int, ctx: PrecisionContext, tol=None):
    """3-D route: after integrating out the logarithm the pipeline
    rewrites I_k as

        int [w(x) w(y) w(z)]^k / ((1-z) + xyz) dx dy dz,
        w(t) = t(1-t),

    using the substitution that replaces 1 - (1-xy)z by (1-z) + xyz.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    use_float = ctx.use_float

    def f(xs, xcs):
        x, y, z = xs
        xc, yc, zc = xcs
        denom = zc + x * y * z
        core = (x * xc * y * yc * z * zc) / denom
        return core ** k / denom

    def f_last_vec(xs, xcs, za, zca):
        x, y = xs
        xc, yc = xcs
        denom = zca + x * y * za
        core = (x * xc * y * yc * za * zca) / denom
        return core ** k / denom

    return integrate_nd(
        f, 3, ctx, tol, f_last_vec=f_last_vec if use_float else None
    )


def shrink_sup_check(grid: int, ctx: PrecisionContext) -> float:
    """Maximum of x(1-x)y(1-y)z(1-z)/((1-z) + xyz) over [0,1]^3 by grid
    scan plus local zoom refinement.  The analytic maximum is
    (sqrt(2)-1)^4 = 17 - 12 sqrt(2).
    """
    if grid < 100:
        raise DomainError(f"grid must be >= 100, got {grid}")

    def fgrid(x, y, z):
        return (
            x * (1 - x) * y * (1 - y) * z * (1 - z) / ((1 - z) + x * y * z)
        )

    ts = np.linspace(0.0, 1.0, grid)
    best = -1.0
    argmax = (0.5, 0.5, 0.5)
    x = ts[:, None]
    y = ts[None, :]
    for z in ts:
        with np.errstate(invalid="ignore"):
            vals = fgrid(x, y, z)
        vals = np.nan_to_num(vals, nan=0.0)
        idx = np.argmax(vals)
        if vals.flat[idx] > best:
            best = float(vals.flat[idx])
            i, j = np.unravel_index(idx, vals.shape)
            argmax = (float(ts[i]), float(ts[j]), float(z))
    # zoom refinement: repeatedly re-grid a shrinking box around the best
    cx, cy, cz = argmax
    half = 1.0 / (grid - 1)
    for _ in range(25):
        xs = np.clip(np.linspace(cx - half, cx + half, 11), 0.0, 1.0)
        ys = np.clip(np.linspace(cy - half, cy + half, 11), 0.0, 1.0)
        zs = np.clip(np.linspace(cz - half, cz + half, 11), 0.0, 1.0)
        with np.errstate(invalid="ignore"):
            vals = fgrid(xs[:, None, None], ys[None, :, None], zs[None, None, :])
        vals = np.nan_to_num(vals, nan=0.0)
        i, j, l = np.unravel_index(np.argmax(vals), vals.shape)
        best = max(best, float(vals[i, j, l]))
        cx, cy, cz = float(xs[i]), float(ys[j]), float(zs[l])
        half *= 0.4
    return best


SHRINK_SUP_EXACT = 17 - 12 * math.sqrt(2)  # (sqrt(2)-1)^4


def step4_identity_check(x, y, ctx: PrecisionContext):
    """|int_0^1 dz/(1-(1-xy)z) - (-log(xy)/(1-xy))| by quadrature."""
    xf, yf = float(x), float(y)
    if not (0 < xf < 1 and 0 < yf < 1):
        raise DomainError("x and y must lie strictly inside (0, 1)")
    if ctx.use_float:
        p = xf * yf
        quad = tanh_sinh_1d(lambda z, zc: 1.0 / (zc + p * z), ctx)
        return abs(quad - (-math.log(p) / (1.0 - p)))
    with ctx.workdps():
        p = mp.mpf(x) * mp.mpf(y)
        quad = tanh_sinh_1d(lambda z, zc: 1 / (zc + p * z), ctx)
        return abs(quad - (-mp.log(p) / (1 - p)))
