"""Explicit antiderivative of the hypercube integrand, with a
finite-difference check of its mixed-partial identity.

The antiderivative is taken in symmetric-function form

    M_n(x) = sum_{m=0}^{n} (-1)^(n+1-m) e_m(log x_1, ..., log x_n)
             * Li_{2n+1-m}(x_1 ... x_n)

with e_m the m-th elementary symmetric polynomial.  Its n-fold mixed
partial equals

    (prod_i log(x_i)/x_i) * log(1 - prod_i x_i)

which ``mixed_partial_residual`` verifies numerically with an n-fold
tensor central-difference stencil.
"""
from __future__ import annotations

from itertools import product
from typing import Sequence

from mpmath import mp

from .errors import BoundaryError, DomainError, UnsupportedDimensionError
from .precision import PrecisionContext
from .specfun import polylog_multi


def _validate_interior(xs):
    for x in xs:
        if not (0 < x < 1):
            raise BoundaryError(f"coordinate {x} is not strictly inside (0, 1)")


def _elementary_symmetric(values):
    """Coefficients e_0 .. e_n of the elementary symmetric polynomials."""
    coeffs = [mp.mpf(1)]
    for v in values:
        coeffs.append(mp.mpf(0))
        for i in range(len(coeffs) - 1, 0, -1):
            coeffs[i] += v * coeffs[i - 1]
    return coeffs


def m_n(x: Sequence, ctx: PrecisionContext):
    """Value of the antiderivative M_n at a strictly interior point."""
    n = len(x)
    if n < 1:
        raise DomainError("need at least one coordinate")
    with ctx.workdps():
        xs = [mp.mpf(xi) for xi in x]
        _validate_interior(xs)
        p = xs[0]
        for xi in xs[1:]:
            p = p * xi
        logs = [mp.log(xi) for xi in xs]
        elem = _elementary_symmetric(logs)
        li = polylog_multi(range(n + 1, 2 * n + 2), p, ctx)
        total = mp.mpf(0)
        for m in range(n + 1):
            sign = 1 if (n + 1 - m) % 2 == 0 else -1
            total += sign * elem[m] * li[2 * n + 1 - m]
        return +total


def integrand(x: Sequence, ctx: PrecisionContext):
    """(prod_i log(x_i)/x_i) * log(1 - prod_i x_i) at an interior point."""
    with ctx.workdps():
        xs = [mp.mpf(xi) for xi in x]
        _validate_interior(xs)
        factor = mp.mpf(1)
        p = mp.mpf(1)
        for xi in xs:
            factor *= mp.log(xi) / xi
            p *= xi
        return +(factor * mp.log(1 - p))


def mixed_partial_residual(x: Sequence, step, ctx: PrecisionContext):
    """|n-fold central difference of M_n - integrand| at x.

    Requires margin >= 2*step from each boundary, n <= 3, and enough
    working digits that cancellation stays below truncation
    (digits >= 4*|log10 step| + 10).
    """
    n = len(x)
    if n > 3:
        raise UnsupportedDimensionError("mixed partial check supports n <= 3")
    with ctx.workdps():
        h = mp.mpf(step)
        xs = [mp.mpf(xi) for xi in x]
        _validate_interior(xs)
        for xi in xs:
            if xi < 2 * h or xi > 1 - 2 * h:
                raise DomainError(
                    f"coordinate {xi} closer than 2*step to the boundary"
                )
        needed = 4 * abs(mp.log10(h)) + 10
        if ctx.digits < needed:
            raise DomainError(
                f"step {step} needs at least {mp.nstr(needed, 3)} digits, "
                f"context has {ctx.digits}"
            )
        fd = mp.mpf(0)
        for signs in product((-1, 1), repeat=n):
            point = [xi + s * h for xi, s in zip(xs, signs)]
            parity = 1
            for s in signs:
                parity *= s
            fd += parity * m_n(point, ctx)
        fd /= (2 * h) ** n
        return abs(fd - integrand(xs, ctx))
