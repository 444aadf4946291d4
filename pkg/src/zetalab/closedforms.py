"""Exact closed forms for the weighted log-integral families, their
brute-force series oracles, and the derived fraction/bound sequences.

Families (a = 2k+1 throughout):

    I family:  int (log x)^2 x^(a-1) (log y)^2 y^(a-1) log(1-xy)
    J family:  same weight, log(1-(xy)^2)
    Z family:  int (log x)^(m+1) x^(a-1) log(1-x)  (one-dimensional)

Every closed form is assembled from the partial-fraction identity

    1/(u(u+a)^p) = 1/(a^p u) - sum_{j=1}^{p} 1/(a^(p+1-j) (u+a)^j)

summed over u >= 1, which turns each family's defining series into
rational multiples of zeta values plus exact harmonic corrections.  The
series themselves (``oracle_i`` etc.) are summed independently in
float64 with ``math.fsum`` and an analytic tail bound, so form and
oracle are two genuinely separate routes to the same number.

Known deviations between these oracle-arbitrated forms and their
published displays are catalogued in ``zetalab.errata``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .errors import DomainError
from .forms import BigRational, ZetaLinearForm
from .precision import PrecisionContext
from .specfun import harmonic, zeta

ORACLE_TERMS_DEFAULT = 10 ** 6
# an oracle is only trustworthy if its dropped tail is provably below this
ORACLE_TAIL_LIMIT = 1e-18

BOUND_FAMILIES = ("I", "J", "Z")


def _odd_index(k: int) -> int:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    return 2 * k + 1


def _check_tail(bound: float, terms: int):
    if bound > ORACLE_TAIL_LIMIT:
        raise DomainError(
            f"oracle tail bound {bound:.3e} exceeds {ORACLE_TAIL_LIMIT:.0e} "
            f"at {terms} terms; increase the term count"
        )


# ---------------------------------------------------------------------------
# I family

def closed_form_i(k: int) -> ZetaLinearForm:
    """Exact value of the I-family integral as a form in zeta(2)..zeta(6).

    Equals oracle_i(k): summing the partial-fraction identity at p = 6
    over u >= 1 gives 4*zeta(j)/a^(7-j) for j = 2..6 minus the harmonic
    corrections below.  The correction sum stops at j = 5: its would-be
    j = 6 term is exactly the standalone plain-harmonic term, which the
    published display lists twice (see zetalab.errata, id family-i-j6).
    """
    a = _odd_index(k)
    zeta_part = {j: Fraction(4, a ** (7 - j)) for j in range(2, 7)}
    const = -Fraction(4) * harmonic(a, 1).value / a ** 6
    for j in range(1, 6):
        const -= Fraction(4) * harmonic(a, 7 - j).value / a ** j
    return ZetaLinearForm.make(constant=const, zeta=zeta_part)


def oracle_i(k: int, terms: int = ORACLE_TERMS_DEFAULT) -> float:
    """-sum_{u>=1} 4/(u (a+u)^6), float64 partial sum with checked tail."""
    a = _odd_index(k)
    _check_tail(4.0 / (5 * terms ** 5 * a), terms)
    return -math.fsum(4.0 / (u * (a + u) ** 6) for u in range(1, terms + 1))


# ---------------------------------------------------------------------------
# J family

def closed_form_ii(k: int) -> ZetaLinearForm:
    """Exact value of the J-family integral.

    Odd-indexed analogue of closed_form_i: the defining series runs over
    even shifts, so the zeta coefficients pick up (1 - 2^-j) factors,
    a log(2) term appears from the telescoped j = 1 piece, and the
    harmonic corrections are odd-denominator sums including the i = 0
    term.  The published display's standalone coefficient (4, not 8) and
    i = 1 lower limits do not match the series; see zetalab.errata.
    """
    a = _odd_index(k)
    zeta_part = {
        j: Fraction(8) * (1 - Fraction(1, 2 ** j)) / a ** (7 - j)
        for j in range(2, 7)
    }
    const = -Fraction(8) * harmonic(k, 1, "odd").value / a ** 6
    for j in range(1, 6):
        const -= Fraction(8) * harmonic(k, 7 - j, "odd").value / a ** j
    return ZetaLinearForm.make(
        constant=const, zeta=zeta_part, log2=Fraction(8, a ** 6)
    )


def oracle_ii(k: int, terms: int = ORACLE_TERMS_DEFAULT) -> float:
    """-sum_{u>=1} 4/(u (a+2u)^6), float64 partial sum with checked tail."""
    a = _odd_index(k)
    # tail < (1/N) sum_{u>N} 4/(2u)^6 < 1/(80 N^6)
    _check_tail(1.0 / (80 * terms ** 6), terms)
    return -math.fsum(4.0 / (u * (a + 2 * u) ** 6) for u in range(1, terms + 1))


# ---------------------------------------------------------------------------
# Z family

def z_closed_form(k: int, m: int) -> tuple[ZetaLinearForm, BigRational]:
    """Closed form of the Z-family integral and its exact rational part.

    Returns (form, s_over_t) with s_over_t > 0 and

        form = sigma * sum_{j=0}^{m} (m+1)! zeta(m+2-j) / a^(j+1)
               - sigma * s_over_t,        sigma = (-1)^(m+1).

    The published display omits sigma, which is only correct for odd m
    (the integrand's (log x)^(m+1) factor flips sign with m); see
    zetalab.errata, id z-family-sign.
    """
    a = _odd_index(k)
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    sigma = 1 if m % 2 == 1 else -1
    fact = math.factorial(m + 1)
    zeta_part = {
        m + 2 - j: Fraction(sigma * fact, a ** (j + 1)) for j in range(m + 1)
    }
    s_over_t = Fraction(fact) * harmonic(a, 1).value / a ** (m + 2)
    for j in range(2, m + 3):
        s_over_t += Fraction(fact) * harmonic(a, j).value / a ** (m + 3 - j)
    form = ZetaLinearForm.make(constant=-sigma * s_over_t, zeta=zeta_part)
    return form, s_over_t


def oracle_z(k: int, m: int, terms: int = ORACLE_TERMS_DEFAULT) -> float:
    """(-1)^m (m+1)! sum_{u>=1} 1/(u (u+a)^(m+2)), checked tail."""
    a = _odd_index(k)
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    fact = math.factorial(m + 1)
    _check_tail(fact / ((m + 2) * float(terms) ** (m + 2)), terms)
    sign = 1 if m % 2 == 0 else -1
    return sign * math.fsum(
        fact / (u * (u + a) ** (m + 2)) for u in range(1, terms + 1)
    )


# ---------------------------------------------------------------------------
# derived fractions

def fraction_ab(k: int) -> BigRational:
    """a^2 times the exact harmonic correction of the I family, i.e. the
    reduced rational with a^2 * I_k = 4 zeta(5)/1 - fraction_ab(k) after
    the non-zeta(5) terms are moved to the left-hand side."""
    a = _odd_index(k)
    c = Fraction(4) * harmonic(a, 1).value / a ** 6
    for j in range(1, 6):
        c += Fraction(4) * harmonic(a, 7 - j).value / a ** j
    return a ** 2 * c


def fraction_cd(k: int) -> BigRational:
    """4 a^2 times the exact odd-harmonic correction of the J family."""
    a = _odd_index(k)
    c = Fraction(8) * harmonic(k, 1, "odd").value / a ** 6
    for j in range(1, 6):
        c += Fraction(8) * harmonic(k, 7 - j, "odd").value / a ** j
    return 4 * a ** 2 * c


# ---------------------------------------------------------------------------
# suprema and bound right-hand sides

def sup_log_power(k: int, m: int) -> tuple[float, float]:
    """(argmax, max) of |log(x)^m x^(2k+1)| on [0, 1].

    The single interior critical point is x* = e^(-m/(2k+1)) with value
    (m/((2k+1) e))^m.
    """
    a = _odd_index(k)
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    return math.exp(-m / a), (m / (a * math.e)) ** m


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-10) -> float:
    """Argmax of a unimodal f on [lo, hi] by golden-section search."""
    inv_phi = (math.sqrt(5) - 1) / 2
    c = hi - inv_phi * (hi - lo)
    d = lo + inv_phi * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - inv_phi * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv_phi * (hi - lo)
            fd = f(d)
    return (lo + hi) / 2


def bound_rhs(family: str, k: int, m: int, ctx: PrecisionContext):
    """Displayed right-hand side of the family's bound inequality.

    I: zeta(5) + 4 a zeta(6) + 4 zeta(4)/a + 4 zeta(3)/a^2 + 4 zeta(2)/a^3
    J: 4 zeta(5) + 63 a zeta(6)/2 + 30 zeta(4)/a + 28 zeta(3)/a^2
       + 24 zeta(2)/a^3 + 32 log(2)/a^4
    Z: m^m zeta(3)/(a^(m-1) e^m) + sum_{j=1}^m (m+1)! zeta(m+2-j)/a^j

    I and J grow linearly in k; Z decays.  ``m`` is ignored except for Z.
    """
    a = _odd_index(k)
    with ctx.workdps():
        if family == "I":
            val = (
                zeta(5, ctx)
                + 4 * a * zeta(6, ctx)
                + 4 * zeta(4, ctx) / a
                + 4 * zeta(3, ctx) / a ** 2
                + 4 * zeta(2, ctx) / a ** 3
            )
        elif family == "J":
            val = (
                4 * zeta(5, ctx)
                + mp.mpf(63) * a * zeta(6, ctx) / 2
                + 30 * zeta(4, ctx) / a
                + 28 * zeta(3, ctx) / a ** 2
                + 24 * zeta(2, ctx) / a ** 3
                + 32 * mp.log(2) / a ** 4
            )
        elif family == "Z":
            if m < 1:
                raise DomainError(f"family Z requires m >= 1, got {m}")
            fact = math.factorial(m + 1)
            val = (
                mp.mpf(m) ** m * zeta(3, ctx)
                / (mp.mpf(a) ** (m - 1) * mp.e ** m)
            )
            for j in range(1, m + 1):
                val += fact * zeta(m + 2 - j, ctx) / mp.mpf(a) ** j
        else:
            raise DomainError(f"unknown bound family {family!r}")
        return +val


def bound_z_decreased(k: int, m: int, ctx: PrecisionContext) -> bool:
    """Whether the Z-family bound at k is below its value at k - 1."""
    if k < 2:
        raise DomainError("comparison needs k >= 2")
    return bound_rhs("Z", k, m, ctx) < bound_rhs("Z", k - 1, m, ctx)


def z_denominator(k: int, m: int) -> int:
    """t_{k,m}: the common denominator (a * lcm(1..a))^(m+2) produced by
    combining the completed sums of the Z family over one denominator
    (before any reduction).  z_closed_form's s_over_t times this value
    is the integer s_{k,m}."""
    a = _odd_index(k)
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    return (a * math.lcm(*range(1, a + 1))) ** (m + 2)


def bound_z_scaled(k: int, m: int, ctx: PrecisionContext):
    """Z-family bound multiplied by t_{k,m}.  This is the quantity that
    would have to vanish as k grows for an irrationality argument; it
    grows instead (the denominator outpaces the bound's 1/k decay)."""
    with ctx.workdps():
        return +(bound_rhs("Z", k, m, ctx) * z_denominator(k, m))


# ---------------------------------------------------------------------------
# sequence rows

SEQUENCE_FAMILIES = ("I_k", "J_k", "Z_km", "bound_i", "bound_j", "bound_z")


@dataclass(frozen=True)
class SequenceRecord:
    """One row of a family table: closed-form value vs independent oracle."""

    family: str
    k: int
    m: int
    closed: ZetaLinearForm | None
    numeric: float
    oracle: float
    residual: float


def sequence_record(
    family: str, k: int, ctx: PrecisionContext, m: int = 0
) -> SequenceRecord:
    if family == "I_k":
        closed = closed_form_i(k)
        numeric = closed.evaluate(ctx)
        oracle = oracle_i(k)
    elif family == "J_k":
        closed = closed_form_ii(k)
        numeric = closed.evaluate(ctx)
        oracle = oracle_ii(k)
    elif family == "Z_km":
        closed, _ = z_closed_form(k, m)
        numeric = closed.evaluate(ctx)
        oracle = oracle_z(k, m)
    elif family in ("bound_i", "bound_j", "bound_z"):
        closed = None
        fam = family[-1].upper()
        numeric = bound_rhs(fam, k, m, ctx)
        # independent route: same display evaluated on mpmath's own zeta
        with ctx.workdps():
            if fam == "I":
                a = 2 * k + 1
                oracle = float(
                    mp.zeta(5) + 4 * a * mp.zeta(6) + 4 * mp.zeta(4) / a
                    + 4 * mp.zeta(3) / a ** 2 + 4 * mp.zeta(2) / a ** 3
                )
            elif fam == "J":
                a = 2 * k + 1
                oracle = float(
                    4 * mp.zeta(5) + mp.mpf(63) * a * mp.zeta(6) / 2
                    + 30 * mp.zeta(4) / a + 28 * mp.zeta(3) / a ** 2
                    + 24 * mp.zeta(2) / a ** 3 + 32 * mp.log(2) / a ** 4
                )
            else:
                a = 2 * k + 1
                fact = math.factorial(m + 1)
                acc = mp.mpf(m) ** m * mp.zeta(3) / (mp.mpf(a) ** (m - 1) * mp.e ** m)
                for j in range(1, m + 1):
                    acc += fact * mp.zeta(m + 2 - j) / mp.mpf(a) ** j
                oracle = float(acc)
    else:
        raise DomainError(f"unknown sequence family {family!r}")
    numeric = float(numeric)
    oracle = float(oracle)
    return SequenceRecord(
        family=family,
        k=k,
        m=m,
        closed=closed,
        numeric=numeric,
        oracle=oracle,
        residual=abs(numeric - oracle),
    )
