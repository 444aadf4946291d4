"""Machine-readable errata: every point where an implemented,
oracle-verified formula deviates from its published display.

Each entry records the family the display belongs to, what the display
says, what this package ships, and why the shipped form wins (always:
it is the one that matches an independent series, finite-difference, or
integrality oracle).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Erratum:
    id: str
    family: str
    published: str
    implemented: str
    note: str


ERRATA: tuple[Erratum, ...] = (
    Erratum(
        id="family-i-duplicate-harmonic",
        family="I closed form",
        published=(
            "standalone term -4/(2k+1)^6 * sum_{n=1}^{2k+1} 1/n alongside a "
            "correction sum over j = 1..6 whose j = 6 term is that same "
            "harmonic sum"
        ),
        implemented=(
            "correction sum over j = 1..5 plus the standalone harmonic term "
            "(equivalently a single j = 1..6 sum)"
        ),
        note=(
            "the published layout counts the plain harmonic term twice; the "
            "partial-fraction derivation and the series oracle "
            "-sum 4/(u(2k+1+u)^6) fix the single-count layout"
        ),
    ),
    Erratum(
        id="family-j-standalone-coefficient",
        family="J closed form",
        published=(
            "standalone odd-harmonic term with coefficient 4 and inner sums "
            "starting at i = 1"
        ),
        implemented=(
            "coefficient 8 (the j = 6 term of the correction sum) with "
            "odd-harmonic sums over i = 0..k so the i = 0 summand 1 is "
            "included"
        ),
        note=(
            "matching the series oracle -sum 4/(u(2k+1+2u)^6) requires "
            "coefficient 8 and the i = 0 term; with the published layout the "
            "form misses the oracle by an O(1/(2k+1)) amount"
        ),
    ),
    Erratum(
        id="family-j-series-shift",
        family="J closed form",
        published="defining series denominator written (2k+1+u)^6",
        implemented="(2k+1+2u)^6 (the substitution doubles the shift)",
        note=(
            "the odd-index family sums over even shifts; the published "
            "exponent base drops the factor 2 on u"
        ),
    ),
    Erratum(
        id="z-family-sign",
        family="Z closed form",
        published=(
            "integral equals -sum (m+1)!/(u(u+2k+1)^(m+2)) and a closed form "
            "without an m-dependent sign"
        ),
        implemented=(
            "sign (-1)^(m+1) on both the series and the zeta part (the "
            "integrand carries (log x)^(m+1) which is negative inside the unit interval "
            "only for even m+1)"
        ),
        note="the published display is correct for odd m only",
    ),
    Erratum(
        id="antiderivative-display",
        family="hypercube antiderivative",
        published=(
            "an antiderivative display whose n-fold mixed partial does not "
            "reproduce the integrand"
        ),
        implemented=(
            "M_n = sum_{m=0}^{n} (-1)^(n+1-m) e_m(log x_1..log x_n) "
            "Li_{2n+1-m}(x_1..x_n) verified by n-fold central differences"
        ),
        note="finite-difference oracle residual <= 1e-6 at step 1e-4",
    ),
    Erratum(
        id="euler-phi-sign",
        family="Euler phi identity",
        published=(
            "phi-weighted hypercube integral equated to zeta(2n) zeta(2n+1) "
            "with no sign"
        ),
        implemented="factor (-1)^(n+1) applied to the integral",
        note=(
            "the integrand is positive for odd n and negative for even n; "
            "without the sign the n = 2 identity fails by twice the value"
        ),
    ),
    Erratum(
        id="beukers-legendre-misprint",
        family="Beukers pipeline",
        published="P_k(x) = (1/k!) (d/dx)^k [x^k (1 - x^k)]",
        implemented="P_k(x) = (1/k!) (d/dx)^k [x^k (1 - x)^k]",
        note=(
            "with the published form the linear-form denominators do not "
            "divide lcm(1..k)^3 and the (4/5)^k bound fails; the shifted "
            "Legendre form satisfies both"
        ),
    ),
    Erratum(
        id="beukers-lcm-index",
        family="Beukers pipeline",
        published="denominator written d_n^3",
        implemented="d_k^3 with d_k = lcm(1..k)",
        note="k is the only index in scope; n is a typo",
    ),
)


def errata_table() -> list[dict]:
    """The errata as a list of plain dicts (JSON/CSV-ready)."""
    return [asdict(e) for e in ERRATA]
