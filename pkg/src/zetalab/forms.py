"""Exact linear forms in zeta values.

A ``ZetaLinearForm`` is the exact object

    q0 + sum_j q_j * zeta(m_j) + qL * log(2)

with rational coefficients and integer orders m_j >= 2.  All closed-form
right-hand sides produced by this package live in this algebra.  Forms are
normalized on construction (zero coefficients dropped, orders sorted), so
structural equality is semantic equality.

Exact rationals are stdlib ``fractions.Fraction`` throughout; the alias
``BigRational`` names that role.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from mpmath import mp

from .errors import DomainError
from .precision import PrecisionContext

BigRational = Fraction

RationalLike = Union[int, str, Fraction]


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class ZetaLinearForm:
    constant: Fraction = Fraction(0)
    # sorted (order, coefficient) pairs, no zero coefficients
    zeta_terms: tuple[tuple[int, Fraction], ...] = ()
    log2_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        for order, coeff in self.zeta_terms:
            if order < 2:
                raise DomainError(f"zeta order must be >= 2, got {order}")
            if coeff == 0:
                raise ValueError("normalized form must not store zero coefficients")

    @classmethod
    def make(
        cls,
        constant: RationalLike = 0,
        zeta: Mapping[int, RationalLike] | None = None,
        log2: RationalLike = 0,
    ) -> "ZetaLinearForm":
        terms = {}
        for order, coeff in (zeta or {}).items():
            c = _frac(coeff)
            if c != 0:
                terms[int(order)] = c
        return cls(
            constant=_frac(constant),
            zeta_terms=tuple(sorted(terms.items())),
            log2_coeff=_frac(log2),
        )

    @property
    def zeta(self) -> dict[int, Fraction]:
        return dict(self.zeta_terms)

    def __add__(self, other: "ZetaLinearForm") -> "ZetaLinearForm":
        terms = self.zeta
        for order, coeff in other.zeta_terms:
            terms[order] = terms.get(order, Fraction(0)) + coeff
        return ZetaLinearForm.make(
            constant=self.constant + other.constant,
            zeta=terms,
            log2=self.log2_coeff + other.log2_coeff,
        )

    def __neg__(self) -> "ZetaLinearForm":
        return self.scale(-1)

    def __sub__(self, other: "ZetaLinearForm") -> "ZetaLinearForm":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "ZetaLinearForm":
        f = _frac(factor)
        if f == 0:
            return ZetaLinearForm.make()
        return ZetaLinearForm.make(
            constant=self.constant * f,
            zeta={order: coeff * f for order, coeff in self.zeta_terms},
            log2=self.log2_coeff * f,
        )

    def evaluate(self, ctx: PrecisionContext):
        """Numeric value of the form under ``ctx``, as an mpf."""
        from .specfun import zeta as zeta_fn

        with ctx.workdps():
            total = mp.mpf(self.constant.numerator) / self.constant.denominator
            for order, coeff in self.zeta_terms:
                z = zeta_fn(order, ctx)
                total += z * coeff.numerator / coeff.denominator
            if self.log2_coeff != 0:
                total += mp.log(2) * self.log2_coeff.numerator / self.log2_coeff.denominator
            return +total

    def describe(self) -> str:
        """Stable human-readable rendering, e.g. ``-9/4 + 2*zeta(3)``."""
        parts = []
        if self.constant != 0 or (not self.zeta_terms and self.log2_coeff == 0):
            parts.append(str(self.constant))
        for order, coeff in self.zeta_terms:
            parts.append(f"{coeff}*zeta({order})")
        if self.log2_coeff != 0:
            parts.append(f"{self.log2_coeff}*log(2)")
        return " + ".join(parts).replace("+ -", "- ")


def form_add(a: ZetaLinearForm, b: ZetaLinearForm) -> ZetaLinearForm:
    return a + b


def form_eval(f: ZetaLinearForm, ctx: PrecisionContext):
    return f.evaluate(ctx)
