import math
from fractions import Fraction

import pytest
from mpmath import mp

import zetalab.beukers as beukers
from zetalab.beukers import (
    SHRINK_SUP_EXACT,
    IntPolynomial,
    LinearFormZ3,
    beukers_exact_form,
    beukers_linear_form,
    beukers_quadrature_2d,
    beukers_quadrature_3d,
    cell_integral,
    cell_series_oracle,
    lcm_seq,
    legendre_poly,
    shrink_sup_check,
    step4_identity_check,
)
from zetalab.errors import DomainError, IntegrityError
from zetalab.forms import ZetaLinearForm
from zetalab.precision import FLOAT_CTX, PrecisionContext
from zetalab.specfun import zeta

CTX = PrecisionContext(30)


# ---------------------------------------------------------------------------
# polynomials


def test_int_polynomial_contract():
    p = IntPolynomial((1, -2, 3))
    assert p.degree == 2
    assert p(2) == 1 - 4 + 12
    assert p(Fraction(1, 2)) == Fraction(3, 4)
    with pytest.raises(ValueError):
        IntPolynomial((1, 0))
    with pytest.raises(ValueError):
        IntPolynomial((1.5,))


def test_legendre_examples():
    assert legendre_poly(0).coeffs == (1,)
    assert legendre_poly(1).coeffs == (1, -2)
    assert legendre_poly(2).coeffs == (1, -6, 6)
    assert legendre_poly(3).coeffs == (1, -12, 30, -20)
    with pytest.raises(DomainError):
        legendre_poly(-1)


@pytest.mark.parametrize("k", range(1, 8))
def test_legendre_endpoint_values(k):
    p = legendre_poly(k)
    assert p(0) == 1
    assert p(1) == (-1) ** k


# ---------------------------------------------------------------------------
# cells


def test_cell_diagonal_examples():
    assert cell_integral(0, 0) == ZetaLinearForm.make(zeta={3: 2})
    assert cell_integral(1, 1) == ZetaLinearForm.make(constant=-2, zeta={3: 2})


def test_cell_off_diagonal_examples():
    assert cell_integral(1, 0) == ZetaLinearForm.make(constant=1)
    assert cell_integral(2, 0) == ZetaLinearForm.make(constant=Fraction(5, 8))
    assert cell_integral(0, 2) == cell_integral(2, 0)  # symmetric
    with pytest.raises(DomainError):
        cell_integral(-1, 0)


@pytest.mark.parametrize("rs", [(0, 0), (1, 0), (1, 1), (3, 1), (4, 4)])
def test_cell_matches_series_oracle(rs):
    r, s = rs
    with CTX.workdps():
        exact = float(cell_integral(r, s).evaluate(CTX))
    assert abs(exact - cell_series_oracle(r, s)) < 1e-12


# ---------------------------------------------------------------------------
# lcm denominators


def test_lcm_examples():
    assert [lcm_seq(k) for k in range(1, 11)] == [
        1, 2, 6, 12, 60, 60, 420, 840, 2520, 2520,
    ]
    with pytest.raises(DomainError):
        lcm_seq(0)


def test_lcm_matches_math_lcm():
    for k in range(1, 60):
        assert lcm_seq(k) == math.lcm(*range(1, k + 1))


def test_lcm_growth_below_3_pow_k():
    d = 1
    for k in range(1, 201):
        d_next = lcm_seq(k)
        assert d_next % d == 0  # divisibility chain
        assert d_next < 3 ** k
        d = d_next


# ---------------------------------------------------------------------------
# linear forms


def test_linear_form_k1():
    lf = beukers_linear_form(1)
    assert (lf.A, lf.B) == (-12, 10)
    with CTX.workdps():
        assert abs(lf.evaluate(CTX) - (10 * zeta(3, CTX) - 12)) < 1e-30


def test_linear_form_contract_k_upto_12():
    # the A + B zeta(3) cancellation grows like 27^k; 60 digits covers k = 12
    ctx = PrecisionContext(60)
    with ctx.workdps():
        z3 = zeta(3, ctx)
        prev = None
        for k in range(1, 13):
            lf = beukers_linear_form(k)
            value = lf.A + lf.B * z3
            i_k = beukers_exact_form(k).evaluate(ctx)
            # the form is exactly I_k with denominators cleared
            assert abs(value - i_k * lcm_seq(k) ** 3) < 1e-15
            assert i_k > 0
            assert abs(value) <= (mp.mpf(4) / 5) ** k
            if prev is not None:
                assert i_k < prev  # the integral itself shrinks monotonically
            prev = i_k


def test_linear_form_guards():
    with pytest.raises(DomainError):
        beukers_linear_form(0)
    with pytest.raises(DomainError):
        beukers_linear_form(31)


def test_integrality_violation_detected(monkeypatch):
    # a polynomial whose cells leave a denominator not dividing d_1^3 = 1
    monkeypatch.setattr(
        beukers, "legendre_poly", lambda k: IntPolynomial((1, -1, 1))
    )
    with pytest.raises(IntegrityError):
        beukers.beukers_linear_form(1)


# ---------------------------------------------------------------------------
# independent numerical routes


@pytest.mark.parametrize("k", [1, 2])
def test_quadrature_2d_matches_exact(k):
    quad = beukers_quadrature_2d(k, CTX, tol=1e-12)
    with CTX.workdps():
        assert abs(quad - beukers_exact_form(k).evaluate(CTX)) < 1e-8


@pytest.mark.parametrize("k", [1, 2])
def test_quadrature_3d_matches_exact(k):
    quad = beukers_quadrature_3d(k, FLOAT_CTX)
    with CTX.workdps():
        assert abs(quad - float(beukers_exact_form(k).evaluate(CTX))) < 1e-8


def test_shrink_sup_contract():
    best = shrink_sup_check(150, CTX)
    assert abs(SHRINK_SUP_EXACT - (math.sqrt(2) - 1) ** 4) < 1e-14
    assert best <= SHRINK_SUP_EXACT + 1e-9  # never exceeds the analytic max
    assert SHRINK_SUP_EXACT - best < 1e-6
    with pytest.raises(DomainError):
        shrink_sup_check(50, CTX)


def test_step4_identity():
    # int dz/(1 - (1-xy)z) = -log(xy)/(1-xy)
    assert float(step4_identity_check(0.5, 0.5, CTX)) < 1e-25
    assert step4_identity_check(0.5, 0.5, FLOAT_CTX) < 1e-12
    assert float(step4_identity_check(0.9, 0.1, CTX)) < 1e-25
    with pytest.raises(DomainError):
        step4_identity_check(0.0, 0.5, CTX)


def test_step4_rhs_values():
    # the closed side of the identity at reference points
    with CTX.workdps():
        p = mp.mpf("0.25")
        assert abs(-mp.log(p) / (1 - p) - mp.mpf("1.8483924815")) < 1e-9
        p = 1 - mp.mpf(10) ** -12  # x = y -> 1 limit is 1
        assert abs(-mp.log(p) / (1 - p) - 1) < 1e-11
