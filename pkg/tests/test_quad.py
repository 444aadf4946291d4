import math

import pytest
from mpmath import mp

from zetalab.errors import (
    DomainError,
    QuadratureConvergenceError,
    UnsupportedDimensionError,
)
from zetalab.precision import FLOAT_CTX, PrecisionContext
from zetalab.quad import (
    IntegralSpec,
    euler_phi_identity_check,
    integrate,
    integrate_mc,
    integrate_nd,
    monte_carlo_kontsevich,
    tanh_sinh_1d,
)
from zetalab.specfun import zeta

CTX = PrecisionContext(30)


def test_tanh_sinh_constant_and_log():
    with CTX.workdps():
        assert abs(tanh_sinh_1d(lambda x, xc: mp.mpf(1), CTX) - 1) < CTX.epsilon
        # endpoint-singular integrand: int -log(x) dx = 1
        assert abs(tanh_sinh_1d(lambda x, xc: -mp.log(x), CTX) - 1) < CTX.epsilon


def test_tanh_sinh_float_backend():
    val = tanh_sinh_1d(lambda x, xc: -math.log(x), FLOAT_CTX)
    assert abs(val - 1.0) < 1e-13


def test_tanh_sinh_uses_complement():
    # log(1-x) evaluated via xc stays accurate at the right endpoint
    with CTX.workdps():
        val = tanh_sinh_1d(lambda x, xc: -mp.log(xc), CTX)
        assert abs(val - 1) < CTX.epsilon


def test_convergence_error_carries_estimates():
    with pytest.raises(QuadratureConvergenceError) as err:
        tanh_sinh_1d(lambda x, xc: -mp.log(x), CTX, tol=1e-30, max_level=2)
    assert len(err.value.estimates) == 2


def test_spec_validation():
    with pytest.raises(DomainError):
        IntegralSpec(family="nonsense")
    with pytest.raises(DomainError):
        IntegralSpec(family="theorem21", n=0)
    with pytest.raises(DomainError):
        IntegralSpec(family="theorem25i", n=1)
    with pytest.raises(DomainError):
        IntegralSpec(family="theorem25i", n=2, r=2)
    with pytest.raises(DomainError):
        IntegralSpec(family="theorem25ii", n=2, r=1)
    with pytest.raises(DomainError):
        IntegralSpec(family="z_km", n=2)
    with pytest.raises(DomainError):
        IntegralSpec(family="kontsevich", n=1)
    with pytest.raises(DomainError):
        IntegralSpec(family="theorem21", n=1, monomial_exponent_y=2)


def test_hypercube_n1_is_zeta3():
    raw = integrate(IntegralSpec(family="theorem21", n=1), CTX, tol=1e-20)
    with CTX.workdps():
        assert abs(raw - zeta(3, CTX)) < 1e-18


def test_hypercube_n2_is_minus_zeta5():
    raw = integrate(IntegralSpec(family="theorem21", n=2), CTX, tol=1e-16)
    with CTX.workdps():
        assert abs(raw + zeta(5, CTX)) < 1e-14


def test_hypercube_n3_float_is_zeta7():
    raw = integrate(IntegralSpec(family="theorem21", n=3), FLOAT_CTX, tol=5e-8)
    assert abs(raw - float(zeta(7, CTX))) < 1e-6


def test_hypercube_n4_needs_monte_carlo():
    with pytest.raises(UnsupportedDimensionError):
        integrate(IntegralSpec(family="theorem21", n=4), CTX)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_power_scaling_1d(r):
    # int (log x / x) log(1 - x^r) dx = zeta(3) / r^2
    raw = integrate(IntegralSpec(family="corollary23", n=1, r=r), CTX, tol=1e-16)
    with CTX.workdps():
        assert abs(raw * r ** 2 - zeta(3, CTX)) < 1e-13


def test_power_scaling_2d_example():
    raw = integrate(IntegralSpec(family="corollary23", n=2, r=2), CTX, tol=1e-16)
    with CTX.workdps():
        assert abs(raw + zeta(5, CTX) / 16) < 1e-13


def test_fubini_axis_order():
    spec = IntegralSpec(family="theorem21", n=2)
    a = integrate(spec, CTX, tol=1e-15)
    b = integrate(spec, CTX, tol=1e-15, axis_order=(1, 0))
    with CTX.workdps():
        assert abs(a - b) < 1e-13
    with pytest.raises(DomainError):
        integrate(spec, CTX, axis_order=(0, 0))


def test_janous_raw_value():
    raw = integrate(IntegralSpec(family="janous", n=1), CTX, tol=1e-20)
    with CTX.workdps():
        assert abs(raw - 2 * zeta(3, CTX)) < 1e-18


def test_nested_separable_product():
    # int int x * y = 1/4 through the generic nested path
    val = integrate_nd(lambda xs, xcs: xs[0] * xs[1], 2, CTX, tol=1e-20)
    with CTX.workdps():
        assert abs(val - mp.mpf(1) / 4) < 1e-18


# ---------------------------------------------------------------------------
# Monte Carlo


def test_kontsevich_deterministic():
    a = monte_carlo_kontsevich(2, 10 ** 5, 42, FLOAT_CTX)
    b = monte_carlo_kontsevich(2, 10 ** 5, 42, FLOAT_CTX)
    assert a == b  # bit-for-bit
    c = monte_carlo_kontsevich(2, 10 ** 5, 43, FLOAT_CTX)
    assert a != c


@pytest.mark.parametrize("k", [2, 3])
def test_kontsevich_within_three_sigma(k):
    est, stderr = monte_carlo_kontsevich(k, 10 ** 5, 0, FLOAT_CTX)
    assert stderr > 0
    assert abs(est - float(zeta(k, CTX))) <= 3 * stderr


def test_kontsevich_three_sigma_coverage():
    # reference from the dimension-reduced 1-D integral, not the sampler
    ref = tanh_sinh_1d(lambda y, yc: -math.log(yc) / y, FLOAT_CTX)
    hits = 0
    for seed in range(100):
        est, stderr = monte_carlo_kontsevich(2, 10 ** 5, seed, FLOAT_CTX)
        if abs(est - ref) <= 3 * stderr:
            hits += 1
    assert hits >= 99


def test_kontsevich_validation():
    with pytest.raises(DomainError):
        monte_carlo_kontsevich(1, 10 ** 5, 0, FLOAT_CTX)
    with pytest.raises(DomainError):
        monte_carlo_kontsevich(2, 10 ** 3, 0, FLOAT_CTX)


def test_kontsevich_has_no_quadrature_route():
    with pytest.raises(UnsupportedDimensionError):
        integrate(IntegralSpec(family="kontsevich", n=2), CTX)


@pytest.mark.parametrize("n", [4, 5])
def test_integrate_mc_high_dimensions(n):
    est, stderr = integrate_mc(
        IntegralSpec(family="theorem21", n=n), 10 ** 5, 0, FLOAT_CTX
    )
    target = (1 if n % 2 == 1 else -1) * float(zeta(2 * n + 1, CTX))
    assert abs(est - target) <= 5 * stderr


def test_integrate_mc_validation():
    with pytest.raises(UnsupportedDimensionError):
        integrate_mc(IntegralSpec(family="theorem21", n=2), 10 ** 5, 0, FLOAT_CTX)
    with pytest.raises(DomainError):
        integrate_mc(IntegralSpec(family="janous", n=1), 10 ** 5, 0, FLOAT_CTX)


# ---------------------------------------------------------------------------
# Euler phi identity


def test_euler_phi_identity_n1():
    assert float(euler_phi_identity_check(1, CTX)) < 1e-8


def test_euler_phi_identity_n2_float():
    assert euler_phi_identity_check(2, FLOAT_CTX) < 1e-6


def test_euler_phi_truncation_stability():
    r50 = euler_phi_identity_check(1, FLOAT_CTX, phi_terms=50)
    r100 = euler_phi_identity_check(1, FLOAT_CTX, phi_terms=100)
    assert abs(r50 - r100) < 1e-8


def test_euler_phi_dimension_guard():
    with pytest.raises(UnsupportedDimensionError):
        euler_phi_identity_check(3, CTX)
