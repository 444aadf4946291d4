import pytest
from mpmath import mp

from zetalab.antider import integrand, m_n, mixed_partial_residual
from zetalab.errors import (
    BoundaryError,
    DomainError,
    UnsupportedDimensionError,
)
from zetalab.precision import PrecisionContext

CTX = PrecisionContext(30)
CTX40 = PrecisionContext(40)


def test_m1_example():
    # Li_3(1/2) - log(1/2) Li_2(1/2)
    with CTX.workdps():
        assert abs(m_n([0.5], CTX) - mp.mpf("0.940791572935")) < 1e-12


def test_integrand_examples():
    with CTX.workdps():
        assert abs(integrand([0.5], CTX) - mp.mpf("0.960906027836")) < 1e-12
        assert abs(integrand([0.5, 0.5], CTX) - mp.mpf("-0.552870875039")) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 3])
def test_corner_limit_is_signed_odd_zeta(n):
    # M_n(1-d, ..., 1-d) -> (-1)^(n+1) zeta(2n+1), with shrinking residual
    with CTX.workdps():
        target = (1 if n % 2 == 1 else -1) * mp.zeta(2 * n + 1)
        residuals = [
            abs(m_n([1 - d] * n, CTX) - target) for d in (1e-2, 1e-3, 1e-4)
        ]
    assert residuals[0] > residuals[1] > residuals[2]
    assert residuals[2] < 1e-7


@pytest.mark.parametrize("n", [1, 2, 3])
def test_vanishing_limit_at_origin_face(n):
    # any coordinate -> 0 sends M_n -> 0 (log divergence loses to Li -> 0)
    with CTX.workdps():
        vals = [
            abs(m_n([d] + [0.5] * (n - 1), CTX)) for d in (1e-3, 1e-6, 1e-9)
        ]
    assert vals[0] > vals[1] > vals[2]
    assert vals[2] < 1e-7


def test_permutation_symmetry():
    with CTX.workdps():
        assert abs(m_n([0.3, 0.8], CTX) - m_n([0.8, 0.3], CTX)) < 1e-30
        base = m_n([0.2, 0.5, 0.9], CTX)
        for perm in ([0.9, 0.2, 0.5], [0.5, 0.9, 0.2]):
            assert abs(m_n(perm, CTX) - base) < 1e-30


def test_boundary_rejected():
    for bad in ([0.0], [1.0], [0.5, 1.0], [-0.1]):
        with pytest.raises(BoundaryError):
            m_n(bad, CTX)
        with pytest.raises(BoundaryError):
            integrand(bad, CTX)


@pytest.mark.parametrize("n", [1, 2])
def test_mixed_partial_matches_integrand(n):
    resid = mixed_partial_residual([0.3, 0.7][:n], 1e-4, CTX40)
    with CTX40.workdps():
        scale = abs(integrand([0.3, 0.7][:n], CTX40))
        assert resid / scale < 1e-6


def test_mixed_partial_3d():
    resid = mixed_partial_residual([0.4, 0.5, 0.6], 1e-4, CTX40)
    with CTX40.workdps():
        scale = abs(integrand([0.4, 0.5, 0.6], CTX40))
        assert resid / scale < 1e-6


def test_mixed_partial_margin_guard():
    with pytest.raises(DomainError):
        mixed_partial_residual([1e-5], 1e-4, CTX40)
    with pytest.raises(DomainError):
        mixed_partial_residual([1 - 1e-5], 1e-4, CTX40)


def test_mixed_partial_digit_guard():
    # step 1e-4 needs 4*4+10 = 26 digits; a 20-digit context is refused
    with pytest.raises(DomainError):
        mixed_partial_residual([0.5], 1e-4, PrecisionContext(20))


def test_mixed_partial_dimension_guard():
    with pytest.raises(UnsupportedDimensionError):
        mixed_partial_residual([0.5] * 4, 1e-4, PrecisionContext(100))


def test_empty_point_rejected():
    with pytest.raises(DomainError):
        m_n([], CTX)
