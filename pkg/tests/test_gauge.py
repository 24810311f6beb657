import cmath
import math

import numpy as np
import pytest

from ncg_circle.gauge import (
    FULL_HOLONOMY,
    PER_STEP,
    analytic_laplacian_spectrum,
    build_connection,
    gauged_dirac,
    laplacian,
    laplacian_spectrum,
    pure_gauge_residual,
    spectral_shift_check,
    twist,
    universal_curvature,
)
from ncg_circle.operators import LatticeParams, build_dirac
from ncg_circle.spectral import (
    circulant_eigenvalues,
    eigen_residual,
    hermitian_eigenpairs,
    hermitian_eigenvalues,
    max_abs_norm,
)

SQRT2 = math.sqrt(2.0)
THETAS = [0.0, 0.1, math.pi / 3, 1.0, math.pi, 2.0, 2 * math.pi]


@pytest.mark.parametrize("conv", [PER_STEP, FULL_HOLONOMY])
def test_connection_zero_at_zero(conv):
    assert max_abs_norm(build_connection(LatticeParams(6), 0.0, conv).matrix) == 0


def test_conventions_coincide_for_single_site():
    assert twist(1, 0.83, PER_STEP) == twist(1, 0.83, FULL_HOLONOMY)
    with pytest.raises(ValueError):
        twist(4, 1.0, "bogus")


def test_connection_entries_per_step():
    p = LatticeParams(4, 1.0, 1.0, "cyclic")
    rho = build_connection(p, math.pi)
    expected = (cmath.exp(1j * math.pi / 4) - 1) / SQRT2
    for i in range(4):
        assert rho.matrix[i, (i + 1) % 4] == pytest.approx(expected, abs=1e-15)
    assert max_abs_norm(rho.matrix - rho.matrix.conj().T) == 0
    assert rho.sigma == pytest.approx(cmath.exp(-1j * math.pi / 4) - 1)


def test_gauged_dirac_superdiagonal_phase():
    p = LatticeParams(5, 0.9, cmath.exp(0.4j), "open")
    a = gauged_dirac(build_dirac(p), build_connection(p, 1.3))
    for i in range(4):
        assert a[i, i + 1] == pytest.approx(cmath.exp(1.3j / 5) * p.hop, abs=1e-15)
    assert max_abs_norm(a - a.conj().T) == 0
    np.testing.assert_array_equal(gauged_dirac(build_dirac(p), build_connection(p, 0.0)), build_dirac(p))
    with pytest.raises(ValueError):
        gauged_dirac(np.zeros((3, 3)), build_connection(p, 1.0))


@pytest.mark.parametrize("theta", [0.3, math.pi / 3, 2.5])
def test_gauged_n4_against_circulant_oracle(theta):
    p = LatticeParams(4, 1.0, 1.0, "cyclic")
    a = gauged_dirac(build_dirac(p), build_connection(p, theta))
    oracle = np.sort(circulant_eigenvalues(a[0]).real)
    closed = np.sort(SQRT2 * np.cos((2 * np.pi * np.arange(4) + theta) / 4))
    np.testing.assert_allclose(hermitian_eigenvalues(a), oracle, atol=1e-12)
    np.testing.assert_allclose(oracle, closed, atol=1e-12)


def test_spectral_shift_check_examples():
    r0 = spectral_shift_check(LatticeParams(8), 0.0)
    np.testing.assert_array_equal(r0.gauged_spectrum, r0.free_spectrum)
    r2 = spectral_shift_check(LatticeParams(8), 2 * math.pi)
    np.testing.assert_allclose(r2.gauged_spectrum, r2.free_spectrum, atol=1e-12)
    r = spectral_shift_check(LatticeParams(8), math.pi / 3)
    assert r.max_deviation <= 1e-10
    assert len(list(r.rows())) == 8
    with pytest.raises(ValueError):
        spectral_shift_check(LatticeParams(8, boundary="open"), 1.0)


def test_full_holonomy_per_bond_is_not_a_theta_shift():
    # with sigma = exp(-i theta) - 1 the ring picks up exp(i N theta), not exp(i theta)
    r = spectral_shift_check(LatticeParams(8), 1.0, FULL_HOLONOMY)
    assert r.max_deviation > 1e-3


@pytest.mark.parametrize("n", [3, 5, 16, 40, 64])
@pytest.mark.parametrize("theta", THETAS)
def test_flatness_spectral_shift(n, theta):
    assert spectral_shift_check(LatticeParams(n), theta).max_deviation <= 1e-10


def test_pure_gauge_examples():
    assert pure_gauge_residual(LatticeParams(4), 0.0) == 0.0
    assert pure_gauge_residual(LatticeParams(4), 2 * math.pi) <= 1e-12


@pytest.mark.parametrize("theta", [math.pi, 0.7, 3.9])
def test_pure_gauge_wrap_defect_closed_form(theta):
    # hand expansion: only entries (N,1) and (1,N) differ, by scale * |exp(i theta/N) - exp(-i theta (N-1)/N)|
    p = LatticeParams(4, 1.0, 1.0, "cyclic")
    expected = p.scale * 2 * abs(math.sin(theta / 2))
    assert pure_gauge_residual(p, theta) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("n", [3, 8, 16])
def test_pure_gauge_domains(n):
    for theta in np.linspace(0, 4 * np.pi, 11):
        assert pure_gauge_residual(LatticeParams(n, boundary="open"), theta) <= 1e-12
    for k in range(-2, 3):
        assert pure_gauge_residual(LatticeParams(n), 2 * math.pi * k) <= 1e-12
    p = LatticeParams(n)
    for theta in [0.5, 1.0, 3.0, 5.0]:
        assert pure_gauge_residual(p, theta) >= p.scale * 2 * abs(math.sin(theta / 2)) - 1e-10


def test_universal_curvature():
    assert universal_curvature(LatticeParams(5, boundary="open"), 0.0) == 0.0
    assert universal_curvature(LatticeParams(6, boundary="open"), 1.7) <= 1e-12
    assert universal_curvature(LatticeParams(3, boundary="open"), 2 * math.pi) <= 1e-12
    for theta in np.linspace(-6, 13, 20):
        assert universal_curvature(LatticeParams(12, boundary="open"), theta) <= 1e-12
    with pytest.raises(ValueError):
        universal_curvature(LatticeParams(6), 1.0)


def test_laplacian_n4_zero_mode():
    p = LatticeParams(4)
    ev = hermitian_eigenvalues(laplacian(p, 0.0))
    assert abs(ev[0]) <= 1e-12
    # eig(D^H D) on the default ring is N^2 sin^2(2 pi k / N)
    np.testing.assert_allclose(ev, np.sort(16 * np.sin(np.pi * np.arange(4) / 2) ** 2), atol=1e-12)


@pytest.mark.parametrize("boundary", ["cyclic", "open"])
@pytest.mark.parametrize("theta", [0.0, 1.1, 2 * math.pi, 5.0])
def test_laplacian_psd_and_eigenpairs(boundary, theta):
    p = LatticeParams(12, boundary=boundary)
    lap = laplacian(p, theta)
    vals, vecs = hermitian_eigenpairs(lap)
    assert vals.min() >= -1e-12
    assert eigen_residual(lap, vals, vecs) <= 1e-9
    assert laplacian_spectrum(p, theta).min() >= 0.0


@pytest.mark.parametrize("theta", [0.0, 0.4, math.pi / 3, 2.8])
def test_laplacian_spectrum_closed_form(theta):
    p = LatticeParams(16, 0.8, cmath.exp(0.3j))
    np.testing.assert_allclose(laplacian_spectrum(p, theta), analytic_laplacian_spectrum(p, theta), atol=1e-9)
    np.testing.assert_allclose(laplacian_spectrum(p, theta), hermitian_eigenvalues(laplacian(p, theta)), atol=1e-9)


def test_laplacian_lowest_mode():
    assert laplacian_spectrum(LatticeParams(8), 0.0)[0] <= 1e-24
    low = laplacian_spectrum(LatticeParams(64), math.pi / 3)[0]
    assert low == pytest.approx((math.pi / 3) ** 2, rel=1e-3)
    # frozen from the closed form (64 sin(theta/64))^2 evaluated at 40 digits
    assert low == pytest.approx(1.0965248484031602, rel=1e-12)


@pytest.mark.parametrize("n", [4, 8, 16])
@pytest.mark.parametrize("theta", [0.2, 1.0, 3.0])
def test_two_pi_periodicity(n, theta):
    p = LatticeParams(n)
    np.testing.assert_allclose(laplacian_spectrum(p, theta), laplacian_spectrum(p, theta + 2 * math.pi), atol=1e-9)
    a = hermitian_eigenvalues(gauged_dirac(build_dirac(p), build_connection(p, theta)))
    b = hermitian_eigenvalues(gauged_dirac(build_dirac(p), build_connection(p, theta + 2 * math.pi)))
    np.testing.assert_allclose(a, b, atol=1e-9)


def test_gauge_covariance(rng):
    p = LatticeParams(10)
    a = gauged_dirac(build_dirac(p), build_connection(p, 0.9))
    u = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 10)))
    np.testing.assert_allclose(hermitian_eigenvalues(u.conj().T @ a @ u), hermitian_eigenvalues(a), atol=1e-10)
