import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from harmshear.analytic import Rational
from harmshear.mapcore import jacobian
from harmshear.powerseries import Series
from harmshear.shearing import (
    KOEBE,
    BadParameter,
    CatalogId,
    DilatationNotBounded,
    F_a_lambda,
    ShearSpec,
    catalog,
    classical_shear,
    f1,
    f2,
    f4,
    f_a_lambda,
    half_plane_f3,
    harmonic_koebe,
    koebe_slice,
    koebe_slice_coeff,
    koebe_spec,
    polar_grid,
    random_rational_spec,
    sampled_sup_omega,
    shear,
)

N = 30
n = np.arange(2, N + 1)


def test_koebe_by_shearing():
    f = shear(koebe_spec(Rational([0, 1]), N), N)
    assert np.allclose(f.h.coeffs[2:], (n + 1) * (2 * n + 1) / 6, rtol=1e-12)
    assert np.allclose(f.g.coeffs[2:], (n - 1) * (2 * n - 1) / 6, rtol=1e-12)
    assert np.allclose(harmonic_koebe(N).h.coeffs, f.h.coeffs, rtol=1e-12)


def test_half_plane_and_f4():
    f3 = shear(koebe_spec(Rational([0, -1]), N), N)
    assert np.allclose(f3.h.coeffs[2:], (n + 1) / 2) and np.allclose(f3.g.coeffs[2:], -(n - 1) / 2)
    g4 = shear(koebe_spec(Rational([0, 0, 1]), N), N)
    assert np.allclose(g4.h.coeffs[2:], (n + 1) * (n + 2) / 6)
    assert np.allclose(g4.g.coeffs[2:], (n - 1) * (n - 2) / 6)
    assert np.allclose(np.abs(g4.h.coeffs[2:]) - np.abs(g4.g.coeffs[2:]), n)
    assert np.allclose(f4(N).h.coeffs, g4.h.coeffs)
    assert np.allclose(half_plane_f3(N).g.coeffs, f3.g.coeffs)


def test_closed_forms_agree_with_series():
    z = polar_grid(4, 16, 0.6)
    for f in (harmonic_koebe(200), half_plane_f3(200), f4(200)):
        assert np.allclose(f(z), f.series_only()(z), atol=1e-10)


def test_sheared_closed_form_near_boundary():
    f = shear(koebe_spec(Rational([0, 1]), 20), 20)
    K = harmonic_koebe(20)
    for x in (0.9, 0.99, 0.999):
        assert abs(f(x) - K(x)) <= 1e-9 * abs(K(x))


@given(st.integers(0, 10_000))
def test_shear_identities_random_specs(seed):
    rng = np.random.default_rng(seed)
    spec = random_rational_spec(rng, order=20)
    f = shear(spec, 20)
    # h + eps g = phi and g' = omega h'
    assert (f.h + f.g * spec.epsilon).allclose(spec.phi.truncate(20), atol=1e-10)
    assert (f.g.derivative()).allclose(spec.omega.truncate(19) * f.h.derivative(), atol=1e-10)
    z = 0.5 * np.exp(1j * np.linspace(0, 6, 7))
    assert np.allclose(f.dg(z, 1), spec.omega_fn(z) * f.dh(z, 1), atol=1e-10)


def test_random_omega_bounded():
    rng = np.random.default_rng(1)
    for _ in range(20):
        spec = random_rational_spec(rng)
        assert sampled_sup_omega(spec)[0] < 0.99 + 1e-12


def test_shear_rejects_large_dilatation():
    spec = ShearSpec.from_rational(KOEBE, Rational([0, 2]))
    with pytest.raises(DilatationNotBounded):
        shear(spec)


def test_epsilon_must_be_unimodular():
    with pytest.raises(BadParameter):
        ShearSpec(Series.identity(4), Series.zeros(4), 0.5)


def test_classical_shear_preset():
    phi = KOEBE.to_series(11)
    f = classical_shear(phi, Series.identity(11), 10)
    assert f.a(2) == pytest.approx(2.5) and f.b(2) == pytest.approx(0.5)


def test_f1_f2_coefficients():
    f = f1(3, 10)
    assert f.h.coeffs[1] == 1 and np.count_nonzero(f.h.coeffs) == 1
    assert f.b(3) == pytest.approx(1 / 3)
    g = f2(0.2, 3, 10)
    assert np.allclose(g.h.coeffs[1:], 1)
    assert np.allclose(g.g.coeffs, [0, 0, 0] + [0.2] * 8)
    with pytest.raises(BadParameter):
        f1(1)
    with pytest.raises(BadParameter):
        f2(0.5, 3)
    with pytest.raises(BadParameter):
        f2(1.0, 1)


def test_f_a_lambda_and_F_a_lambda():
    a, lam = 1 + math.sqrt(2), 1j
    f = f_a_lambda(a, lam, 20)
    k = np.arange(1, 21)
    assert np.allclose(f.h.coeffs[1:], 1 / (k * a ** (k - 1)))
    assert np.allclose(f.g.coeffs[2:], np.conj(lam) / (k[1:] * a ** (k[1:] - 1)))
    F = F_a_lambda(a, lam, 20)
    assert np.allclose(F.h.coeffs[1:], a ** (1 - k))
    z = 0.3 - 0.6j
    assert abs(F(z) - (a * z / (a - z) + np.conj(-np.conj(lam) * z ** 2 / (a - z)))) < 1e-13
    with pytest.raises(BadParameter):
        F_a_lambda(2.0, 1)
    with pytest.raises(BadParameter):
        f_a_lambda(3.0, 2)


@given(st.floats(0, 2 * math.pi))
def test_koebe_slice_closed_form(theta):
    s = koebe_slice(theta, 30)
    want = [koebe_slice_coeff(theta, k) for k in range(2, 31)]
    assert np.allclose(s.h.coeffs[2:], want, rtol=1e-12)
    assert not np.any(s.g.coeffs)


def test_catalog_lookup():
    assert catalog("K", 10).a(2) == pytest.approx(2.5)
    assert catalog(CatalogId("f1", {"n": 3}), 10).b(3) == pytest.approx(1 / 3)
    assert catalog("f_a_lambda", 10, a=5, **{"lambda": 1}).a(2) == pytest.approx(0.1)
    assert catalog("identity", 5).a(1) == 1
    with pytest.raises(BadParameter):
        catalog("nope")
    with pytest.raises(BadParameter):
        catalog("f1", 10)


def test_sense_preserving_samples():
    z = polar_grid(8, 32, 0.95)
    for f in (harmonic_koebe(), half_plane_f3(), f4()):
        assert np.all(jacobian(f, z) > 0)
