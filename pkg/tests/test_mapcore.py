from fractions import Fraction
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from harmshear.mapcore import (
    SHS_CONSTANTS,
    CriticalPoint,
    FamilyConstants,
    HarmonicMap,
    affine_combine,
    alexander,
    dilatation,
    eval_map,
    identity_map,
    jacobian,
    koenigs_transform,
    rescale,
    slice,
    slice_map,
)
from harmshear.powerseries import Series
from harmshear.shearing import harmonic_koebe

disk = st.builds(lambda r, t: r * complex(math.cos(t), math.sin(t)), st.floats(0, 0.9), st.floats(0, 2 * math.pi))


def k_parts(z):
    """Harmonic Koebe parts written out directly."""
    h = (z - z ** 2 / 2 + z ** 3 / 6) / (1 - z) ** 3
    g = (z ** 2 / 2 + z ** 3 / 6) / (1 - z) ** 3
    return h, g


def test_koebe_values():
    K = harmonic_koebe(30)
    assert K(-0.5) == pytest.approx(-13 / 81, abs=1e-14)
    z = 0.3 + 0.4j
    h, g = k_parts(z)
    assert abs(eval_map(K, z) - (h + np.conj(g))) < 1e-13
    assert abs(K.series_only()(0.2) - K(0.2)) < 1e-12


def test_accessors_and_normalization():
    K = harmonic_koebe(10)
    assert K.a(2) == pytest.approx(2.5)
    assert K.b(2) == pytest.approx(0.5)
    assert K.b1 == 0
    assert K.is_normalized()
    assert K.order == 10


def test_jacobian_and_dilatation():
    K = harmonic_koebe(30)
    assert dilatation(K, 0.5) == pytest.approx(0.5)
    z = 0.2 - 0.3j
    assert abs(dilatation(K, z) - z) < 1e-13
    hp = (1 + z) / (1 - z) ** 3  # h' = phi'/(1-omega) with phi' = (1+z)/(1-z)^3
    hp = hp / (1 - z)
    assert jacobian(K, z) == pytest.approx(abs(hp) ** 2 * (1 - abs(z) ** 2), rel=1e-12)
    assert isinstance(jacobian(K, z), float)


def test_dilatation_at_critical_point():
    f = HarmonicMap(Series.from_coeffs([0, 1, 1], 6), Series.from_coeffs([0, 0, 1], 6))
    with pytest.raises(CriticalPoint):
        dilatation(f, -0.5)


@given(disk, st.floats(0, 2 * math.pi))
def test_slice_is_analytic_combination(z, t):
    K = harmonic_koebe(40)
    lam = complex(math.cos(t), math.sin(t))
    h, g = k_parts(z)
    assert abs(slice_map(K, lam)(z) - (h + lam * g)) < 1e-9 * max(1, abs(h))
    s = slice(K, lam)
    assert np.allclose(s.coeffs, K.h.coeffs + lam * K.g.coeffs)


@given(disk, st.builds(complex, st.floats(-0.6, 0.6), st.floats(-0.6, 0.6)))
def test_affine_combine_pointwise(z, b1):
    K = harmonic_koebe(30)
    f = affine_combine(K, b1)
    assert abs(f(z) - (K(z) + b1 * np.conj(K(z)))) < 1e-9 * max(1, abs(K(z)))
    assert f.b1 == pytest.approx(b1.conjugate())
    assert jacobian(f, 0.0) == pytest.approx(1 - abs(b1) ** 2, abs=1e-14)


@given(st.builds(complex, st.floats(-0.6, 0.6), st.floats(-0.6, 0.6)), st.floats(0, 2 * math.pi))
def test_affine_is_linear_on_slices(b1, t):
    K = harmonic_koebe(25)
    lam = complex(math.cos(t), math.sin(t))
    got = slice(affine_combine(K, b1), lam).coeffs
    want = (1 + lam * b1.conjugate()) * K.h.coeffs + (b1 + lam) * K.g.coeffs
    assert np.allclose(got, want, rtol=1e-12, atol=1e-12)


def test_affine_combine_examples():
    K = harmonic_koebe(10)
    assert affine_combine(K, 0.5).a(2) == pytest.approx(11 / 4)
    assert np.allclose(affine_combine(K, 0).h.coeffs, K.h.coeffs)


def test_affine_combine_rejects_outside_disk():
    with pytest.raises(ValueError):
        affine_combine(harmonic_koebe(10), 1.0)


def test_rescale_and_identity():
    I = identity_map(8)
    assert I(0.3 + 0.1j) == pytest.approx(0.3 + 0.1j)
    K = harmonic_koebe(20)
    f = rescale(K, 0.5)
    z = 0.4 + 0.3j
    assert f(z) == pytest.approx(K(z) / 0.5, rel=1e-12)
    g = rescale(K, 1 + 1j)
    assert g(z) == pytest.approx(K(z) / (1 + 1j), rel=1e-12)


def test_koenigs_transform_at_zero_is_identity_map():
    K = harmonic_koebe(20)
    z = np.array([0.1, 0.2j])
    assert np.allclose(koenigs_transform(K, 0.0, z), K(z))


def test_koenigs_transform_against_closed_forms():
    K = harmonic_koebe(20)
    zeta, z = 0.3, 0.2
    w = (z + zeta) / (1 + zeta * z)
    hw, gw = k_parts(w)
    hz, gz = k_parts(zeta)
    hp = (1 + zeta) / (1 - zeta) ** 4  # h_K' = (1+z)/(1-z)^4
    want = ((hw + np.conj(gw)) - (hz + np.conj(gz))) / ((1 - zeta ** 2) * hp)
    assert abs(koenigs_transform(K, zeta, z) - want) < 1e-9


def test_koenigs_transform_normalized():
    K = harmonic_koebe(20)
    zeta = 0.3j
    eps = 1e-6
    # normalized: F(0) = 0 and d/dz F at 0 is 1 (analytic part derivative)
    assert abs(koenigs_transform(K, zeta, 0.0)) < 1e-12
    dF = (koenigs_transform(K, zeta, eps) - koenigs_transform(K, zeta, -eps)) / (2 * eps)
    dFi = (koenigs_transform(K, zeta, 1j * eps) - koenigs_transform(K, zeta, -1j * eps)) / (2j * eps)
    # for h + conj(g): (d/dx + -i d/dy)/2 gives h'
    assert abs((dF + dFi) / 2 - 1) < 1e-6


def test_alexander_coefficients():
    K = harmonic_koebe(12)
    A = alexander(K)
    n = np.arange(13)
    assert np.allclose(A.h.coeffs, n * K.h.coeffs)
    assert np.allclose(A.g.coeffs, -n * K.g.coeffs)
    z = 0.4 + 0.2j
    assert abs(A.dh(z) - z * K.dh(z, 1)) < 1e-12
    assert np.allclose(A.h.coeffs[1:], [n * (n + 1) * (2 * n + 1) / 6 for n in range(1, 13)])
    I = alexander(identity_map(5))
    assert np.allclose(I.h.coeffs, identity_map(5).h.coeffs) and not np.any(I.g.coeffs)


def test_family_constants():
    c = SHS_CONSTANTS
    assert abs(c.rho - (3 - 2 * math.sqrt(2))) < 1e-12
    assert c.growth_exponent == 3
    assert c.jacobian_exponents == (Fraction(3), Fraction(7))
    assert c.derivative_exponents == (Fraction(1), Fraction(4))
    assert c.curvature_exponent == 4
    assert c.curvature_coefficient == 6
    other = FamilyConstants(Fraction(2), Fraction(2), Fraction(0))
    s = 2
    assert abs(other.rho - (s - math.sqrt(s * s - 1))) < 1e-15
