import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from harmshear.analytic import PointFn, Rational, integrate_from_origin
from harmshear.powerseries import Series

KOEBE = Rational([0, 1], [1, -2, 1])


def test_rational_values_and_derivatives():
    z = np.array([0.3, -0.7 + 0.2j, 0.5j])
    assert np.allclose(KOEBE(z), z / (1 - z) ** 2)
    assert np.allclose(KOEBE(z, 1), (1 + z) / (1 - z) ** 3)
    assert np.allclose(KOEBE(z, 2), (2 * z + 4) / (1 - z) ** 4)


def test_rational_accurate_next_to_pole():
    # the expanded denominator cancels catastrophically here; partial fractions do not
    for x in (0.99, 0.999, 0.9999):
        exact = x / (1 - x) ** 2
        assert abs(KOEBE(x) - exact) <= 1e-10 * exact


def test_poles_are_clustered():
    r = Rational([1], [1, -3, 3, -1])
    (p, m), = r.poles
    assert m == 3 and abs(p - 1) < 1e-6


def test_rational_arithmetic_matches_pointwise():
    a = Rational([1, 2], [1, -0.5])
    b = Rational([0, 1], [2, 1j])
    z = np.array([0.1, 0.4 - 0.3j])
    assert np.allclose((a + b)(z), a(z) + b(z))
    assert np.allclose((a * b)(z), a(z) * b(z))
    assert np.allclose((a / b)(z), a(z) / b(z))
    assert np.allclose((-a)(z), -a(z))
    assert np.allclose((a * 3)(z), 3 * a(z))


def test_rational_derivative_object():
    r = Rational([0, 1, 1], [1, -1, 0.25])
    z = 0.2 + 0.1j
    assert abs(r.derivative()(z) - r(z, 1)) < 1e-12


def test_to_series_matches_series_division():
    r = Rational([0, 1], [1, -2, 1])
    assert np.allclose(r.to_series(15).coeffs, np.arange(16))


@given(st.floats(-0.95, 0.95), st.floats(-0.95, 0.95))
def test_integral_against_closed_form(x, y):
    z = complex(x, y)
    if abs(z) >= 0.999:
        return
    # int_0^z 1/(1-s)^2 ds = z/(1-z)
    r = Rational([1], [1, -2, 1])
    assert abs(integrate_from_origin(r, z) - z / (1 - z)) <= 1e-11 * max(1, abs(z / (1 - z)))


def test_integral_near_boundary():
    r = Rational([1], [1, -3, 3, -1])  # 1/(1-s)^3, antiderivative (1/(1-z)^2 - 1)/2
    z = 0.999
    exact = (1 / (1 - z) ** 2 - 1) / 2
    assert abs(integrate_from_origin(r, z) - exact) <= 1e-9 * exact


def test_pointfn_integral_and_derivatives():
    r = Rational([1], [1, -1])
    f = PointFn.integral_of(r)
    z = np.array([0.3, -0.5j])
    assert np.allclose(f(z), -np.log(1 - z))
    assert np.allclose(f(z, 1), 1 / (1 - z))
    assert np.allclose(f(z, 2), 1 / (1 - z) ** 2)


def test_log_type_matches_series():
    a = 1 + math.sqrt(2)
    f = PointFn.log_type(a)
    n = np.arange(1, 80)
    z = 0.6 - 0.3j
    series = np.sum(z ** n / (n * a ** (n - 1)))
    assert abs(f(z) - series) < 1e-12
    assert abs(f(z, 1) - a / (a - z)) < 1e-14
    assert abs(f(z, 3) - 2 * a / (a - z) ** 3) < 1e-14


def test_from_series_and_combinators():
    s = Series.from_coeffs([0, 1, 2, 3], 3)
    f = PointFn.from_series(s)
    g = PointFn.polynomial([0, 1])
    z = 0.4
    assert f(z, 1) == pytest.approx(1 + 4 * z + 9 * z ** 2)
    assert (f + g)(z) == pytest.approx(f(z) + z)
    assert (f - g)(z, 1) == pytest.approx(f(z, 1) - 1)
    assert f.scale(2j)(z) == pytest.approx(2j * f(z))
    # z f'(z) and its derivative
    zd = f.zdiff()
    assert zd(z) == pytest.approx(z * f(z, 1))
    assert zd(z, 1) == pytest.approx(f(z, 1) + z * f(z, 2))


def test_max_k_enforced():
    f = PointFn(lambda z, k: z, max_k=0, name="id")
    with pytest.raises(ValueError):
        f(0.1, 1)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        Rational([1], [0])
