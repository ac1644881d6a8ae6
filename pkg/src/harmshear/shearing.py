"""Shear construction of harmonic maps and the catalogue of named examples.

Given a normalised conformal map ``phi``, a dilatation ``omega`` and a unimodular
``eps``, the harmonic map ``f = h + conj(g)`` with ``h + eps g = phi`` and
``g' = omega h'`` is

    h' = phi' / (1 + eps omega),      g' = omega phi' / (1 + eps omega).

``eps = -1`` is the classical shear along the real axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .analytic import PointFn, Rational
from .mapcore import HarmonicMap
from .powerseries import DEFAULT_ORDER, Series

#: margin below 1 for the sampled supremum of |omega|
EPS_OMEGA = 1e-6

#: polar grid used to bound |omega|: radii, angles, outermost radius
OMEGA_GRID = (64, 256, 0.999)

SQRT2 = math.sqrt(2.0)


class ShearError(ValueError):
    pass


class DilatationNotBounded(ShearError):
    pass


class BadParameter(ShearError):
    pass


def polar_grid(n_radii: int, n_angles: int, r_max: float) -> np.ndarray:
    """``r_max * i / n_radii * exp(2 pi j / n_angles)`` for i = 1..n_radii, shape (n_radii, n_angles)."""
    r = r_max * np.arange(1, n_radii + 1) / n_radii
    t = 2 * np.pi * np.arange(n_angles) / n_angles
    return r[:, None] * np.exp(1j * t)[None, :]


@dataclass(frozen=True, eq=False)
class ShearSpec:
    """Input data of the shear construction.

    ``phi_fn``/``omega_fn`` are optional exact rational forms of the two
    series; when given, the sheared map gets closed-form evaluators too.
    """

    phi: Series
    omega: Series
    epsilon: complex = -1.0
    phi_fn: Rational | None = field(default=None, repr=False)
    omega_fn: Rational | None = field(default=None, repr=False)

    def __post_init__(self):
        eps = complex(self.epsilon)
        if abs(abs(eps) - 1) > 1e-12:
            raise BadParameter(f"|epsilon| must be 1, got {abs(eps):.15g}")
        object.__setattr__(self, "epsilon", eps)

    @classmethod
    def from_rational(cls, phi: Rational, omega: Rational, theta: float = math.pi, order: int = DEFAULT_ORDER):
        """Spec with ``epsilon = exp(i theta)`` from exact rational data."""
        return cls(phi.to_series(order + 1), omega.to_series(order + 1), cmath.exp(1j * theta), phi, omega)

    @property
    def theta(self) -> float:
        return cmath.phase(self.epsilon)

    def omega_at(self, z):
        return self.omega_fn(z) if self.omega_fn is not None else self.omega(z)


def sampled_sup_omega(spec: ShearSpec, grid=OMEGA_GRID) -> tuple[float, complex]:
    """Largest ``|omega|`` on a polar grid, with the point where it occurs."""
    z = polar_grid(*grid)
    vals = np.abs(spec.omega_at(z))
    i = np.unravel_index(np.argmax(vals), vals.shape)
    return float(vals[i]), complex(z[i])


def shear(spec: ShearSpec, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Harmonic map ``h + conj(g)`` with ``h + eps g = phi`` and dilatation ``omega``."""
    sup, where = sampled_sup_omega(spec)
    if sup >= 1 - EPS_OMEGA:
        raise DilatationNotBounded(f"sampled |omega| reaches {sup:.9g} at z = {where:.6g}")
    eps = spec.epsilon
    dphi = spec.phi.derivative()
    omega = spec.omega.truncate(min(spec.omega.order, dphi.order))
    hp = dphi * (1 + eps * omega).recip()
    gp = omega * hp
    h = hp.antiderivative()
    g = gp.antiderivative()
    if h.order > order:
        h, g = h.truncate(order), g.truncate(order)

    h_fn = g_fn = None
    if spec.phi_fn is not None and spec.omega_fn is not None:
        hp_r = spec.phi_fn.derivative() / (Rational.poly([1.0]) + spec.omega_fn * eps)
        h_fn = PointFn.integral_of(hp_r, name="h")
        g_fn = PointFn.integral_of(spec.omega_fn * hp_r, name="g")
    return HarmonicMap(h, g, h_fn, g_fn, label="shear")


def classical_shear(phi: Series, omega: Series, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """The ``eps = -1`` preset: ``h - g = phi``."""
    return shear(ShearSpec(phi, omega, -1.0), order)


# -- catalogue ---------------------------------------------------------------

KOEBE = Rational([0, 1], [1, -2, 1])


def _cube_den():
    return np.array([1, -3, 3, -1], dtype=float)  # (1 - z)^3


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple
    domain: str
    summary: str


CATALOG = {
    "harmonic_koebe": CatalogEntry("harmonic_koebe", (), "-", "harmonic Koebe function K, shear of z/(1-z)^2 with omega = z"),
    "half_plane_f3": CatalogEntry("half_plane_f3", (), "-", "half-plane map onto Re w > -1/2, omega = -z"),
    "f4": CatalogEntry("f4", (), "-", "shear of z/(1-z)^2 with omega = z^2"),
    "f1": CatalogEntry("f1", ("n",), "n >= 2 integer", "z + conj(z^n / n)"),
    "f2": CatalogEntry("f2", ("alpha", "n"), "0 < |alpha| <= 1/(2n-1), n >= 1 integer", "z/(1-z) + conj(alpha z^n/(1-z))"),
    "f_a_lambda": CatalogEntry("f_a_lambda", ("a", "lam"), "a real, |a| >= 1, |lam| = 1", "a log(a/(a-z)) + lam conj(a log(a/(a-z)) - z)"),
    "F_a_lambda": CatalogEntry("F_a_lambda", ("a", "lam"), "a real, |a| >= 1+sqrt(2), |lam| = 1", "az/(a-z) - lam conj(z^2/(a-z))"),
    "koebe_slice": CatalogEntry("koebe_slice", ("theta",), "theta real", "analytic h_K + exp(i theta) g_K"),
}

ALIASES = {"K": "harmonic_koebe", "koebe": "harmonic_koebe", "f3": "half_plane_f3", "identity": "identity"}


@dataclass(frozen=True)
class CatalogId:
    name: str
    params: dict = field(default_factory=dict)

    def __str__(self):
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({inner})"


def _rational_map(h: Rational, g: Rational, order: int, label: str) -> HarmonicMap:
    return HarmonicMap(h.to_series(order), g.to_series(order), PointFn.rational(h, "h"), PointFn.rational(g, "g"), label=label)


def _unimodular(lam, what="lam"):
    lam = complex(lam)
    if abs(abs(lam) - 1) > 1e-12:
        raise BadParameter(f"|{what}| must be 1, got {abs(lam):.12g}")
    return lam


def _real(a, what="a"):
    a = complex(a)
    if abs(a.imag) > 1e-15:
        raise BadParameter(f"{what} must be real, got {a}")
    return a.real


def harmonic_koebe(order: int = DEFAULT_ORDER) -> HarmonicMap:
    h = Rational([0, 1, -0.5, 1 / 6], _cube_den())
    g = Rational([0, 0, 0.5, 1 / 6], _cube_den())
    return _rational_map(h, g, order, "harmonic_koebe")


def half_plane_f3(order: int = DEFAULT_ORDER) -> HarmonicMap:
    h = Rational([0, 1, -0.5], [1, -2, 1])
    g = Rational([0, 0, -0.5], [1, -2, 1])
    return _rational_map(h, g, order, "half_plane_f3")


def f4(order: int = DEFAULT_ORDER) -> HarmonicMap:
    # (1 - (1-z)^3) / (3 (1-z)^3) and z^3 / (3 (1-z)^3)
    h = Rational(np.array([0, 3, -3, 1]) / 3, _cube_den())
    g = Rational([0, 0, 0, 1 / 3], _cube_den())
    return _rational_map(h, g, order, "f4")


def f1(n: int, order: int = DEFAULT_ORDER) -> HarmonicMap:
    if int(n) != n or n < 2:
        raise BadParameter(f"f1 needs an integer n >= 2, got {n}")
    n = int(n)
    gc = np.zeros(n + 1)
    gc[n] = 1 / n
    return _rational_map(Rational.poly([0, 1]), Rational.poly(gc), order, f"f1(n={n})")


def f2(alpha: complex, n: int, order: int = DEFAULT_ORDER) -> HarmonicMap:
    if int(n) != n or n < 1:
        raise BadParameter(f"f2 needs an integer n >= 1, got {n}")
    n = int(n)
    alpha = complex(alpha)
    if alpha == 0 or abs(alpha) > 1 / (2 * n - 1) + 1e-15 or (n == 1 and abs(alpha) >= 1):
        raise BadParameter(f"f2 needs 0 < |alpha| <= 1/(2n-1) = {1 / (2 * n - 1):.6g}, got |alpha| = {abs(alpha):.6g}")
    gc = np.zeros(n + 1, dtype=complex)
    gc[n] = alpha
    return _rational_map(Rational([0, 1], [1, -1]), Rational(gc, [1, -1]), order, f"f2(alpha={alpha:g},n={n})")


def f_a_lambda(a: float, lam: complex, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """``a log(a/(a-z)) + lam * conj(a log(a/(a-z)) - z)``; stored with ``g = conj(lam) (.)``."""
    a = _real(a)
    lam = _unimodular(lam)
    if abs(a) < 1:
        raise BadParameter(f"f_a_lambda needs |a| >= 1, got {a}")
    n = np.arange(order + 1)
    c = np.zeros(order + 1)
    c[1:] = 1.0 / (n[1:] * a ** (n[1:] - 1.0))
    h = Series(c)
    g0 = Series(np.where(n >= 2, c, 0.0))
    h_fn = PointFn.log_type(a)
    g_fn = (h_fn - PointFn.polynomial([0, 1])).scale(lam.conjugate())
    return HarmonicMap(h, g0 * lam.conjugate(), h_fn, g_fn, label=f"f_a_lambda(a={a:g},lam={lam:g})")


def F_a_lambda(a: float, lam: complex, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """``az/(a-z) - lam * conj(z^2/(a-z))``."""
    a = _real(a)
    lam = _unimodular(lam)
    if abs(a) < 1 + SQRT2 - 1e-12:
        raise BadParameter(f"F_a_lambda needs |a| >= 1+sqrt(2), got {a}")
    big_h = Rational([0, a], [a, -1])
    big_g = Rational([0, 0, -1], [a, -1]) * lam.conjugate()
    return _rational_map(big_h, big_g, order, f"F_a_lambda(a={a:g},lam={lam:g})")


def koebe_slice(theta: float, order: int = DEFAULT_ORDER) -> HarmonicMap:
    from .mapcore import slice_map

    f = slice_map(harmonic_koebe(order), cmath.exp(1j * theta))
    return HarmonicMap(f.h, f.g, f.h_fn, f.g_fn, label=f"koebe_slice(theta={theta:g})")


_BUILDERS = {
    "harmonic_koebe": harmonic_koebe,
    "half_plane_f3": half_plane_f3,
    "f4": f4,
    "f1": f1,
    "f2": f2,
    "f_a_lambda": f_a_lambda,
    "F_a_lambda": F_a_lambda,
    "koebe_slice": koebe_slice,
}


def catalog(cid: CatalogId | str, order: int = DEFAULT_ORDER, **params) -> HarmonicMap:
    """Build a named map as truncated series (plus closed-form evaluators)."""
    if isinstance(cid, str):
        cid = CatalogId(cid, params)
    name = ALIASES.get(cid.name, cid.name)
    if name == "identity":
        from .mapcore import identity_map

        return identity_map(order)
    if name not in _BUILDERS:
        raise BadParameter(f"unknown catalogue entry {cid.name!r}; known: {', '.join(sorted(CATALOG))}")
    wanted = CATALOG[name].params
    got = dict(cid.params)
    if "lambda" in got:
        got["lam"] = got.pop("lambda")
    missing = [p for p in wanted if p not in got]
    extra = [p for p in got if p not in wanted]
    if missing or extra:
        raise BadParameter(f"{name} takes parameters ({', '.join(wanted)}); missing {missing}, unexpected {extra}")
    return _BUILDERS[name](order=order, **got)


def koebe_slice_coeff(theta: float, n: int) -> complex:
    """Closed form of the n-th coefficient of ``h_K + exp(i theta) g_K``."""
    e = cmath.exp(1j * theta)
    return (2 * n * n * (1 + e) + 3 * n * (1 - e) + (1 + e)) / 6


def koebe_spec(omega: Series | Rational, order: int = DEFAULT_ORDER) -> ShearSpec:
    """Classical shear of the Koebe function with the given dilatation."""
    if isinstance(omega, Rational):
        return ShearSpec.from_rational(KOEBE, omega, math.pi, order)
    return ShearSpec(KOEBE.to_series(order + 1), omega, -1.0, KOEBE, None)


def random_blaschke(rng: np.random.Generator, zeros: int = 2, c_max: float = 0.99) -> Rational:
    """``c z prod (z - a_k) / (1 - conj(a_k) z)`` with ``|a_k| < 1`` and ``|c| <= c_max``."""
    c = c_max * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
    num = np.array([0, c], dtype=complex)
    factors = []
    for _ in range(zeros):
        a = 0.9 * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
        num = np.convolve(num, [-a, 1.0])
        factors.append(np.array([1.0, -np.conj(a)]))
    return Rational.factored(num, factors or [np.ones(1)])


def random_rational_spec(rng: np.random.Generator, order: int = DEFAULT_ORDER, degree: int = 2) -> ShearSpec:
    """Random normalised rational ``phi`` (poles outside ``|z| < 1.2``), Blaschke-type ``omega`` and ``eps``.

    ``phi`` is only required to be holomorphic and normalised here; the
    coefficient identities of the shear hold regardless of univalence.
    """
    q = np.ones(1, dtype=complex)
    for _ in range(degree):
        p = (1.2 + 2 * rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
        q = np.convolve(q, [1.0, -1 / p])
    num = np.zeros(degree + 1, dtype=complex)
    num[1] = q[0]
    num[2:] = 0.3 * (rng.normal(size=degree - 1) + 1j * rng.normal(size=degree - 1))
    omega = random_blaschke(rng, int(rng.integers(0, 3)))
    theta = 2 * math.pi * rng.uniform()
    return ShearSpec.from_rational(Rational(num, q), omega, theta, order)
