"""Harmonic maps ``f = h + conj(g)`` on the unit disk and the operators on them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .analytic import ZERO, PointFn
from .powerseries import EPS_DIV, Series


class MapError(ValueError):
    pass


class CriticalPoint(MapError):
    pass


class AffineFactorOutOfDisk(MapError):
    pass


def _scalar(v):
    return complex(v) if np.ndim(v) == 0 else v


@dataclass(frozen=True, eq=False)
class HarmonicMap:
    """``f = h + conj(g)`` stored as two truncated series.

    ``h_fn``/``g_fn`` are optional closed-form evaluators.  When present they
    are used for every pointwise quantity (values, derivatives, Jacobians); the
    series stay the source of truth for coefficients.  ``sense_preserving`` is
    only ever set by :func:`harmshear.verify.certify_sense_preserving`.
    """

    h: Series
    g: Series
    h_fn: PointFn | None = None
    g_fn: PointFn | None = None
    label: str = ""
    sense_preserving: bool = field(default=False, compare=False)

    @property
    def order(self) -> int:
        return min(self.h.order, self.g.order)

    def a(self, n: int) -> complex:
        return complex(self.h.coeffs[n])

    def b(self, n: int) -> complex:
        return complex(self.g.coeffs[n])

    @property
    def b1(self) -> complex:
        return self.b(1) if self.g.order >= 1 else 0j

    def is_normalized(self, tol: float = 1e-12) -> bool:
        """``h(0) = g(0) = 0`` and ``h'(0) = 1``."""
        return (
            abs(self.h.coeffs[0]) <= tol
            and abs(self.g.coeffs[0]) <= tol
            and self.h.order >= 1
            and abs(self.h.coeffs[1] - 1) <= tol
        )

    @property
    def normalized(self) -> bool:
        return self.is_normalized()

    def dh(self, z, k: int = 0):
        """k-th derivative of the analytic part."""
        fn = self.h_fn or PointFn.from_series(self.h)
        return _scalar(fn(z, k))

    def dg(self, z, k: int = 0):
        """k-th derivative of the co-analytic part."""
        fn = self.g_fn or PointFn.from_series(self.g)
        return _scalar(fn(z, k))

    def series_only(self) -> "HarmonicMap":
        return replace(self, h_fn=None, g_fn=None)

    def __call__(self, z):
        return eval_map(self, z)


def _fn(f: HarmonicMap, part: str) -> PointFn:
    if part == "h":
        return f.h_fn or PointFn.from_series(f.h)
    return f.g_fn or PointFn.from_series(f.g)


def identity_map(order: int = 64) -> HarmonicMap:
    return HarmonicMap(
        Series.identity(order), Series.zeros(order), PointFn.polynomial([0, 1], "z"), ZERO, label="identity"
    )


def eval_map(f: HarmonicMap, z):
    return _scalar(np.asarray(f.dh(z)) + np.conj(f.dg(z)))


def jacobian(f: HarmonicMap, z):
    """``|h'|^2 - |g'|^2``."""
    val = np.abs(f.dh(z, 1)) ** 2 - np.abs(f.dg(z, 1)) ** 2
    return float(val) if np.ndim(val) == 0 else val


def dilatation(f: HarmonicMap, z):
    """Second complex dilatation ``g'/h'``."""
    hp = np.asarray(f.dh(z, 1))
    if np.any(np.abs(hp) <= EPS_DIV):
        bad = np.asarray(z).reshape(-1)[np.argmin(np.abs(hp).reshape(-1))]
        raise CriticalPoint(f"h' vanishes (|h'| <= {EPS_DIV:g}) near z = {complex(bad):.6g}")
    return _scalar(np.asarray(f.dg(z, 1)) / hp)


def slice(f: HarmonicMap, lam: complex) -> Series:  # noqa: A001 - mirrors the mathematical name
    """The analytic function ``h + lam g`` as a series."""
    return f.h + f.g * complex(lam)


def slice_map(f: HarmonicMap, lam: complex) -> HarmonicMap:
    """``h + lam g`` as an analytic (``g = 0``) map, keeping closed forms."""
    lam = complex(lam)
    fn = None
    if f.h_fn is not None or f.g_fn is not None:
        fn = _fn(f, "h") + _fn(f, "g").scale(lam)
    return HarmonicMap(slice(f, lam), Series.zeros(f.g.order), fn, ZERO, label=f"{f.label}|slice")


def affine_combine(f0: HarmonicMap, b1: complex) -> HarmonicMap:
    """``f0 + b1 * conj(f0)`` regrouped as ``(h0 + b1 g0) + conj(g0 + conj(b1) h0)``.

    This is the construction defining the affine hull of a ``b1 = 0`` class.
    The normalised affine transform ``(f + c conj f) / (1 + c b1)`` is
    ``rescale(affine_combine(f, c), 1 + c * f.b1)``.
    """
    b1 = complex(b1)
    if abs(b1) >= 1:
        raise AffineFactorOutOfDisk(f"|b1| = {abs(b1):.6g} must be < 1")
    h = f0.h + f0.g * b1
    g = f0.g + f0.h * b1.conjugate()
    h_fn = g_fn = None
    if f0.h_fn is not None or f0.g_fn is not None:
        h_fn = _fn(f0, "h") + _fn(f0, "g").scale(b1)
        g_fn = _fn(f0, "g") + _fn(f0, "h").scale(b1.conjugate())
    return HarmonicMap(h, g, h_fn, g_fn, label=f"{f0.label}+{b1:g}*conj")


def rescale(f: HarmonicMap, s: complex) -> HarmonicMap:
    """``f / s``; the co-analytic part is divided by ``conj(s)``."""
    s = complex(s)
    h_fn = f.h_fn.scale(1 / s) if f.h_fn is not None else None
    g_fn = f.g_fn.scale(1 / s.conjugate()) if f.g_fn is not None else None
    return HarmonicMap(f.h / s, f.g / s.conjugate(), h_fn, g_fn, label=f"{f.label}/{s:g}")


def koenigs_transform(f: HarmonicMap, zeta: complex, z):
    """Disk-automorphism renormalisation of ``f`` about ``zeta``, evaluated at ``z``.

    Only the pointwise form is offered: composing truncated series with a
    Mobius map based away from the origin loses control of the truncation
    error.  Sample on a circle and use ``coeffs_from_samples`` for a series.
    """
    zeta = complex(zeta)
    hp = f.dh(zeta, 1)
    if abs(hp) <= EPS_DIV:
        raise CriticalPoint(f"h'({zeta:.6g}) vanishes")
    z = np.asarray(z, dtype=complex)
    w = (z + zeta) / (1 + zeta.conjugate() * z)
    num = np.asarray(eval_map(f, w)) - eval_map(f, zeta)
    return _scalar(num / ((1 - abs(zeta) ** 2) * hp))


def alexander(f: HarmonicMap) -> HarmonicMap:
    """Harmonic Alexander transform ``H = z h'``, ``G = -z g'`` (``H_n = n a_n``, ``G_n = -n b_n``)."""
    h_fn = g_fn = None
    if f.h_fn is not None or f.g_fn is not None:
        h_fn = _fn(f, "h").zdiff()
        g_fn = _fn(f, "g").zdiff().scale(-1)
    return HarmonicMap(f.h.zdiff(), -f.g.zdiff(), h_fn, g_fn, label=f"alexander({f.label})")


@dataclass(frozen=True)
class FamilyConstants:
    """Extremal second coefficients of an affine and linear invariant family.

    ``alpha`` bounds ``|a_2|`` over the whole family, ``alpha0``/``beta0``
    bound ``|a_2|``/``|b_2|`` over its ``b1 = 0`` members.  Use
    :class:`fractions.Fraction` values to get exact exponents.
    """

    alpha: Fraction
    alpha0: Fraction
    beta0: Fraction

    def __post_init__(self):
        if self.alpha0 + self.beta0 <= 1:
            raise MapError("alpha0 + beta0 must exceed 1 for a radius of convexity in (0, 1)")

    @property
    def rho(self) -> float:
        s = float(self.alpha0 + self.beta0)
        return s - math.sqrt(s * s - 1)

    @property
    def covering_radius(self):
        return 1 / (2 * self.alpha)

    @property
    def growth_exponent(self):
        return self.alpha

    @property
    def jacobian_exponents(self):
        return 2 * self.alpha0 - 2, 2 * self.alpha0 + 2

    @property
    def derivative_exponents(self):
        return self.alpha0 - Fraction(3, 2), self.alpha0 + Fraction(3, 2)

    @property
    def curvature_exponent(self):
        return self.alpha0 + Fraction(3, 2)

    @property
    def curvature_coefficient(self):
        return 2 * (self.alpha0 + self.beta0)


#: constants of the class of maps with a univalent slice and its affine hull
SHS_CONSTANTS = FamilyConstants(Fraction(3), Fraction(5, 2), Fraction(1, 2))
