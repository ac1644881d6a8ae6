"""Pointwise evaluators for analytic functions with known closed forms.

Truncated series are useless close to the unit circle for maps with a pole at
``z = 1`` (the coefficients of the harmonic Koebe function grow like ``n**2``),
so maps carry an optional :class:`PointFn` next to their series.  A ``PointFn``
returns the ``k``-th derivative at any array of points.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as P

from .powerseries import Series


def _trim(c):
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    return c if c.size else np.zeros(1, dtype=complex)


#: roots closer than this (relative) are merged into one multiple pole
ROOT_CLUSTER_TOL = 1e-4


def _cluster_roots(roots):
    """Group numerically split multiple roots; returns [(mean root, multiplicity)]."""
    roots = list(roots)
    groups = []
    for r in roots:
        for grp in groups:
            if abs(r - np.mean(grp)) <= ROOT_CLUSTER_TOL * max(1.0, abs(r)):
                grp.append(r)
                break
        else:
            groups.append([r])
    return [(complex(np.mean(grp)), len(grp)) for grp in groups]


def _rising(m, k):
    out = 1
    for i in range(k):
        out *= m + i
    return out


class Rational:
    """``p(z) / q(z)`` with ascending coefficient arrays.

    The denominator is kept as a product of factors so that poles are found
    factor by factor.  Evaluation goes through a partial-fraction expansion,
    which stays accurate next to a pole where the expanded polynomials would
    cancel catastrophically.
    """

    def __init__(self, num, den=(1.0,)):
        self.num = P.polytrim(_trim(num))
        self.factors = (P.polytrim(_trim(den)),)
        self._check()

    @classmethod
    def factored(cls, num, factors) -> "Rational":
        r = cls.__new__(cls)
        r.num = P.polytrim(_trim(num))
        r.factors = tuple(P.polytrim(_trim(f)) for f in factors)
        r._check()
        return r

    def _check(self):
        for f in self.factors:
            if not np.any(f):
                raise ZeroDivisionError("denominator polynomial is identically zero")

    @classmethod
    def poly(cls, coeffs) -> "Rational":
        return cls(coeffs, [1.0])

    @property
    def den(self) -> np.ndarray:
        out = np.ones(1, dtype=complex)
        for f in self.factors:
            out = P.polymul(out, f)
        return out

    def __repr__(self):
        return f"Rational(num={self.num.tolist()}, den={self.den.tolist()})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Rational):
            other = Rational.poly([complex(other)])
        if len(self.factors) == len(other.factors) and all(
            a.shape == b.shape and np.array_equal(a, b) for a, b in zip(self.factors, other.factors)
        ):
            return Rational.factored(P.polyadd(self.num, other.num), self.factors)
        num = P.polyadd(P.polymul(self.num, other.den), P.polymul(other.num, self.den))
        return Rational.factored(num, self.factors + other.factors)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, Rational):
            return Rational.factored(P.polymul(self.num, other.num), self.factors + other.factors)
        return Rational.factored(self.num * complex(other), self.factors)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return Rational.factored(P.polymul(self.num, other.den), self.factors + (other.num,))
        return Rational.factored(self.num / complex(other), self.factors)

    def __neg__(self):
        return Rational.factored(-self.num, self.factors)

    def derivative(self) -> "Rational":
        q = self.den
        dq = P.polyder(q) if q.size > 1 else np.zeros(1)
        dn = P.polyder(self.num) if self.num.size > 1 else np.zeros(1)
        return Rational.factored(P.polysub(P.polymul(dn, q), P.polymul(self.num, dq)), self.factors * 2)

    # -- partial fractions ------------------------------------------------

    @cached_property
    def _partial_fractions(self):
        lead = 1.0 + 0j
        roots = []
        for f in self.factors:
            lead *= f[-1]
            if f.size > 1:
                roots.extend(np.roots(f[::-1]))
        poles = _cluster_roots(roots)
        quotient = P.polydiv(self.num, self.den)[0] if self.num.size >= self.den.size else np.zeros(1)
        terms = []
        for j, (p, m) in enumerate(poles):
            # Taylor coefficients of (z - p)^m R(z) about p, up to u^(m-1)
            t = np.empty(m, dtype=complex)
            d = self.num
            for i in range(m):
                t[i] = P.polyval(p, d) / math.factorial(i)
                d = P.polyder(d) if d.size > 1 else np.zeros(1)
            s = Series(t) / lead
            for i, (pi, mi) in enumerate(poles):
                if i != j:
                    s = s * Series.from_coeffs([p - pi, 1.0], m - 1).recip() ** mi
            # s_l multiplies (z - p)^(l - m)
            terms.append((p, s.coeffs[::-1].copy()))  # index q-1 -> coefficient of (z-p)^-q
        return quotient, terms

    @property
    def poles(self):
        return [(p, c.size) for p, c in self._partial_fractions[1]]

    def __call__(self, z, k: int = 0):
        z = np.asarray(z, dtype=complex)
        quotient, terms = self._partial_fractions
        qk = P.polyder(quotient, k) if quotient.size > k else np.zeros(1)
        out = P.polyval(z, qk) + np.zeros(z.shape, dtype=complex)
        sign = -1.0 if k % 2 else 1.0
        for p, c in terms:
            u = z - p
            for q in range(c.size, 0, -1):
                if c[q - 1] != 0:
                    out = out + c[q - 1] * sign * _rising(q, k) / u ** (q + k)
        return out if out.ndim else complex(out)

    def to_series(self, order: int) -> Series:
        return Series.from_coeffs(self.num, order) * Series.from_coeffs(self.den, order).recip()


# Gauss-Legendre panels on [0, 1], graded towards 1.  Singularities sit at
# |z| >= 1 while the path ends at |z| <= 0.999, so every panel stays at least a
# panel length away from the nearest pole.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)
_EDGES = np.concatenate(([0.0], 1.0 - 0.5 ** np.arange(1, 13), [1.0]))


def _quadrature_rule():
    t, w = [], []
    for a, b in zip(_EDGES[:-1], _EDGES[1:]):
        t.append(0.5 * (b - a) * _GL_NODES + 0.5 * (a + b))
        w.append(0.5 * (b - a) * _GL_WEIGHTS)
    return np.concatenate(t), np.concatenate(w)


_QT, _QW = _quadrature_rule()


def integrate_from_origin(deriv: Callable, z) -> np.ndarray:
    """``int_0^z deriv(s) ds`` along the straight segment."""
    z = np.asarray(z, dtype=complex)
    flat = z.reshape(-1)
    out = np.empty(flat.shape, dtype=complex)
    step = 4096
    for i in range(0, flat.size, step):
        zz = flat[i : i + step]
        vals = deriv(_QT[:, None] * zz[None, :])
        out[i : i + step] = zz * (_QW @ vals)
    out = out.reshape(z.shape)
    return out if out.ndim else complex(out)


class PointFn:
    """Analytic function given by ``fn(z, k)`` returning the k-th derivative."""

    def __init__(self, fn: Callable, max_k: int | None = None, name: str = ""):
        self._fn = fn
        self.max_k = max_k
        self.name = name

    def __call__(self, z, k: int = 0):
        if self.max_k is not None and k > self.max_k:
            raise ValueError(f"{self.name or 'function'} only provides derivatives up to order {self.max_k}")
        return self._fn(np.asarray(z, dtype=complex), k)

    def __repr__(self):
        return f"PointFn({self.name})" if self.name else "PointFn()"

    # -- constructors -----------------------------------------------------

    @classmethod
    def rational(cls, r: Rational, name: str = "") -> "PointFn":
        return cls(lambda z, k: r(z, k), name=name)

    @classmethod
    def polynomial(cls, coeffs, name: str = "") -> "PointFn":
        return cls.rational(Rational.poly(coeffs), name=name)

    @classmethod
    def integral_of(cls, r: Rational, name: str = "") -> "PointFn":
        """Antiderivative vanishing at 0 of a rational function."""

        def fn(z, k):
            if k == 0:
                return integrate_from_origin(lambda s: r(s), z)
            return r(z, k - 1)

        return cls(fn, name=name)

    @classmethod
    def log_type(cls, a: float, name: str = "") -> "PointFn":
        """``a * log(a / (a - z)) = sum_{n>=1} z**n / (n a**(n-1))``."""

        def fn(z, k):
            if k == 0:
                return -a * np.log1p(-z / a)
            return a * math.factorial(k - 1) / (a - z) ** k

        return cls(fn, name=name or f"a*log(a/(a-z)), a={a:g}")

    @classmethod
    def from_series(cls, s: Series) -> "PointFn":
        derivs = [s]

        def fn(z, k):
            while len(derivs) <= k:
                derivs.append(derivs[-1].derivative())
            return derivs[k](z)

        return cls(fn, name="series")

    # -- combinators ------------------------------------------------------

    def __add__(self, other: "PointFn") -> "PointFn":
        return PointFn(lambda z, k: self(z, k) + other(z, k), name=f"({self.name} + {other.name})")

    def __sub__(self, other: "PointFn") -> "PointFn":
        return PointFn(lambda z, k: self(z, k) - other(z, k), name=f"({self.name} - {other.name})")

    def scale(self, c: complex) -> "PointFn":
        c = complex(c)
        return PointFn(lambda z, k: c * self(z, k), name=f"{c:g}*{self.name}")

    def zdiff(self) -> "PointFn":
        """``z f'(z)``; Leibniz gives ``(z u)^(k) = z u^(k) + k u^(k-1)`` with ``u = f'``."""
        return PointFn(lambda z, k: z * self(z, k + 1) + k * self(z, k), name=f"z*d({self.name})")


ZERO = PointFn(lambda z, k: np.zeros_like(z), name="0")
