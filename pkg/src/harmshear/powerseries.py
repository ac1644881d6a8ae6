"""Truncated complex Taylor series.

A :class:`Series` holds the coefficients ``c_0 .. c_N`` of a power series in
``z`` truncated at order ``N``.  Coefficients beyond ``N`` are *unknown*, not
zero, so every binary operation returns a result at the smaller of the two
operand orders and nothing is ever padded behind the caller's back.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

import numpy as np

#: constant terms at or below this magnitude are treated as non-invertible
EPS_DIV = 1e-12

#: default truncation order
DEFAULT_ORDER = 64


class SeriesError(ValueError):
    pass


class NearZeroConstantTerm(SeriesError):
    pass


class NonVanishingInnerTerm(SeriesError):
    pass


class RadiusOutOfRange(SeriesError):
    pass


class InsufficientSamples(SeriesError):
    pass


@dataclass(frozen=True, eq=False)
class Series:
    """Truncated power series ``sum_{n<=order} coeffs[n] z**n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            raise SeriesError("a Series needs at least the constant coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "Series":
        """Build from a finite coefficient list.

        If ``order`` is given the list is zero-padded or cut to that order;
        padding is only correct when ``coeffs`` describes a polynomial.
        """
        c = np.asarray(coeffs, dtype=complex).reshape(-1)
        if order is None:
            return cls(c)
        out = np.zeros(order + 1, dtype=complex)
        k = min(order + 1, c.size)
        out[:k] = c[:k]
        return cls(out)

    @classmethod
    def zeros(cls, order: int) -> "Series":
        return cls(np.zeros(order + 1, dtype=complex))

    @classmethod
    def constant(cls, value: complex, order: int) -> "Series":
        return cls.monomial(0, order, value)

    @classmethod
    def monomial(cls, n: int, order: int, coeff: complex = 1.0) -> "Series":
        c = np.zeros(order + 1, dtype=complex)
        if n <= order:
            c[n] = coeff
        return cls(c)

    @classmethod
    def identity(cls, order: int) -> "Series":
        """The series of ``z``."""
        return cls.monomial(1, order)

    @classmethod
    def geometric(cls, ratio: complex, order: int, start: int = 0, scale: complex = 1.0) -> "Series":
        """``scale * sum_{n>=start} ratio**(n-start) z**n``."""
        c = np.zeros(order + 1, dtype=complex)
        n = np.arange(start, order + 1)
        c[start:] = scale * np.power(complex(ratio), n - start)
        return cls(c)

    # -- basic protocol ---------------------------------------------------

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"Series([{head}{more}], order={self.order})"

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError(f"cannot truncate order {self.order} series to higher order {order}")
        return Series(self.coeffs[: order + 1])

    def allclose(self, other: "Series", rtol=1e-12, atol=1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.allclose(self.coeffs[:n], other.coeffs[:n], rtol=rtol, atol=atol))

    # -- arithmetic -------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order) + 1
            return self.coeffs[:n], other.coeffs[:n]
        if isinstance(other, Number):
            return self.coeffs, np.concatenate(([complex(other)], np.zeros(self.order, dtype=complex)))
        return NotImplemented

    def __add__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        return Series(p[0] + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        return Series(p[0] - p[1])

    def __rsub__(self, other):
        p = self._pair(other)
        if p is NotImplemented:
            return p
        return Series(p[1] - p[0])

    def __neg__(self):
        return Series(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Number):
            return Series(self.coeffs * complex(other))
        if not isinstance(other, Series):
            return NotImplemented
        a, b = self._pair(other)
        # Cauchy product, truncated at the shared order
        return Series(np.convolve(a, b)[: a.size])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return Series(self.coeffs / complex(other))
        if isinstance(other, Series):
            return self * other.recip()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Number):
            return complex(other) * self.recip()
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, (int, np.integer)) or k < 0:
            return NotImplemented
        out = Series.constant(1.0, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def recip(self) -> "Series":
        """Multiplicative inverse to the same order."""
        c = self.coeffs
        if abs(c[0]) <= EPS_DIV:
            raise NearZeroConstantTerm(
                f"constant term {c[0]:.3g} is too small to invert (|c0| <= {EPS_DIV:g})"
            )
        d = np.zeros_like(c)
        d[0] = 1.0 / c[0]
        for n in range(1, c.size):
            # d_n = -(1/c0) sum_{k=1}^{n} c_k d_{n-k}
            d[n] = -np.dot(c[1 : n + 1], d[n - 1 :: -1]) / c[0]
        return Series(d)

    # -- calculus ---------------------------------------------------------

    def derivative(self) -> "Series":
        if self.order == 0:
            return Series.zeros(0)
        n = np.arange(1, self.order + 1)
        return Series(self.coeffs[1:] * n)

    def antiderivative(self) -> "Series":
        """Antiderivative with zero constant term; order rises by one."""
        n = np.arange(1, self.order + 2)
        return Series(np.concatenate(([0.0], self.coeffs / n)))

    def zdiff(self) -> "Series":
        """``z * d/dz``, i.e. ``c_n -> n c_n`` at the same order."""
        return Series(self.coeffs * np.arange(self.order + 1))

    def compose(self, inner: "Series") -> "Series":
        """``self(inner(z))``; requires ``inner(0) == 0``."""
        if inner.coeffs[0] != 0:
            raise NonVanishingInnerTerm(
                f"inner series has constant term {inner.coeffs[0]:.3g}; evaluate pointwise instead"
            )
        order = min(self.order, inner.order)
        outer = self.coeffs[: order + 1]
        inner = inner.truncate(order)
        acc = Series.constant(outer[-1], order)
        for c in outer[-2::-1]:
            acc = acc * inner + c
        return acc

    # -- evaluation -------------------------------------------------------

    def __call__(self, z):
        """Horner evaluation of the truncated polynomial; ``z`` may be an array."""
        z = np.asarray(z, dtype=complex)
        acc = np.full(z.shape, self.coeffs[-1], dtype=complex)
        for c in self.coeffs[-2::-1]:
            acc = acc * z + c
        return acc if acc.ndim else complex(acc)

    eval = __call__


# Functional spellings of the operations, for callers that prefer them.

def arith(a: Series, b: Series | None, kind: str, scale: complex | None = None) -> Series:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "scale":
        return a * complex(scale)
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def recip(a: Series) -> Series:
    return a.recip()


def calculus(a: Series, kind: str) -> Series:
    if kind == "derivative":
        return a.derivative()
    if kind == "antiderivative":
        return a.antiderivative()
    raise ValueError(f"unknown calculus kind {kind!r}")


def compose(outer: Series, inner: Series) -> Series:
    return outer.compose(inner)


def evaluate(a: Series, z):
    return a(z)


def circle_points(r: float, count: int) -> np.ndarray:
    return r * np.exp(2j * np.pi * np.arange(count) / count)


def coeffs_from_samples(fvals, r: float, order: int) -> Series:
    """Recover Taylor coefficients from samples on the circle ``|z| = r``.

    ``fvals[k]`` must be the function value at ``r * exp(2j*pi*k/M)``.  The
    trapezoidal rule is spectrally accurate here; aliasing from coefficients
    above ``M`` contributes a relative error of order ``r**(M - N)``.
    """
    fvals = np.asarray(fvals, dtype=complex).reshape(-1)
    m = fvals.size
    if not 0.0 < r < 1.0:
        raise RadiusOutOfRange(f"sampling radius must lie in (0, 1), got {r}")
    if m <= 2 * order:
        raise InsufficientSamples(f"need more than {2 * order} samples for order {order}, got {m}")
    spectrum = np.fft.fft(fvals)[: order + 1] / m
    return Series(spectrum / r ** np.arange(order + 1))
