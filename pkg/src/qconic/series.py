"""Truncated complex power series: multiply, divide, compose, evaluate.

A series is a finite coefficient vector a_0..a_N understood as the germ of
an analytic function on the unit disc. All binary operations truncate to
the smaller degree of their operands so that no coefficient beyond the
trustworthy order is ever fabricated.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels

DEFAULT_DEGREE = 32


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients a_0..a_N of a truncated power series (complex128)."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d vector")
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self):
        return self.coeffs.size - 1

    @property
    def is_normalized(self):
        """True when a_0 = 0 and a_1 = 1 (disc-normalized germ)."""
        return (
            self.degree >= 1
            and abs(self.coeffs[0]) <= 1e-12
            and abs(self.coeffs[1] - 1.0) <= 1e-12
        )

    def truncate(self, degree):
        if degree >= self.degree:
            return self
        return TruncatedSeries(self.coeffs[: degree + 1].copy())

    def pad(self, degree):
        """Extend with explicit zero coefficients up to ``degree``."""
        if degree <= self.degree:
            return self
        out = np.zeros(degree + 1, dtype=np.complex128)
        out[: self.coeffs.size] = self.coeffs
        return TruncatedSeries(out)

    def valuation(self):
        """Index of the lowest-order nonzero coefficient (None if zero)."""
        nz = np.flatnonzero(self.coeffs != 0)
        return int(nz[0]) if nz.size else None

    def __repr__(self):
        head = np.array2string(self.coeffs[:4], precision=6, separator=", ")
        return f"TruncatedSeries(degree={self.degree}, coeffs={head}...)"


def from_coeffs(values, degree=None):
    arr = np.asarray(list(values), dtype=np.complex128)
    f = TruncatedSeries(arr)
    return f if degree is None else f.pad(degree).truncate(degree)


def zero(degree=DEFAULT_DEGREE):
    return TruncatedSeries(np.zeros(degree + 1, dtype=np.complex128))


def one(degree=DEFAULT_DEGREE):
    c = np.zeros(degree + 1, dtype=np.complex128)
    c[0] = 1.0
    return TruncatedSeries(c)


def identity(degree=DEFAULT_DEGREE):
    c = np.zeros(degree + 1, dtype=np.complex128)
    if degree < 1:
        raise ValueError("identity series needs degree >= 1")
    c[1] = 1.0
    return TruncatedSeries(c)


def monomial(n, degree=DEFAULT_DEGREE, coeff=1.0):
    if n > degree:
        raise ValueError("monomial order exceeds requested degree")
    c = np.zeros(degree + 1, dtype=np.complex128)
    c[n] = coeff
    return TruncatedSeries(c)


def add(f, g):
    n = min(f.degree, g.degree)
    return TruncatedSeries(f.coeffs[: n + 1] + g.coeffs[: n + 1])


def subtract(f, g):
    n = min(f.degree, g.degree)
    return TruncatedSeries(f.coeffs[: n + 1] - g.coeffs[: n + 1])


def scale(f, c):
    return TruncatedSeries(f.coeffs * complex(c))


def multiply(f, g):
    """Cauchy product truncated to the smaller input degree."""
    n = min(f.degree, g.degree)
    conv = np.convolve(f.coeffs, g.coeffs)[: n + 1]
    return TruncatedSeries(conv)


def divide(f, g):
    """Series quotient h with h*g = f through the truncation order.

    A common factor z^m (m = valuation of g) is removed first; f must
    vanish to at least the same order.
    """
    m = g.valuation()
    if m is None:
        raise ZeroDivisionError("division by the zero series")
    if np.any(f.coeffs[:m] != 0):
        raise ZeroDivisionError(
            "dividend valuation is lower than divisor valuation"
        )
    n = min(f.degree, g.degree) - m
    fd = np.zeros(n + 1, dtype=np.complex128)
    avail = min(n + 1, f.coeffs.size - m)
    fd[:avail] = f.coeffs[m : m + avail]
    gd = np.zeros(n + 1, dtype=np.complex128)
    avail = min(n + 1, g.coeffs.size - m)
    gd[:avail] = g.coeffs[m : m + avail]
    h = np.zeros(n + 1, dtype=np.complex128)
    for i in range(n + 1):
        acc = fd[i]
        if i:
            acc = acc - np.dot(h[:i], gd[i:0:-1])
        h[i] = acc / gd[0]
    return TruncatedSeries(h)


def compose(outer, inner):
    """Taylor composition outer(inner(z)); inner must vanish at 0."""
    if inner.coeffs[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(outer.degree, inner.degree)
    inner_c = inner.coeffs[: n + 1]
    acc = np.zeros(n + 1, dtype=np.complex128)
    acc[0] = outer.coeffs[min(n, outer.degree)]
    top = min(n, outer.degree)
    for j in range(top - 1, -1, -1):
        acc = np.convolve(acc, inner_c)[: n + 1]
        acc[0] += outer.coeffs[j]
    return TruncatedSeries(acc)


def evaluate(f, z):
    """Horner evaluation of the coefficient polynomial at z (scalar/array)."""
    return _kernels.horner_eval(f.coeffs, z)
