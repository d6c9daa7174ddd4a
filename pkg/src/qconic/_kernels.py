"""Numeric kernels: complex Horner evaluation, AGM elliptic K, Carlson R_F.

Each kernel has a numba ``@njit`` implementation and a pure-numpy
implementation. The active one is picked at import time: numba is used when
it imports cleanly and ``QCONIC_NO_NUMBA`` is unset/empty in the
environment. Both variants stay importable so they can be benchmarked and
cross-checked against each other (see ``benchmarks/bench_kernels.py``).
"""

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and not os.environ.get("QCONIC_NO_NUMBA")

# Carlson duplex iteration: each round shrinks the error metric by 4x, and
# the series tail is O(eps) once 4^-m Q < |A_m|.
_RF_MAX_ITER = 120


def horner_eval_numpy(coeffs, zs):
    """Evaluate sum(coeffs[n] * zs**n) at each point of ``zs`` (Horner)."""
    acc = np.full(zs.shape, coeffs[-1], dtype=np.complex128)
    for n in range(len(coeffs) - 2, -1, -1):
        acc = acc * zs + coeffs[n]
    return acc


def agm_k_numpy(t):
    """Complete elliptic integral K(t), modulus convention, via AGM."""
    t = np.asarray(t, dtype=np.float64)
    a = np.ones_like(t)
    b = np.sqrt(1.0 - t * t)
    for _ in range(60):
        if np.all(np.abs(a - b) <= 1e-16 * a):
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
    return np.pi / (2.0 * a)


def carlson_rf_numpy(x, y, z):
    """Carlson symmetric integral R_F(x, y, z) for complex arguments.

    Principal square roots throughout; arguments exactly on the negative
    real axis take the limit from above (numpy's sqrt(-a+0j) = +i*sqrt(a)).
    """
    x0 = np.asarray(x, dtype=np.complex128)
    y0 = np.asarray(y, dtype=np.complex128)
    z0 = np.asarray(z, dtype=np.complex128)
    x, y, z = x0.copy(), y0.copy(), z0.copy()
    a0 = (x + y + z) / 3.0
    qmax = (3.0 * 1e-16) ** (-1.0 / 6.0) * np.maximum(
        np.abs(a0 - x), np.maximum(np.abs(a0 - y), np.abs(a0 - z))
    )
    a = a0.copy()
    scale = 1.0
    for _ in range(_RF_MAX_ITER):
        if np.all(scale * qmax <= np.abs(a)):
            break
        sx, sy, sz = np.sqrt(x), np.sqrt(y), np.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        scale *= 0.25
    xs = (a0 - x0) * scale / a
    ys = (a0 - y0) * scale / a
    zs = -xs - ys
    e2 = xs * ys - zs * zs
    e3 = xs * ys * zs
    return (
        1.0
        - e2 / 10.0
        + e3 / 14.0
        + e2 * e2 / 24.0
        - 3.0 * e2 * e3 / 44.0
    ) / np.sqrt(a)


if _HAVE_NUMBA:

    @njit(cache=True)
    def horner_eval_numba(coeffs, zs):
        out = np.empty(zs.shape[0], dtype=np.complex128)
        for i in range(zs.shape[0]):
            acc = coeffs[-1]
            for n in range(len(coeffs) - 2, -1, -1):
                acc = acc * zs[i] + coeffs[n]
            out[i] = acc
        return out

    @njit(cache=True)
    def agm_k_numba(t):
        out = np.empty(t.shape[0], dtype=np.float64)
        for i in range(t.shape[0]):
            a = 1.0
            b = np.sqrt(1.0 - t[i] * t[i])
            for _ in range(60):
                if abs(a - b) <= 1e-16 * a:
                    break
                a, b = 0.5 * (a + b), np.sqrt(a * b)
            out[i] = np.pi / (2.0 * a)
        return out

    @njit(cache=True)
    def carlson_rf_numba(x, y, z):
        out = np.empty(x.shape[0], dtype=np.complex128)
        for i in range(x.shape[0]):
            x0, y0, z0 = x[i], y[i], z[i]
            xi, yi, zi = x0, y0, z0
            a0 = (xi + yi + zi) / 3.0
            qmax = (3.0 * 1e-16) ** (-1.0 / 6.0) * max(
                abs(a0 - xi), abs(a0 - yi), abs(a0 - zi)
            )
            a = a0
            scale = 1.0
            for _ in range(_RF_MAX_ITER):
                if scale * qmax <= abs(a):
                    break
                sx, sy, sz = np.sqrt(xi), np.sqrt(yi), np.sqrt(zi)
                lam = sx * sy + sy * sz + sz * sx
                xi = 0.25 * (xi + lam)
                yi = 0.25 * (yi + lam)
                zi = 0.25 * (zi + lam)
                a = 0.25 * (a + lam)
                scale *= 0.25
            xs = (a0 - x0) * scale / a
            ys = (a0 - y0) * scale / a
            zs = -xs - ys
            e2 = xs * ys - zs * zs
            e3 = xs * ys * zs
            out[i] = (
                1.0
                - e2 / 10.0
                + e3 / 14.0
                + e2 * e2 / 24.0
                - 3.0 * e2 * e3 / 44.0
            ) / np.sqrt(a)
        return out


def _as_c128(v):
    return np.ascontiguousarray(np.atleast_1d(np.asarray(v, dtype=np.complex128)))


def horner_eval(coeffs, zs):
    """Dispatching wrapper; accepts scalars or arrays, preserves shape."""
    zarr = _as_c128(zs)
    carr = _as_c128(coeffs)
    if USE_NUMBA:
        vals = horner_eval_numba(carr, zarr.ravel()).reshape(zarr.shape)
    else:
        vals = horner_eval_numpy(carr, zarr)
    if np.isscalar(zs) or getattr(zs, "ndim", 0) == 0:
        return complex(vals[0])
    return vals


def agm_k(t):
    tarr = np.ascontiguousarray(np.atleast_1d(np.asarray(t, dtype=np.float64)))
    if USE_NUMBA:
        vals = agm_k_numba(tarr.ravel()).reshape(tarr.shape)
    else:
        vals = agm_k_numpy(tarr)
    if np.isscalar(t) or getattr(t, "ndim", 0) == 0:
        return float(vals[0])
    return vals


def carlson_rf(x, y, z):
    xa, ya, za = _as_c128(x), _as_c128(y), _as_c128(z)
    xa, ya, za = np.broadcast_arrays(xa, ya, za)
    shape = xa.shape
    if USE_NUMBA:
        vals = carlson_rf_numba(
            np.ascontiguousarray(xa.ravel()),
            np.ascontiguousarray(ya.ravel()),
            np.ascontiguousarray(za.ravel()),
        ).reshape(shape)
    else:
        vals = carlson_rf_numpy(xa, ya, za)
    if np.isscalar(x) or getattr(x, "ndim", 0) == 0:
        return complex(vals.ravel()[0])
    return vals
