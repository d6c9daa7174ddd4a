"""Kernel-level checks: numba and numpy paths agree, and both agree with
independent references (naive summation, adaptive quadrature, mpmath)."""

import math

import mpmath
import numpy as np
import pytest
from scipy.integrate import quad

from qconic import _kernels as K


def test_horner_matches_naive_sum(rng):
    coeffs = rng.standard_normal(33) + 1j * rng.standard_normal(33)
    zs = 0.9 * np.exp(2j * np.pi * rng.random(64))
    naive = sum(coeffs[n] * zs**n for n in range(33))
    assert np.max(np.abs(K.horner_eval(coeffs, zs) - naive)) < 1e-13


def test_horner_scalar_roundtrip():
    val = K.horner_eval([1.0, 2.0, 3.0], 0.5j)
    assert isinstance(val, complex)
    assert abs(val - (1 + 2 * 0.5j + 3 * (0.5j) ** 2)) < 1e-15


def test_agm_matches_quadrature():
    for t in (0.1, 0.3, 0.5, 0.7, 0.9):
        ref = quad(lambda th: 1.0 / math.sqrt(1 - (t * math.sin(th)) ** 2),
                   0.0, math.pi / 2)[0]
        assert abs(K.agm_k(t) - ref) < 1e-10


def test_carlson_rf_matches_mpmath(rng):
    cases = [
        (0.5 + 0.0j, 1.0 + 0.0j, 2.0 + 0.0j),
        (0.0 + 0.0j, 0.75 + 0.0j, 1.0 + 0.0j),
        (-0.5 + 0.3j, 1.2 + 0.0j, 1.0 + 0.0j),
        (1e-10 + 0.0j, 2.0 + 0.0j, 3.0 + 0.0j),
    ]
    for _ in range(30):
        w = (rng.random() * 2 - 1) * 1.8 + 1j * (rng.random() * 2 - 1) * 0.9
        cases.append((1 - w * w, 1 - (0.4 * w) ** 2, 1.0 + 0.0j))
    for x, y, z in cases:
        if x.real < 0 and abs(x.imag) < 1e-300:
            continue  # on-cut case handled separately
        mine = K.carlson_rf(x, y, z)
        ref = complex(mpmath.elliprf(x, y, z))
        assert abs(mine - ref) < 1e-12 * max(1.0, abs(ref))


def test_carlson_rf_on_cut_takes_upper_limit():
    # numpy principal sqrt maps -a+0j to +i sqrt(a): the value on the cut
    # must be the limit from above
    mine = K.carlson_rf(-0.7756 + 0.0j, 0.9 + 0.0j, 1.0 + 0.0j)
    ref = complex(mpmath.elliprf(mpmath.mpc(-0.7756, 1e-14), 0.9, 1.0))
    assert abs(mine - ref) < 1e-10


def test_both_paths_agree(rng):
    if not K._HAVE_NUMBA:
        pytest.skip("numba unavailable")
    coeffs = rng.standard_normal(20) + 1j * rng.standard_normal(20)
    zs = np.ascontiguousarray(0.8 * np.exp(2j * np.pi * rng.random(257)))
    a = K.horner_eval_numpy(coeffs, zs)
    b = K.horner_eval_numba(np.ascontiguousarray(coeffs), zs)
    assert np.max(np.abs(a - b)) < 1e-14

    ts = np.ascontiguousarray(rng.uniform(0.01, 0.99, 129))
    assert np.max(np.abs(K.agm_k_numpy(ts) - K.agm_k_numba(ts))) < 1e-14

    w = np.ascontiguousarray(
        1.8 * (rng.random(65) - 0.5) + 0.9j * (rng.random(65) - 0.5)
    )
    x = np.ascontiguousarray(1 - w * w)
    y = np.ascontiguousarray(1 - (0.3 * w) ** 2)
    z = np.ones(65, complex)
    a = K.carlson_rf_numpy(x, y, z)
    b = K.carlson_rf_numba(x, y, z)
    assert np.max(np.abs(a - b)) < 1e-13
