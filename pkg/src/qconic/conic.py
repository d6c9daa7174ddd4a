"""Conic domains {u+iv : u > k*sqrt((u-1)^2+v^2) + gamma}: boundary curves,
membership margin, the conformal extremal map of the disc onto the domain,
its Taylor coefficients, and the Legendre elliptic machinery the ellipse
branch (k > 1) needs.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from . import _kernels


class AccuracyError(RuntimeError):
    """A computed quantity failed its internal consistency check."""


class ConvergenceError(RuntimeError):
    """An iteration exhausted its budget before reaching tolerance."""


# Smallest k reachable by cosh(pi*K'(t)/(4K(t))) with t a double < 1; below
# this the solver clamps t to the largest representable value.
_K_CLAMP_T = 1.0 - 1e-13


def legendre_K(t):
    """Complete elliptic integral of the first kind, modulus convention
    K(t) = int_0^{pi/2} dtheta / sqrt(1 - t^2 sin^2 theta), via the
    arithmetic-geometric mean."""
    if not 0.0 <= t < 1.0:
        raise ValueError("elliptic modulus must satisfy 0 <= t < 1")
    return _kernels.agm_k(t)


def legendre_K_complement(t):
    """K'(t) = K(sqrt(1 - t^2)); diverges as t -> 0 (raises there)."""
    if not 0.0 < t <= 1.0:
        raise ValueError("complementary integral needs 0 < t <= 1")
    return legendre_K(math.sqrt((1.0 - t) * (1.0 + t)))


def _log_modulus_ratio(t):
    """pi*K'(t)/(4K(t)), the quantity matched against arccosh(k)."""
    return math.pi * legendre_K_complement(t) / (4.0 * legendre_K(t))


def solve_modulus(k, tol=1e-10, max_iter=200):
    """Solve cosh(pi*K'(t)/(4K(t))) = k for the unique t in (0,1).

    The map t -> k is strictly decreasing, so a bracketing Brent solve on
    pi*K'/(4K) - arccosh(k) finds the root. For k closer to 1 than double
    precision can express (roughly k < 1.003, where the true t rounds to
    1.0), the largest representable t is returned instead.
    """
    if k <= 1.0:
        raise ValueError("modulus equation requires k > 1")
    target = math.acosh(k)

    def g(t):
        return _log_modulus_ratio(t) - target

    hi = _K_CLAMP_T
    if g(hi) > 0.0:
        return hi
    lo = 1e-4
    while g(lo) < 0.0:
        lo *= 1e-2
        if lo < 1e-300:
            raise ConvergenceError("failed to bracket the modulus equation")
    t = brentq(g, lo, hi, xtol=1e-16, rtol=8.9e-16, maxiter=max_iter)
    residual = abs(math.cosh(_log_modulus_ratio(t)) - k)
    if residual > tol:
        raise ConvergenceError(
            f"modulus residual {residual:.3e} exceeds tolerance {tol:.3e}"
        )
    return t


@dataclass(frozen=True)
class EllipticData:
    t: float
    K: float
    Kprime: float


@dataclass(frozen=True)
class ConicParams:
    """Cone opening k >= 0 and order gamma in [0,1); elliptic data for k>1."""

    k: float
    gamma: float
    elliptic: Optional[EllipticData] = None

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError("gamma must lie in [0, 1)")
        if self.k > 1.0 and self.elliptic is None:
            t = solve_modulus(self.k)
            data = EllipticData(
                t=t, K=legendre_K(t), Kprime=legendre_K_complement(t)
            )
            object.__setattr__(self, "elliptic", data)


@dataclass(frozen=True)
class ConicCoefficients:
    """Taylor coefficients P_1..P_N of the extremal map (P[0] is P_1)."""

    P: np.ndarray

    @property
    def P1(self):
        return float(self.P[0])

    @property
    def P2(self):
        return float(self.P[1])


def conic_margin(w, params):
    """Re w - k|w - 1| - gamma; positive exactly inside the domain."""
    w = np.asarray(w, dtype=np.complex128)
    return w.real - params.k * np.abs(w - 1.0) - params.gamma


def in_conic_domain(w, params):
    margin = conic_margin(w, params)
    if margin.ndim == 0:
        return bool(margin > 0.0)
    return margin > 0.0


def boundary_curve(params, m, v_max=3.0):
    """m boundary points (u-gamma)^2 = k^2 (u-1)^2 + k^2 v^2.

    For k <= 1 the branch through the vertex u = (k+gamma)/(k+1) is
    parameterized by v in [-v_max, v_max]; for k > 1 the full ellipse is
    swept by angle.
    """
    if m < 2:
        raise ValueError("need at least two sample points")
    k, g = params.k, params.gamma
    if k > 1.0:
        c = (k * k - g) / (k * k - 1.0)
        a = k * (1.0 - g) / (k * k - 1.0)
        b = (1.0 - g) / math.sqrt(k * k - 1.0)
        phi = np.linspace(0.0, 2.0 * math.pi, m)
        return (c + a * np.cos(phi)) + 1j * (b * np.sin(phi))
    v = np.linspace(-v_max, v_max, m)
    if k == 1.0:
        u = (1.0 - g * g + v * v) / (2.0 * (1.0 - g))
    else:
        root = k * np.sqrt((1.0 - g) ** 2 + v * v * (1.0 - k * k))
        u = ((g - k * k) + root) / (1.0 - k * k)
    return u + 1j * v


def _eval_halfplane(z, gamma):
    return (1.0 + (1.0 - 2.0 * gamma) * z) / (1.0 - z)


def _eval_hyperbolic(root_z, k, gamma):
    # cosh(A log u) written as (u^A + u^-A)/2 to dodge complex-cos rounding
    A = 2.0 / math.pi * math.acos(k)
    u = (1.0 + root_z) / (1.0 - root_z)
    uA = u**A
    wave = 0.5 * (uA + 1.0 / uA)
    return (1.0 - gamma) / (1.0 - k * k) * wave - (k * k - gamma) / (1.0 - k * k)


def _eval_parabolic(root_z, gamma):
    L = np.log((1.0 + root_z) / (1.0 - root_z))
    return 1.0 + 2.0 * (1.0 - gamma) / math.pi**2 * L * L


def _eval_elliptic(z, params):
    # sin((pi/2K) * F(w)) with F the incomplete first-kind integral in
    # Carlson form, F(w) = w R_F(1-w^2, 1-t^2 w^2, 1). Branch jumps of F
    # across w in (1, 1/t) flip F to 2K - F, which the sine absorbs, so
    # principal branches are safe everywhere on the disc.
    ell = params.elliptic
    st = math.sqrt(ell.t)
    u = (z - st) / (1.0 - st * z)
    w = u / st
    F = w * _kernels.carlson_rf(
        1.0 - w * w, 1.0 - (ell.t * w) * (ell.t * w), np.ones_like(w)
    )
    k, g = params.k, params.gamma
    wave = np.sin(math.pi / (2.0 * ell.K) * F)
    return (1.0 - g) / (k * k - 1.0) * wave + (k * k - g) / (k * k - 1.0)


def extremal_eval(z, params):
    """Value of the conformal map of the disc onto the conic domain."""
    zs = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    k = params.k
    if k == 0.0:
        vals = _eval_halfplane(zs, params.gamma)
    elif k < 1.0:
        vals = _eval_hyperbolic(np.sqrt(zs), k, params.gamma)
    elif k == 1.0:
        vals = _eval_parabolic(np.sqrt(zs), params.gamma)
    else:
        vals = _eval_elliptic(zs, params)
    if np.isscalar(z) or getattr(z, "ndim", 0) == 0:
        return complex(vals[0])
    return vals


def _dft_coefficients(params, N, r, samples):
    theta = 2.0 * math.pi * np.arange(samples) / samples
    zs = r * np.exp(1j * theta)
    vals = extremal_eval(zs, params)
    spec = np.fft.fft(vals)
    n = np.arange(N + 1)
    return spec[: N + 1] / (samples * r**n.astype(float))


def extremal_coeffs(params, N, r=0.75, check_r=0.85, samples=4096,
                    imag_tol=1e-8, agree_tol=1e-7):
    """Taylor coefficients P_1..P_N by discrete Fourier sums on |z| = r.

    A second extraction at ``check_r`` must agree within ``agree_tol``
    and imaginary parts must stay below ``imag_tol`` (the coefficients
    are real), otherwise an AccuracyError is raised.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("extraction radius must lie in (0, 1)")
    if N < 2:
        raise ValueError("need at least two coefficients")
    main = _dft_coefficients(params, N, r, samples)
    check = _dft_coefficients(params, N, check_r, samples)
    disagree = float(np.max(np.abs(main - check)))
    if disagree > agree_tol:
        raise AccuracyError(
            f"extractions at r={r} and r={check_r} differ by {disagree:.3e}"
        )
    worst_imag = float(np.max(np.abs(main.imag)))
    if worst_imag > imag_tol:
        raise AccuracyError(
            f"extracted coefficients have imaginary part {worst_imag:.3e}"
        )
    return ConicCoefficients(P=main.real[1:].copy())


def closed_form_P1(params):
    """First Taylor coefficient of the extremal map (closed form)."""
    k, g = params.k, params.gamma
    if k < 1.0:
        return 8.0 * (1.0 - g) * math.acos(k) ** 2 / (math.pi**2 * (1.0 - k * k))
    if k == 1.0:
        return 8.0 * (1.0 - g) / math.pi**2
    ell = params.elliptic
    t, K = ell.t, ell.K
    return math.pi**2 * (1.0 - g) / (
        4.0 * math.sqrt(t) * (1.0 + t) * K * K * (k * k - 1.0)
    )


def closed_form_P2(params):
    """Second Taylor coefficient of the extremal map (closed form)."""
    k = params.k
    P1 = closed_form_P1(params)
    if k < 1.0:
        A = 2.0 / math.pi * math.acos(k)
        return (A * A + 2.0) / 3.0 * P1
    if k == 1.0:
        return 2.0 / 3.0 * P1
    ell = params.elliptic
    t, K = ell.t, ell.K
    num = 4.0 * K * K * (t * t + 6.0 * t + 1.0) - math.pi**2
    return num / (24.0 * math.sqrt(t) * K * K * (1.0 + t)) * P1
