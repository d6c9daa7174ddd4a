"""Membership predicates for the uniformly-starlike and uniformly-convex
classes induced by the q-integral operator, plus the machinery that
manufactures class members: Schwarz-function recipes, subordinate
coefficient sequences, the coefficient recursion, and the sharp two-term
extremal polynomials.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import series as ts
from .conic import AccuracyError, ConicParams, conic_margin, extremal_coeffs
from .qcalc import q_bracket
from .qoperator import OperatorParams, apply_operator, weights
from .series import TruncatedSeries


@dataclass(frozen=True)
class ClassParams:
    conic: ConicParams
    op: OperatorParams


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid on the disc: concentric circles plus one angular
    refinement pass around the worst margin."""

    radii: tuple = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95)
    n_angles: int = 256
    refine_angles: int = 64
    tolerance: float = 1e-9

    def points(self):
        theta = 2.0 * math.pi * np.arange(self.n_angles) / self.n_angles
        ring = np.exp(1j * theta)
        return (np.asarray(self.radii)[:, None] * ring[None, :]).ravel()

    def refinement(self, witness):
        r = abs(witness)
        theta0 = math.atan2(witness.imag, witness.real)
        half = 2.0 * math.pi / self.n_angles
        theta = theta0 + np.linspace(-half, half, self.refine_angles)
        return r * np.exp(1j * theta)

    def capped(self, max_radius):
        """Grid confined to |z| <= max_radius (for truncated series whose
        tail is not trustworthy farther out)."""
        kept = tuple(r for r in self.radii if r <= max_radius)
        if len(kept) < 4:
            kept = tuple(max_radius * f for f in (0.3, 0.55, 0.8, 1.0))
        return GridSpec(
            radii=kept,
            n_angles=self.n_angles,
            refine_angles=self.refine_angles,
            tolerance=self.tolerance,
        )


STANDARD_GRID = GridSpec()


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    worst_margin: float
    witness: complex
    tail_estimate: float = 0.0


@dataclass(frozen=True)
class SubordinateFunction:
    """Coefficients c_1..c_N of a function subordinate to the extremal map
    (p(z) = 1 + sum c_n z^n), plus the Schwarz recipe that built it."""

    c: np.ndarray
    provenance: str


@dataclass(frozen=True)
class SchwarzSpec:
    """Recipe for a Schwarz function w (analytic self-map of the disc,
    w(0) = 0):

    - ``rotation``: w = lam * z with |lam| = 1
    - ``power``:    w = lam * z^power with |lam| <= 1
    - ``mobius``:   w = z (z + lam)/(1 + lam z) with real lam in [0, 1]
    - ``blaschke``: w = z * prod_j (z + f_j)/(1 + conj(f_j) z), |f_j| <= 1
    """

    kind: str
    lam: complex = 1.0
    power: int = 2
    factors: tuple = ()


def _blaschke_factor_series(lam, N):
    # (z + lam)/(1 + conj(lam) z) = lam + (1 - |lam|^2) sum (-conj(lam))^(j-1) z^j
    c = np.zeros(N + 1, dtype=np.complex128)
    c[0] = lam
    lc = np.conj(lam)
    coef = 1.0 - abs(lam) ** 2
    for j in range(1, N + 1):
        c[j] = coef
        coef *= -lc
    return TruncatedSeries(c)


def schwarz_series(recipe, N):
    """Truncated series of the Schwarz function described by ``recipe``."""
    if recipe.kind == "rotation":
        if abs(abs(recipe.lam) - 1.0) > 1e-12:
            raise ValueError("rotation recipe needs |lam| = 1")
        return ts.monomial(1, N, recipe.lam)
    if recipe.kind == "power":
        if abs(recipe.lam) > 1.0 + 1e-12:
            raise ValueError("power recipe needs |lam| <= 1")
        if not 1 <= recipe.power <= N:
            raise ValueError("power exponent out of range")
        return ts.monomial(recipe.power, N, recipe.lam)
    if recipe.kind == "mobius":
        lam = recipe.lam
        if abs(lam.imag) > 1e-14 or not 0.0 <= lam.real <= 1.0:
            raise ValueError("mobius recipe needs real lam in [0, 1]")
        numer = ts.add(ts.monomial(2, N), ts.monomial(1, N, lam.real))
        return ts.multiply(numer, _geometric(-lam.real, N))
    if recipe.kind == "blaschke":
        if not recipe.factors:
            raise ValueError("blaschke recipe needs at least one factor")
        if any(abs(a) > 1.0 + 1e-12 for a in recipe.factors):
            raise ValueError("blaschke factors must have modulus <= 1")
        w = ts.identity(N)
        for a in recipe.factors:
            w = ts.multiply(w, _blaschke_factor_series(complex(a), N))
        _check_schwarz_samples(recipe, N)
        return w
    raise ValueError(f"unknown Schwarz recipe kind: {recipe.kind!r}")


def _geometric(ratio, N):
    # 1/(1 - ratio*z)
    return TruncatedSeries(np.asarray(ratio, complex) ** np.arange(N + 1))


def _check_schwarz_samples(recipe, N, samples=512):
    theta = 2.0 * math.pi * np.arange(samples) / samples
    z = np.exp(1j * theta)
    w = z.copy()
    for a in recipe.factors:
        a = complex(a)
        w = w * (z + a) / (1.0 + np.conj(a) * z)
    if np.max(np.abs(w)) > 1.0 + 1e-9:
        raise ValueError("blaschke recipe leaves the unit disc")


_COEFF_CACHE = {}


def _cached_extremal_coeffs(conic_params, N):
    key = (conic_params.k, conic_params.gamma, N)
    if key not in _COEFF_CACHE:
        _COEFF_CACHE[key] = extremal_coeffs(conic_params, N)
    return _COEFF_CACHE[key]


def make_subordinate(recipe, conic_params, N):
    """Compose the extremal map with a Schwarz recipe and return the
    coefficients of the resulting subordinate function.

    The composed coefficients are asserted against the Rogosinski bound
    |c_n| <= P_1 (within 1e-9); a violation means the recipe or the
    extraction went wrong, so it raises rather than returning bad data.
    """
    w = schwarz_series(recipe, N)
    P = _cached_extremal_coeffs(conic_params, N)
    outer = TruncatedSeries(np.concatenate(([1.0], P.P)))
    comp = ts.compose(outer, w)
    c = comp.coeffs[1:].copy()
    worst = float(np.max(np.abs(c)))
    if worst > P.P1 + 1e-9:
        raise AccuracyError(
            f"subordinate coefficient {worst:.12f} exceeds bound {P.P1:.12f}"
        )
    return SubordinateFunction(c=c, provenance=repr(recipe))


def generate_member(sub, params, N):
    """Solve ([n]_q - 1) psi_n a_n = sum_{j<n} psi_j a_j c_{n-j} forward.

    Returns the truncated class member whose operator-transformed
    logarithmic q-derivative ratio has the chosen subordinate expansion.
    """
    if sub.c.size < N - 1:
        raise ValueError("subordinate sequence too short for requested degree")
    ctx = params.op.ctx
    psi = weights(params.op, N).psi
    a = np.zeros(N + 1, dtype=np.complex128)
    a[1] = 1.0
    for n in range(2, N + 1):
        forcing = np.dot(psi[:n - 1] * a[1:n], sub.c[n - 2 :: -1][: n - 1])
        a[n] = forcing / ((q_bracket(n, ctx) - 1.0) * psi[n - 1])
    return TruncatedSeries(a)


def sharp_function(n, params, degree=None):
    """Two-term polynomial attaining equality in the sufficient
    coefficient condition: z - (1-gamma)/((W_n) psi_n) z^n where
    W_n = [n]_q (k+1) - (k+gamma)."""
    if n < 2:
        raise ValueError("sharp function index must be >= 2")
    if degree is not None and n > degree:
        raise ValueError("sharp index exceeds requested degree")
    k, g = params.conic.k, params.conic.gamma
    ctx = params.op.ctx
    psi_n = weights(params.op, n).psi_n(n)
    W = q_bracket(n, ctx) * (k + 1.0) - (k + g)
    out = np.zeros((degree or n) + 1, dtype=np.complex128)
    out[1] = 1.0
    out[n] = -(1.0 - g) / (W * psi_n)
    return TruncatedSeries(out)


def alexander_transform(F, ctx):
    """z times the q-derivative, as a series: coefficient n -> [n]_q a_n."""
    if not F.is_normalized:
        raise ValueError("transform input must be normalized")
    n = np.arange(F.degree + 1, dtype=np.float64)
    brackets = (1.0 - ctx.q**n) / (1.0 - ctx.q)
    out = F.coeffs * brackets
    return TruncatedSeries(out)


def trust_radius(f, tol=1e-9, max_radius=0.95):
    """Largest radius at which the truncated tail of ``f`` is numerically
    negligible (geometric extrapolation of the trailing coefficients).
    True polynomials (zero trailing coefficients) get ``max_radius``."""
    N = f.degree
    a_top = abs(f.coeffs[-1])
    if a_top == 0.0:
        return max_radius
    lead = abs(f.coeffs[max(1, N - 5)])
    rho = (a_top / lead) ** (1.0 / min(5, N - 1)) if lead > 0 else 1.0
    rho = max(rho, 1.0)

    def tail(r):
        x = rho * r
        if x >= 1.0:
            return math.inf
        return a_top * r**N * x / (1.0 - x)

    lo, hi = 1e-3, max_radius
    if tail(hi) <= tol:
        return hi
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if tail(mid) <= tol:
            lo = mid
        else:
            hi = mid
    return lo


def _tail_estimate(f, radius):
    a_top = abs(f.coeffs[-1])
    if a_top == 0.0 or radius >= 1.0:
        return 0.0
    return float(a_top * radius ** (f.degree + 1) / (1.0 - radius))


def _worst_margin(P_of, grid):
    zs = grid.points()
    margins = P_of(zs)
    idx = int(np.argmin(margins))
    worst, witness = float(margins[idx]), complex(zs[idx])
    refine = grid.refinement(witness)
    margins_r = P_of(refine)
    idx = int(np.argmin(margins_r))
    if margins_r[idx] < worst:
        worst, witness = float(margins_r[idx]), complex(refine[idx])
    return worst, witness


def starlike_membership(f, params, grid=STANDARD_GRID):
    """Check Re P > k|P - 1| + gamma on the grid, where P is the ratio of
    z times the q-derivative of the operator image to the image itself."""
    F = apply_operator(f, params.op)
    q = params.op.ctx.q

    def margins(zs):
        Fz = ts.evaluate(F, zs)
        Fqz = ts.evaluate(F, q * zs)
        with np.errstate(divide="ignore", invalid="ignore"):
            P = (Fz - Fqz) / ((1.0 - q) * Fz)
            m = conic_margin(P, params.conic)
        if np.any(np.isnan(m)):
            raise ZeroDivisionError("operator image vanishes on the grid")
        return np.nan_to_num(m, neginf=-1e300, posinf=1e300)

    worst, witness = _worst_margin(margins, grid)
    return MembershipVerdict(
        member=worst > -grid.tolerance,
        worst_margin=worst,
        witness=witness,
        tail_estimate=_tail_estimate(f, max(grid.radii)),
    )


def convex_membership(f, params, grid=STANDARD_GRID):
    """Check Re(1 + Q) > k|Q| + gamma with Q = q z D_q^2 F / D_q F, the
    iterated pointwise q-derivative of the operator image."""
    F = apply_operator(f, params.op)
    q = params.op.ctx.q

    def margins(zs):
        Fz = ts.evaluate(F, zs)
        Fqz = ts.evaluate(F, q * zs)
        Fqqz = ts.evaluate(F, q * q * zs)
        with np.errstate(divide="ignore", invalid="ignore"):
            d1 = (Fz - Fqz) / ((1.0 - q) * zs)
            d1q = (Fqz - Fqqz) / ((1.0 - q) * q * zs)
            d2 = (d1 - d1q) / ((1.0 - q) * zs)
            Q = q * zs * d2 / d1
            m = conic_margin(1.0 + Q, params.conic)
        if np.any(np.isnan(m)):
            raise ZeroDivisionError("q-derivative vanishes on the grid")
        return np.nan_to_num(m, neginf=-1e300, posinf=1e300)

    worst, witness = _worst_margin(margins, grid)
    return MembershipVerdict(
        member=worst > -grid.tolerance,
        worst_margin=worst,
        witness=witness,
        tail_estimate=_tail_estimate(f, max(grid.radii)),
    )
