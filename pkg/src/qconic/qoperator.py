"""The generalized q-integral operator in multiplier form, its weight
sequence, and the defining Jackson-sum integral form used as a cross-check.

The operator acts on a disc-normalized series by scaling coefficient n
with psi_n = [G_q(beta+n)/G_q(alpha+beta+n)] * [G_q(alpha+beta+1)/G_q(beta+1)],
where G_q is the q-gamma function. At alpha = 1 this is the q-Bernardi
operator with weights [1+beta]_q/[n+beta]_q, and as q -> 1 with alpha = 1,
beta = 0 it degenerates to the Alexander operator with weights 1/n.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .conic import ConvergenceError
from .qcalc import QContext, q_bracket, q_gamma
from .series import TruncatedSeries


@dataclass(frozen=True)
class OperatorParams:
    alpha: float
    beta: float
    ctx: QContext

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.beta <= -1:
            raise ValueError("beta must exceed -1")


@dataclass(frozen=True)
class OperatorWeights:
    """Multipliers psi_1..psi_N; psi[0] is psi_1 = 1."""

    psi: np.ndarray

    def psi_n(self, n):
        return float(self.psi[n - 1])


def _integer_alpha(alpha):
    rounded = round(alpha)
    return rounded if abs(alpha - rounded) < 1e-12 and rounded >= 1 else None


def weights(params, N):
    """Weight table psi_1..psi_N.

    Integer alpha telescopes the gamma quotients into exact bracket
    products; non-integer alpha falls back to q-gamma ratios.
    """
    if N < 1:
        raise ValueError("need at least one weight")
    ctx, alpha, beta = params.ctx, params.alpha, params.beta
    psi = np.empty(N, dtype=np.float64)
    psi[0] = 1.0
    a_int = _integer_alpha(alpha)
    if a_int is not None:
        numer = 1.0
        for j in range(1, a_int + 1):
            numer *= q_bracket(beta + j, ctx)
        for n in range(2, N + 1):
            denom = 1.0
            for j in range(a_int):
                denom *= q_bracket(beta + n + j, ctx)
            psi[n - 1] = numer / denom
    else:
        scale = q_gamma(alpha + beta + 1.0, ctx) / q_gamma(beta + 1.0, ctx)
        for n in range(2, N + 1):
            psi[n - 1] = scale * q_gamma(beta + n, ctx) / q_gamma(
                alpha + beta + n, ctx
            )
    return OperatorWeights(psi=psi)


def apply_operator(f, params):
    """Multiplier form: coefficient n of the output is psi_n * a_n."""
    if not f.is_normalized:
        raise ValueError("operator input must be normalized (a0=0, a1=1)")
    w = weights(params, f.degree)
    out = f.coeffs.copy()
    out[1:] = out[1:] * w.psi
    return TruncatedSeries(out)


def apply_operator_integral_form(f, params, z, tol=1e-16, max_terms=10**5):
    """Jackson-sum evaluation of the defining q-integral at a point.

    Restricted to integer alpha, where the q-shifted power collapses to
    the finite product prod_{i=1}^{alpha-1} (1 - q^(j+i)) inside the sum;
    the z^beta prefactor cancels exactly against the integrand, so no
    complex powers arise. Agrees with evaluating the multiplier form.
    """
    a_int = _integer_alpha(params.alpha)
    if a_int is None:
        raise ValueError("integral form requires a positive integer alpha")
    ctx, beta = params.ctx, params.beta
    q = ctx.q
    pref = (
        q_gamma(a_int + beta + 1.0, ctx)
        / (q_gamma(beta + 1.0, ctx) * q_gamma(float(a_int) + 1.0, ctx))
        * q_bracket(a_int, ctx)
        * (1.0 - q)
    )
    z = complex(z)
    total = 0.0 + 0.0j
    block = 512
    j0 = 0
    while j0 < max_terms:
        jj = np.arange(j0, j0 + block, dtype=np.float64)
        qj = q**jj
        shifted = np.ones(block, dtype=np.float64)
        for i in range(1, a_int):
            shifted *= 1.0 - qj * q**i
        fvals = _kernels.horner_eval(f.coeffs, z * qj)
        terms = qj**beta * shifted * fvals
        total += complex(np.sum(terms))
        if np.max(np.abs(terms)) <= tol * max(abs(total), 1e-300):
            return pref * total
        j0 += block
    raise ConvergenceError("Jackson sum did not converge within term budget")


def classical_weight(alpha, beta, n):
    """q -> 1 limit of psi_n via ordinary gamma functions."""
    return math.exp(
        math.lgamma(beta + n)
        - math.lgamma(alpha + beta + n)
        + math.lgamma(alpha + beta + 1.0)
        - math.lgamma(beta + 1.0)
    )
