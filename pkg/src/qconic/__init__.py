"""q-integral operators on the unit disc, conic-domain extremal maps, and
verification of the coefficient inequalities they induce on k-uniformly
starlike function classes."""

from .conic import (
    ConicCoefficients,
    ConicParams,
    boundary_curve,
    closed_form_P1,
    closed_form_P2,
    extremal_coeffs,
    extremal_eval,
    in_conic_domain,
    legendre_K,
    solve_modulus,
)
from .membership import (
    ClassParams,
    GridSpec,
    MembershipVerdict,
    SchwarzSpec,
    SubordinateFunction,
    alexander_transform,
    convex_membership,
    generate_member,
    make_subordinate,
    sharp_function,
    starlike_membership,
)
from .qcalc import (
    QContext,
    jackson_integral_series,
    q_beta,
    q_binomial,
    q_bracket,
    q_derivative_point,
    q_derivative_series,
    q_factorial,
    q_gamma,
)
from .qoperator import (
    OperatorParams,
    OperatorWeights,
    apply_operator,
    apply_operator_integral_form,
    weights,
)
from .series import TruncatedSeries, compose, divide, evaluate, multiply
from .verify import VerificationReport, run_default_suite

__version__ = "0.1.0"
