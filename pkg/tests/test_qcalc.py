import math

import numpy as np
import pytest

from qconic import series as ts
from qconic.qcalc import (
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


@pytest.fixture
def ctx5():
    return QContext(0.5)


class TestBracket:
    def test_identity_cases(self, ctx5):
        assert q_bracket(1, ctx5) == 1.0
        assert q_bracket(0, ctx5) == 0.0

    def test_direct_evaluation(self, ctx5):
        # (1 - 0.25)/(1 - 0.5)
        assert abs(q_bracket(2, ctx5) - 1.5) < 1e-15

    def test_cached_recursion(self, ctx5):
        for n in range(1, 40):
            assert abs(q_bracket(n, ctx5) - (1 + 0.5 * q_bracket(n - 1, ctx5))) < 1e-14

    def test_classical_limit(self):
        # n - [n]_q = sum_{j<n} (1-q^j) <= (1-q) n(n-1)/2 exactly, which
        # exceeds 5e-3 for n > 10 at q = 0.9999
        ctx = QContext(0.9999)
        for n in range(1, 11):
            assert abs(q_bracket(n, ctx) - n) < 5e-3
        for n in range(1, 21):
            assert abs(q_bracket(n, ctx) - n) <= 1e-4 * n * (n - 1) / 2 + 1e-12

    def test_rejects_negative(self, ctx5):
        with pytest.raises(ValueError):
            q_bracket(-1, ctx5)


class TestFactorial:
    def test_empty_product(self, ctx5):
        assert q_factorial(0, ctx5) == 1.0

    def test_two(self, ctx5):
        assert abs(q_factorial(2, ctx5) - 1.5) < 1e-15

    def test_three(self, ctx5):
        # [3]_q [2]_q [1]_q = 1.75 * 1.5 * 1
        assert abs(q_factorial(3, ctx5) - 2.625) < 1e-15

    def test_beyond_cache(self):
        ctx = QContext(0.5, cache_degree=4)
        ref = 1.0
        for j in range(1, 9):
            ref *= (1 - 0.5**j) / 0.5
        assert abs(q_factorial(8, ctx) - ref) < 1e-12 * ref


class TestGamma:
    def test_at_one(self, ctx5):
        assert q_gamma(1.0, ctx5) == 1.0

    def test_integer_collapses_to_factorial(self, ctx5):
        for n in range(1, 10):
            assert q_gamma(n + 1.0, ctx5) == q_factorial(n, ctx5)

    def test_recurrence_non_integer(self):
        ctx = QContext(0.9)
        v = q_gamma(0.5, ctx)
        assert abs(q_gamma(1.5, ctx) - q_bracket(0.5, ctx) * v) < 1e-12

    def test_recurrence_random_arguments(self, rng):
        ctx = QContext(0.9)
        for x in rng.uniform(0.01, 10.0, 100):
            lhs = q_gamma(x + 1.0, ctx)
            rhs = q_bracket(x, ctx) * q_gamma(x, ctx)
            assert abs(lhs - rhs) < 1e-11 * abs(rhs)

    def test_classical_limit(self):
        ctx = QContext(0.9999)
        assert abs(q_gamma(0.5, ctx) - math.sqrt(math.pi)) < 1e-2

    def test_domain_error(self, ctx5):
        with pytest.raises(ValueError):
            q_gamma(0.0, ctx5)
        with pytest.raises(ValueError):
            q_gamma(-1.5, ctx5)


class TestBeta:
    def test_unit(self, ctx5):
        assert abs(q_beta(1.0, 1.0, ctx5) - 1.0) < 1e-15

    def test_recurrence_value(self, ctx5):
        # Gamma_q(3) = [2]_q Gamma_q(2) so B_q(2,1) = 1/[2]_q
        assert abs(q_beta(2.0, 1.0, ctx5) - 2.0 / 3.0) < 1e-15

    def test_classical_limit(self):
        ctx = QContext(0.999)
        assert abs(q_beta(0.5, 0.5, ctx) - math.pi) < 1e-2

    def test_domain_error(self, ctx5):
        with pytest.raises(ValueError):
            q_beta(-1.0, 2.0, ctx5)


class TestBinomial:
    def test_edges(self, ctx5):
        for n in range(8):
            assert q_binomial(n, 0, ctx5) == 1.0
            assert q_binomial(n, n, ctx5) == 1.0

    def test_middle(self, ctx5):
        assert abs(q_binomial(2, 1, ctx5) - 1.5) < 1e-15

    def test_rejects_k_above_n(self, ctx5):
        with pytest.raises(ValueError):
            q_binomial(2, 3, ctx5)


class TestDerivativeSeries:
    def test_identity(self, ctx5):
        d = q_derivative_series(ts.identity(4), ctx5)
        assert np.allclose(d.coeffs, [1, 0, 0, 0])

    def test_monomial(self, ctx5):
        for n in range(1, 8):
            d = q_derivative_series(ts.monomial(n, 8), ctx5)
            expect = np.zeros(8, complex)
            expect[n - 1] = q_bracket(n, ctx5)
            assert np.allclose(d.coeffs, expect)

    def test_bracket_table_example(self, ctx5):
        f = ts.from_coeffs([0, 1, 1], degree=2)
        d = q_derivative_series(f, ctx5)
        assert np.allclose(d.coeffs, [1.0, 1.5])

    def test_degree_drops(self, ctx5):
        assert q_derivative_series(ts.identity(6), ctx5).degree == 5

    def test_linearity(self, ctx5, rng):
        a = complex(rng.standard_normal(), rng.standard_normal())
        b = complex(rng.standard_normal(), rng.standard_normal())
        f = ts.TruncatedSeries(rng.standard_normal(9) + 1j * rng.standard_normal(9))
        g = ts.TruncatedSeries(rng.standard_normal(9) + 1j * rng.standard_normal(9))
        lhs = q_derivative_series(ts.add(ts.scale(f, a), ts.scale(g, b)), ctx5)
        rhs = ts.add(
            ts.scale(q_derivative_series(f, ctx5), a),
            ts.scale(q_derivative_series(g, ctx5), b),
        )
        assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) < 1e-12


class TestDerivativePoint:
    def test_identity(self, ctx5):
        assert q_derivative_point(lambda z: z, 0.3 + 0.1j, ctx5) == 1.0

    def test_square(self, ctx5):
        # (1 - 0.25)/0.5 at z = 1
        val = q_derivative_point(lambda z: z * z, 1.0, ctx5)
        assert abs(val - 1.5) < 1e-15

    def test_zero_needs_configured_value(self, ctx5):
        with pytest.raises(ValueError):
            q_derivative_point(lambda z: z, 0.0, ctx5)
        assert q_derivative_point(lambda z: z, 0.0, ctx5, derivative_at_zero=1.0) == 1.0

    def test_agrees_with_series_route(self, ctx5, rng):
        for _ in range(20):
            f = ts.TruncatedSeries(
                rng.standard_normal(33) + 1j * rng.standard_normal(33)
            )
            d = q_derivative_series(f, ctx5)
            for z in 0.9 * np.exp(2j * np.pi * rng.random(5)):
                a = q_derivative_point(lambda w: ts.evaluate(f, w), z, ctx5)
                assert abs(a - ts.evaluate(d, z)) < 1e-12 * max(1.0, abs(a))

    def test_product_rule(self, ctx5, rng):
        # D_q(fg)(z) = f(qz) (D_q g)(z) + g(z) (D_q f)(z)
        for _ in range(10):
            f = ts.TruncatedSeries(rng.standard_normal(9) + 1j * rng.standard_normal(9))
            g = ts.TruncatedSeries(rng.standard_normal(9) + 1j * rng.standard_normal(9))
            fg = ts.multiply(f.pad(16), g.pad(16))
            for z in 0.9 * np.exp(2j * np.pi * rng.random(4)):
                lhs = q_derivative_point(lambda w: ts.evaluate(fg, w), z, ctx5)
                rhs = ts.evaluate(f, 0.5 * z) * q_derivative_point(
                    lambda w: ts.evaluate(g, w), z, ctx5
                ) + ts.evaluate(g, z) * q_derivative_point(
                    lambda w: ts.evaluate(f, w), z, ctx5
                )
                assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))


class TestJacksonIntegral:
    def test_constant(self, ctx5):
        out = jackson_integral_series(ts.one(0), ctx5)
        assert np.allclose(out.coeffs, [0, 1])

    def test_monomial(self, ctx5):
        for n in range(6):
            out = jackson_integral_series(ts.monomial(n, n), ctx5)
            assert abs(out.coeffs[n + 1] - 1.0 / q_bracket(n + 1, ctx5)) < 1e-15

    def test_left_inverse_of_derivative(self, ctx5, rng):
        c = rng.standard_normal(12) + 1j * rng.standard_normal(12)
        c[0] = 0.0
        f = ts.TruncatedSeries(c)
        back = jackson_integral_series(q_derivative_series(f, ctx5), ctx5)
        assert np.max(np.abs(back.coeffs - f.coeffs)) < 1e-14


def test_context_rejects_bad_q():
    for q in (0.0, 1.0, -0.2, 1.7):
        with pytest.raises(ValueError):
            QContext(q)
