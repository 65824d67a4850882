# Copyright 2024 The qtrig developers

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Tests for the Jackson derivative and integral and the rules of q-calculus."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtrig.math.qcore import q_integer
from qtrig.special.qcalculus import (
    DERIVATIVE_SUITE_TOLERANCE,
    Evaluable,
    QuadratureConfig,
    fundamental_theorem_check,
    integration_by_parts_residual,
    jackson_derivative,
    jackson_integral,
    monomial_derivative,
    product_rule_residual,
    q_derivative,
    qtrig_derivative_suite,
    quotient_rule_residual,
)
from qtrig.special.qfunctions import QFunctionHandle, cos_q, sin_q
from qtrig.utils.errors import DomainError, NonConvergentError, PoleError

from ..random import positive_unit, q_value

t = Evaluable.monomial(1)


class TestEvaluable:
    """Tests the Evaluable class"""

    def test_algebra(self):
        f = Evaluable.monomial(2) + 1
        assert f(2.0) == 5
        assert (f * f)(1.0) == 4
        assert (f / f)(3.0) == 1
        assert (1 - f)(0.0) == 0
        assert (2 * f - f)(1.0) == 2
        assert (-f)(1.0) == -2
        assert (3 / f)(1.0) == 1.5
        assert Evaluable.constant(2j)(10.0) == 2j
        assert Evaluable.monomial(3, 2.0)(2.0) == 16

    def test_scaled(self):
        f = Evaluable(lambda x: x, domain_radius=2.0).scaled(0.5)
        assert f(3.0) == 1.5
        assert f.domain_radius == 4.0

    def test_domain(self):
        bounded = Evaluable(lambda x: x, domain_radius=1.0, name="id")
        with pytest.raises(DomainError):
            bounded(1.5)
        assert (bounded + Evaluable(lambda x: x, domain_radius=3.0)).domain_radius == 1.0
        assert (bounded + 1).domain_radius == 1.0
        assert repr(bounded + 1) == "Evaluable((id + (1+0j)))"
        with pytest.raises(ValueError):
            Evaluable(lambda x: x, domain_radius=0.0)
        with pytest.raises(ValueError):
            Evaluable.monomial(-1)

    def test_division_by_zero(self):
        with pytest.raises(PoleError):
            (1 / t)(0.0)


class TestDerivative:
    """Tests the Jackson derivative"""

    @given(q_value, st.integers(min_value=0, max_value=10), positive_unit)
    def test_monomials(self, q, n, x):
        r"""D_q t^n = [n]_q x^{n-1}."""
        derivative = jackson_derivative(Evaluable.monomial(n), x, q)
        expected = monomial_derivative(n, x, q)
        assert abs(derivative - expected) <= 1e-12 * max(1.0, abs(expected))

    def test_closed_forms(self):
        assert monomial_derivative(0, 2.0, 0.5) == 0
        assert monomial_derivative(3, 2.0, 0.5) == pytest.approx(7.0)
        assert q_derivative(Evaluable.monomial(3), 0.5)(2.0) == pytest.approx(7.0)

    def test_origin(self):
        with pytest.raises(DomainError):
            jackson_derivative(t, 0.0, 0.5)

    @pytest.mark.parametrize("x", [0.3, 1.0, 1.6])
    def test_near_one(self, x):
        r"""D_q t^3 tends to 3 x^2 as q tends to 1."""
        derivative = jackson_derivative(Evaluable.monomial(3), x, 1 - 1e-6)
        assert abs(derivative - 3 * x**2) <= 1e-5 * x**2

    @given(q_value, positive_unit)
    def test_exponential(self, q, x):
        r"""D_q e_q(x/2) = e_q(x/2)/2."""
        exponential = QFunctionHandle("e_q", q).as_evaluable().scaled(0.5)
        derivative = jackson_derivative(exponential, x, q)
        assert abs(derivative - 0.5 * exponential(x)) <= 1e-9 * max(1.0, abs(exponential(x)))

    @given(q_value, positive_unit, st.floats(-2, 2), st.floats(-2, 2))
    def test_linearity(self, q, x, a, b):
        f, g = Evaluable.monomial(3), Evaluable.monomial(2) + 1
        combined = jackson_derivative(a * f + b * g, x, q)
        separate = a * jackson_derivative(f, x, q) + b * jackson_derivative(g, x, q)
        assert combined == pytest.approx(separate, abs=1e-12)


class TestIntegral:
    """Tests the Jackson integral"""

    @pytest.mark.parametrize("q", [0.3, 0.5, 0.9])
    @pytest.mark.parametrize("x", [0.25, 1.0, 1.75])
    def test_monomials(self, q, x):
        r"""The integral of t^n from 0 to x is x^{n+1}/[n+1]_q."""
        for n in range(9):
            result = jackson_integral(Evaluable.monomial(n), x, q)
            expected = x ** (n + 1) / q_integer(n + 1, q)
            assert abs(result.value - expected) <= 1e-10 * max(1.0, expected)
            assert abs(result.value - expected) <= result.error_estimate + 1e-13

    def test_tail_tolerance(self):
        r"""A hundredfold smaller tail tolerance shrinks the error of \int_0^1 1 d_q t tenfold."""
        one = Evaluable.constant(1.0)
        loose = jackson_integral(one, 1.0, 0.9, QuadratureConfig(tail_tol=1e-8))
        tight = jackson_integral(one, 1.0, 0.9, QuadratureConfig(tail_tol=1e-10))
        assert abs(tight.value - 1) * 10 <= abs(loose.value - 1)
        assert abs(loose.value - 1) <= loose.error_estimate + 1e-13
        assert tight.terms_used > loose.terms_used

    @given(q_value, positive_unit, st.floats(-2, 2), st.floats(-2, 2))
    def test_linearity(self, q, x, a, b):
        f, g = Evaluable.monomial(3), Evaluable.monomial(2) + 1
        combined = jackson_integral(a * f + b * g, x, q).value
        separate = a * jackson_integral(f, x, q).value + b * jackson_integral(g, x, q).value
        assert combined == pytest.approx(separate, abs=1e-11)

    def test_origin(self):
        result = jackson_integral(t, 0.0, 0.5)
        assert (result.value, result.error_estimate, result.terms_used) == (0, 0, 0)

    @pytest.mark.parametrize("x", [-0.5, 0.5j])
    def test_bad_limit(self, x):
        with pytest.raises(DomainError):
            jackson_integral(t, x, 0.5)

    def test_point_cap(self):
        with pytest.raises(NonConvergentError):
            jackson_integral(t, 1.0, 0.9, QuadratureConfig(max_points=8))

    @pytest.mark.parametrize(
        "changes",
        [{"tail_tol": 0.0}, {"max_points": 4}, {"tail_run": 0}, {"tail_run": 9, "max_points": 8}],
    )
    def test_config_validation(self, changes):
        with pytest.raises(ValueError):
            QuadratureConfig(**changes)


class TestRules:
    """Tests the fundamental theorem, product and quotient rules and integration by parts"""

    @pytest.mark.parametrize("x", [0.2, 0.7, 1.2])
    def test_fundamental_theorem(self, x):
        q = 0.5
        basket = [
            Evaluable.monomial(2),
            Evaluable.monomial(2) + 1,
            QFunctionHandle("sin_q", q).as_evaluable(),
            QFunctionHandle("cos_q", q).as_evaluable(),
        ]
        for f in basket:
            residual = fundamental_theorem_check(f, x, q)
            assert abs(residual.value) <= 1e-9
            assert residual.error_estimate >= 0

    def test_fundamental_theorem_without_origin(self):
        """Leaving out f(0) makes the residual -f(0)."""
        f = Evaluable.monomial(2) + 1
        for x in (0.1, 0.5, 1.0):
            residual = fundamental_theorem_check(f, x, 0.5, subtract_origin=False)
            assert abs(abs(residual.value) - 1) <= 1e-9

    @given(q_value, positive_unit)
    def test_product_and_quotient_rules(self, q, x):
        x = min(x, 0.9)
        sin = QFunctionHandle("sin_q", q).as_evaluable()
        cos = QFunctionHandle("cos_q", q).as_evaluable()
        assert abs(product_rule_residual(sin, cos, x, q)) <= 1e-9
        assert abs(product_rule_residual(Evaluable.monomial(2), t, x, q)) <= 1e-12
        assert abs(quotient_rule_residual(sin, cos, x, q)) <= 1e-9
        assert abs(quotient_rule_residual(Evaluable.monomial(2), t, x, q)) <= 1e-12

    def test_quotient_rule_pole(self):
        with pytest.raises(PoleError):
            quotient_rule_residual(t, t - 0.5, 0.5, 0.5)
        with pytest.raises(DomainError):
            product_rule_residual(t, t, 0.0, 0.5)

    @pytest.mark.parametrize("x", [0.3, 0.8])
    def test_integration_by_parts(self, x):
        q = 0.5
        sin = QFunctionHandle("sin_q", q).as_evaluable()
        cos = QFunctionHandle("cos_q", q).as_evaluable()
        for f, g in [(t, t), (1 + t, 1 + t), (sin, cos), (cos, sin)]:
            assert abs(integration_by_parts_residual(f, g, x, q)) <= 1e-9
        literal = integration_by_parts_residual(1 + t, 1 + t, x, q, subtract_origin=False)
        assert abs(abs(literal) - 1) <= 1e-9


class TestTrigonometricCalculus:
    """Tests the derivatives and integrals of the q-trigonometric functions"""

    def test_suite(self):
        reports = qtrig_derivative_suite(0.4, 0.5)
        assert [r.identity_id for r in reports] == [
            "calculus.dq_sin_q",
            "calculus.dq_cos_q",
            "calculus.dq_tan_q",
            "calculus.integral_sin_q",
            "calculus.integral_cos_q",
            "calculus.integral_tan_q",
        ]
        assert all(r.passed for r in reports)
        assert all(r.tolerance == DERIVATIVE_SUITE_TOLERANCE for r in reports)
        assert all(r.samples == 1 and r.argmax_input == 0.4 for r in reports)

    @pytest.mark.parametrize("q", [0.3, 0.5, 0.9])
    def test_suite_on_a_ray(self, q):
        for x in np.linspace(0.1, 1.0, 4):
            assert all(r.passed for r in qtrig_derivative_suite(x, q))

    def test_applicable_checks(self):
        at_origin = qtrig_derivative_suite(0.0, 0.5)
        assert [r.identity_id for r in at_origin] == [
            "calculus.integral_sin_q",
            "calculus.integral_cos_q",
            "calculus.integral_tan_q",
        ]
        negative = qtrig_derivative_suite(-0.4, 0.5)
        assert [r.identity_id.split(".")[1][:2] for r in negative] == ["dq"] * 3
        assert all(r.passed for r in negative + at_origin)

    def test_corrected_and_literal_integrals(self):
        r"""The integral of sin_q is 1 - cos_q, not -cos_q; the integral of cos_q is sin_q,
        not -sin_q."""
        q, x = 0.5, 0.4
        sin = QFunctionHandle("sin_q", q).as_evaluable()
        cos = QFunctionHandle("cos_q", q).as_evaluable()
        integral_sin = jackson_integral(sin, x, q).value
        integral_cos = jackson_integral(cos, x, q).value
        assert abs(integral_sin - (1 - cos_q(x, q).value)) <= 1e-8
        assert abs(integral_cos - sin_q(x, q).value) <= 1e-8
        assert abs(abs(integral_sin + cos_q(x, q).value) - 1) <= 1e-8
        literal_cos = abs(integral_cos + sin_q(x, q).value)
        assert abs(literal_cos - 2 * abs(sin_q(x, q).value)) <= 1e-8
