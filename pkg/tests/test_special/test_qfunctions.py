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


"""Tests for the q-exponentials, the q-trigonometric functions and the Daehee constant."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtrig.math.series import EvalConfig, evaluate
from qtrig.special.qfunctions import (
    FUNCTION_KINDS,
    DaeheeSequenceTerm,
    Eq_product,
    Eq_series,
    QFunctionHandle,
    cos_q,
    cot_q,
    csc_q,
    daehee_constant,
    daehee_sequence_term,
    eq_product,
    eq_series,
    fn_at_qsum,
    fn_at_scaled_qdiff,
    sec_q,
    series_spec,
    sin_q,
    tan_q,
)
from qtrig.utils.errors import DomainError, PoleError

from ..random import q_and_argument


class TestExponentials:
    """Tests e_q and E_q in their series and product forms"""

    def test_origin(self):
        for fn in (eq_series, eq_product, Eq_series, Eq_product):
            result = fn(0.0, 0.5)
            assert result.value == 1
            assert result.error_estimate == 0

    @given(q_and_argument(imaginary=True))
    def test_exponential_pair(self, sample):
        r"""e_q(z) E_q(-z) = 1 inside half the radius."""
        q, z = sample
        assert abs(eq_series(z, q).value * Eq_series(-z, q).value - 1) <= 1e-10

    @pytest.mark.parametrize("q", [0.3, 0.6, 0.9])
    def test_series_and_product_agree(self, q):
        """Checked over the whole sweep disk, |z| <= 1/(2(1 - q)), uncapped."""
        rng = np.random.default_rng(3)
        radius = 0.5 / (1 - q)
        zs = np.sqrt(rng.uniform(0, 1, 200)) * radius * np.exp(2j * np.pi * rng.uniform(0, 1, 200))
        for z in zs:
            assert abs(eq_series(z, q).value * Eq_series(-z, q).value - 1) <= 1e-10
            series, product = eq_series(z, q), eq_product(z, q)
            assert abs(series.value - product.value) <= 1e-10 * max(1.0, abs(series.value))
            big_series, big_product = Eq_series(z, q), Eq_product(z, q)
            assert abs(big_series.value - big_product.value) <= 1e-10 * max(
                1.0, abs(big_series.value)
            )

    def test_error_estimate_covers_the_product(self):
        series = eq_series(0.9, 0.5)
        assert abs(series.value - eq_product(0.9, 0.5).value) <= series.error_estimate + 1e-15

    def test_outside_the_disk(self):
        """The series is guarded; the product form continues e_q away from its poles."""
        with pytest.raises(DomainError):
            eq_series(1.95, 0.5)
        with pytest.raises(DomainError):
            sin_q(1.95j, 0.5)
        outside = eq_product(3.0, 0.5).value
        assert abs(outside * Eq_series(-3.0, 0.5).value - 1) <= 1e-12
        assert np.isfinite(Eq_series(10.0, 0.5).value)

    def test_product_pole(self):
        r"""e_q has poles at q^{-k}/(1-q)."""
        with pytest.raises(PoleError):
            eq_product(2.0, 0.5)
        with pytest.raises(PoleError):
            eq_product(4.0, 0.5)

    def test_series_spec(self):
        spec = series_spec("cos_q", 0.5)
        assert spec.radius_hint == 2.0
        assert spec.coefficient_at(1) == 0
        assert spec.coefficient_at(2) == pytest.approx(-1 / 1.5)
        assert series_spec("E_q", 0.5).radius_hint is None
        assert evaluate(series_spec("e_q", 0.5), 0.5).value == eq_series(0.5, 0.5).value
        with pytest.raises(ValueError):
            series_spec("tan_q", 0.5)


class TestTrigonometry:
    """Tests the q-trigonometric functions"""

    def test_origin(self):
        cos = cos_q(0.0, 0.5)
        assert cos.value == 1
        assert cos.error_estimate == 0
        assert cos.terms_used == 4
        assert sin_q(0.0, 0.5).value == 0
        assert tan_q(0.0, 0.5).value == 0
        assert sec_q(0.0, 0.5).value == 1

    @given(q_and_argument())
    def test_euler_formula(self, sample):
        q, x = sample
        e = eq_series(1j * x, q).value
        assert abs(e - (cos_q(x, q).value + 1j * sin_q(x, q).value)) <= 1e-10 * (1 + abs(e))

    def test_euler_formula_over_the_sweep_disk(self):
        rng = np.random.default_rng(5)
        qs = rng.uniform(0.1, 0.9, 1000)
        xs = rng.uniform(-1.0, 1.0, 1000) * 0.5 / (1 - qs)
        for q, x in zip(qs, xs):
            e = eq_series(1j * x, q).value
            assert abs(e - (cos_q(x, q).value + 1j * sin_q(x, q).value)) <= 1e-10 * (1 + abs(e))

    @given(q_and_argument())
    def test_parity(self, sample):
        q, x = sample
        assert sin_q(-x, q).value == pytest.approx(-sin_q(x, q).value, abs=1e-15)
        assert cos_q(-x, q).value == pytest.approx(cos_q(x, q).value, abs=1e-15)

    @given(q_and_argument())
    def test_quotients(self, sample):
        q, x = sample
        sin, cos = sin_q(x, q).value, cos_q(x, q).value
        if min(abs(sin), abs(cos)) < 1e-6:
            return
        assert tan_q(x, q).value == pytest.approx(sin / cos, rel=1e-14)
        assert sec_q(x, q).value == pytest.approx(1 / cos, rel=1e-14)
        assert csc_q(x, q).value == pytest.approx(1 / sin, rel=1e-14)
        assert cot_q(x, q).value == pytest.approx(cos / sin, rel=1e-14)
        assert tan_q(x, q).error_estimate >= 0

    def test_poles(self):
        with pytest.raises(PoleError):
            csc_q(0.0, 0.5)
        with pytest.raises(PoleError):
            cot_q(0.0, 0.5)
        with pytest.raises(PoleError):
            csc_q(1e-9, 0.5)
        assert csc_q(1e-9, 0.5, pole_tol=1e-12).value.real == pytest.approx(1e9, rel=1e-9)

    def test_classical_limit(self):
        """Near q = 1 the functions are close to the classical ones, and closer still nearer."""
        xs = np.linspace(-1, 1, 21)
        errors = {}
        for q in (1 - 1e-3, 1 - 1e-4):
            errors[q] = max(
                max(
                    abs(sin_q(x, q).value - np.sin(x)),
                    abs(cos_q(x, q).value - np.cos(x)),
                    abs(eq_series(x, q).value - np.exp(x)),
                )
                for x in xs
            )
        assert errors[1 - 1e-3] <= 1e-2
        assert errors[1 - 1e-4] < errors[1 - 1e-3]


class TestHandles:
    """Tests QFunctionHandle"""

    @pytest.mark.parametrize("kind", FUNCTION_KINDS)
    def test_call(self, kind):
        handle = QFunctionHandle(kind, 0.5)
        assert handle(0.3).value == pytest.approx(
            {
                "e_q": eq_series,
                "E_q": Eq_series,
                "sin_q": sin_q,
                "cos_q": cos_q,
                "tan_q": tan_q,
                "sec_q": sec_q,
                "csc_q": csc_q,
                "cot_q": cot_q,
            }[kind](0.3, 0.5).value
        )

    def test_validation(self):
        with pytest.raises(ValueError):
            QFunctionHandle("exp", 0.5)
        with pytest.raises(DomainError):
            QFunctionHandle("sin_q", 1.5)
        assert QFunctionHandle("E_q", 0.5).radius is None
        assert QFunctionHandle("e_q", 0.5).radius == 2.0

    def test_as_evaluable(self):
        f = QFunctionHandle("cos_q", 0.5).as_evaluable(EvalConfig())
        assert f(0.0) == 1
        assert f.domain_radius == pytest.approx(1.9)
        with pytest.raises(DomainError):
            f(1.95)


class TestDaehee:
    """Tests the Daehee constant and the sequence converging to it"""

    def test_first_term(self):
        assert daehee_sequence_term(1, 0.5) == DaeheeSequenceTerm(1, 2.0)

    @pytest.mark.parametrize("q", [0.3, 0.5, 0.7])
    def test_limit(self, q):
        constant = daehee_constant(q).real
        gap_10 = abs(daehee_sequence_term(10, q).value - constant)
        gap_50 = abs(daehee_sequence_term(50, q).value - constant)
        assert gap_50 < 1e-3
        assert gap_50 < gap_10

    @pytest.mark.parametrize("q", [0.5, 0.9])
    def test_long_sequences(self, q):
        term = daehee_sequence_term(2000, q)
        assert np.isfinite(term.value)
        assert term.value == pytest.approx(daehee_constant(q).real, rel=1e-9)

    def test_classical_limit(self):
        assert daehee_constant(1 - 1e-6).real == pytest.approx(np.e, rel=1e-5)

    @pytest.mark.parametrize("n", [0, -3, 2.5, True])
    def test_bad_index(self, n):
        with pytest.raises(ValueError):
            daehee_sequence_term(n, 0.5)

    def test_term_validation(self):
        with pytest.raises(ValueError):
            DaeheeSequenceTerm(0, 1.0)
        with pytest.raises(ValueError):
            DaeheeSequenceTerm(1, np.inf)


class TestComposedArguments:
    """Tests the evaluation at q-sums and scaled q-differences"""

    @pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
    def test_addition_theorems(self, q):
        axis = np.linspace(-0.5, 0.5, 7) * min(0.5 / (1 - q), 2.5)
        for x in axis:
            for y in axis:
                cx, cy, sx, sy = (
                    cos_q(x, q).value,
                    cos_q(y, q).value,
                    sin_q(x, q).value,
                    sin_q(y, q).value,
                )
                product = eq_series(x, q).value * eq_series(y, q).value
                assert fn_at_qsum("e_q", x, y, q).value == pytest.approx(product, rel=1e-8)
                assert fn_at_qsum("cos_q", x, y, q).value == pytest.approx(
                    cx * cy - sx * sy, abs=1e-8
                )
                assert fn_at_qsum("sin_q", x, y, q).value == pytest.approx(
                    sx * cy + cx * sy, abs=1e-8
                )

    @given(q_and_argument(fraction=0.25))
    def test_pythagorean(self, sample):
        q, x = sample
        c, s = cos_q(x, q).value, sin_q(x, q).value
        assert fn_at_scaled_qdiff("cos_q", x, q).value == pytest.approx(c * c + s * s, abs=1e-8)
        assert fn_at_scaled_qdiff("cos_q", x, q, "+").value == pytest.approx(
            c * c - s * s, abs=1e-8
        )
        assert fn_at_scaled_qdiff("sin_q", x, q, "+").value == pytest.approx(2 * s * c, abs=1e-8)

    def test_zero_summand(self):
        assert fn_at_qsum("e_q", 0.4, 0.0, 0.5).value == pytest.approx(eq_series(0.4, 0.5).value)

    def test_guards(self):
        with pytest.raises(DomainError):
            fn_at_qsum("e_q", 1.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            fn_at_scaled_qdiff("cos_q", 1.0, 0.5, "+")
        assert np.isfinite(fn_at_scaled_qdiff("cos_q", 1.0, 0.5, "-").value)

    @given(st.sampled_from(["E_q", "tan_q"]))
    def test_unsupported_kinds(self, kind):
        with pytest.raises(ValueError):
            fn_at_qsum(kind, 0.1, 0.1, 0.5)
        with pytest.raises(ValueError):
            fn_at_scaled_qdiff(kind, 0.1, 0.5)
        with pytest.raises(ValueError):
            fn_at_scaled_qdiff("cos_q", 0.1, 0.5, sign="*")
