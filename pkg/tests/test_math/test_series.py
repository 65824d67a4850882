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


"""Tests for the truncated power series engine."""

import math

import numpy as np
import pytest

from qtrig import settings
from qtrig.math.series import (
    EvalConfig,
    SeriesSpec,
    ValueWithError,
    as_complex,
    evaluate,
    evaluate_with_powers,
)
from qtrig.utils.errors import DivergentError, DomainError, NonConvergentError

geometric = SeriesSpec(lambda n: 1.0, radius_hint=1.0, name="geometric")
exponential = SeriesSpec(lambda n: 1 / math.factorial(n), name="exp")


class TestConfigs:
    """Tests EvalConfig and ValueWithError"""

    def test_defaults(self):
        cfg = EvalConfig()
        assert cfg.abs_tol == settings.SERIES_ABS_TOL
        assert cfg.rel_tol == settings.SERIES_REL_TOL
        assert cfg.max_terms == settings.SERIES_MAX_TERMS
        assert cfg.tail_run == settings.SERIES_TAIL_RUN
        assert cfg.replace(max_terms=64).max_terms == 64

    @pytest.mark.parametrize(
        "changes",
        [
            {"abs_tol": 0.0},
            {"rel_tol": -1e-9},
            {"tail_run": 0},
            {"max_terms": 2, "tail_run": 3},
            {"divergence_growth": 0.5},
            {"max_factors": 0},
        ],
    )
    def test_invalid(self, changes):
        with pytest.raises(ValueError):
            EvalConfig(**changes)

    def test_value_with_error(self):
        value = ValueWithError(2, 0, 5)
        assert value.value == 2 + 0j
        assert isinstance(value.error_estimate, float)
        assert value.real == 2.0
        assert value.imag == 0.0
        with pytest.raises(ValueError):
            ValueWithError(1.0, -1e-3, 1)

    def test_series_spec(self):
        with pytest.raises(ValueError):
            SeriesSpec(lambda n: 1.0, radius_hint=0.0)


def test_as_complex():
    assert as_complex(np.float64(2.0)) == 2 + 0j
    assert as_complex(1j) == 1j
    with pytest.raises(TypeError):
        as_complex("x")
    with pytest.raises(DomainError):
        as_complex(complex(np.nan, 0.0))
    with pytest.raises(DomainError):
        as_complex(np.inf)


class TestEvaluate:
    """Tests the summation and its stopping rules"""

    def test_geometric(self):
        """The sum stops after three terms below 1e-12 times the partial sum."""
        result = evaluate(geometric, 0.5)
        assert abs(result.value - 2) <= result.error_estimate
        assert result.error_estimate < 1e-11
        assert result.terms_used == 42

    def test_entire(self):
        result = evaluate(exponential, 1.0)
        assert result.value.real == pytest.approx(np.e, rel=1e-13)
        result = evaluate(exponential, 1j)
        assert result.value == pytest.approx(np.exp(1j), abs=1e-13)

    def test_polynomial(self):
        """Finitely many non-zero coefficients give the exact value and a zero error."""
        cubic = SeriesSpec(lambda n: [1.0, 2.0, 3.0][n] if n < 3 else 0.0)
        result = evaluate(cubic, 2.0)
        assert result.value == 17
        assert result.error_estimate == 0
        assert result.terms_used == 6

    @pytest.mark.parametrize("z", [0.8, -0.8, 0.8j])
    def test_error_estimate_near_the_guard(self, z):
        """At 80% of the radius the reported error still bounds the distance to the sum."""
        result = evaluate(geometric, z)
        assert abs(result.value - 1 / (1 - z)) <= 10 * result.error_estimate + 1e-15

    def test_error_estimate_entire(self):
        result = evaluate(exponential, 3.0)
        assert abs(result.value - np.exp(3.0)) <= 10 * result.error_estimate + 1e-13

    def test_tighter_tolerances(self):
        """Tightening rel_tol never increases the error and never uses fewer terms."""
        results = [
            evaluate(geometric, 0.8, EvalConfig(rel_tol=rel_tol))
            for rel_tol in (1e-4, 1e-6, 1e-8, 1e-10, 1e-12)
        ]
        errors = [abs(r.value - 5) for r in results]
        terms = [r.terms_used for r in results]
        assert all(b <= a for a, b in zip(errors, errors[1:]))
        assert terms == sorted(terms)
        assert errors[-1] < 1e-10

    def test_deterministic(self):
        first = evaluate(exponential, 0.3 + 1.7j)
        second = evaluate(exponential, 0.3 + 1.7j)
        assert (first.value, first.error_estimate, first.terms_used) == (
            second.value,
            second.error_estimate,
            second.terms_used,
        )

    def test_radius_guard(self):
        with pytest.raises(DomainError):
            evaluate(geometric, 0.96)
        with pytest.raises(DomainError):
            evaluate(geometric, 0.96j)
        settings.RADIUS_GUARD = 0.99
        result = evaluate(geometric, 0.96, EvalConfig(max_terms=2000))
        assert result.value.real == pytest.approx(25.0, rel=1e-9)

    def test_divergent(self):
        with pytest.raises(DivergentError):
            evaluate(SeriesSpec(lambda n: 1.0), 2.0)

    def test_non_finite_term(self):
        with pytest.raises(DivergentError):
            evaluate(SeriesSpec(lambda n: np.inf if n == 4 else 1.0), 0.5)

    def test_term_cap(self):
        with pytest.raises(NonConvergentError):
            evaluate(SeriesSpec(lambda n: 1.0), 0.9, EvalConfig(max_terms=20))

    def test_with_powers(self):
        """The replacement powers are only requested for non-zero coefficients."""
        requested = []

        def power_at(n):
            requested.append(n)
            return 2.0**n

        even = SeriesSpec(lambda n: 1.0 if n % 2 == 0 and n < 6 else 0.0)
        result = evaluate_with_powers(even, power_at)
        assert result.value == 1 + 4 + 16
        assert requested == [0, 2, 4]
        assert result.terms_used == 8
