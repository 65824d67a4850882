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


"""
This module contains the identity sets checked by ``qtrig check``.

An :class:`Identity` pairs a sampler, which draws the inputs of a sweep, with a residual,
which measures how far one input is from satisfying the identity. Residuals are relative to
:math:`\max(1, |\text{value}|)` unless stated otherwise. Sweeps are seeded per identity, so the
same seed draws the same (unit) samples whatever set is checked and whatever ``q`` is used;
the samples are then scaled to the sweep radius of ``q``.

The ``errata`` set checks that two uncorrected statements of q-calculus fail by exactly the
boundary term they leave out: its residual is the distance between the observed failure and
the predicted one.
"""

from __future__ import annotations

import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Optional, Sequence

import numpy as np
from scipy.special import comb

from qtrig.math.qcore import (
    QParam,
    as_qparam,
    q_binomial_numeric,
    q_binomial_poly,
    q_binomial_quotient,
    q_binomial_row,
    q_binomial_values,
    q_integer,
    q_sub_power,
)
from qtrig.math.series import EvalConfig
from qtrig.special.qcalculus import (
    Evaluable,
    QuadratureConfig,
    fundamental_theorem_check,
    integration_by_parts_residual,
    jackson_derivative,
    jackson_integral,
    monomial_derivative,
    product_rule_residual,
    quotient_rule_residual,
    qtrig_derivative_suite,
)
from qtrig.special.qfunctions import (
    QFunctionHandle,
    Eq_product,
    Eq_series,
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
    sin_q,
    tan_q,
)
from qtrig.utils.errors import PoleError, QtrigError
from qtrig.utils.logger import create_logger
from qtrig.utils.reports import IdentityReport
from qtrig.utils.settings import settings

__all__ = [
    "Identity",
    "SweepContext",
    "IDENTITY_SETS",
    "identity_set",
    "sweep_radius",
    "check_identity",
    "check_identities",
]

log = create_logger(__name__)

Sampler = Callable[[QParam, np.random.Generator, int], list]


@dataclass(frozen=True)
class SweepContext:
    r"""The configs every residual of a sweep is evaluated with.

    Args:
        cfg: the series config
        quadrature: the quadrature config
        n_samples: the number of samples drawn by randomized identities
    """

    cfg: EvalConfig = field(default_factory=EvalConfig)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    n_samples: int = field(default_factory=lambda: settings.SWEEP_SAMPLES)

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError(f"A sweep needs at least one sample, got {self.n_samples}.")


@dataclass(frozen=True)
class Identity:
    r"""An identity checked over a sweep of inputs.

    Args:
        identity_id: the name of the identity, ``<set>.<name>``
        residual: returns the residual of one sample, given the sample, ``q`` and the context
        sampler: returns the samples, given ``q``, a random generator and a sample count
        tolerance: the largest residual accepted
        max_skip_fraction: the fraction of samples that may be skipped for hitting a pole
    """

    identity_id: str
    residual: Callable[[Any, QParam, SweepContext], float]
    sampler: Sampler
    tolerance: float
    max_skip_fraction: float = 0.0


def sweep_radius(q: QParam) -> float:
    r"""The largest argument magnitude sampled at ``q``:
    ``min(SWEEP_RADIUS_FRACTION / (1 - q), SWEEP_MAX_RADIUS)``."""
    return min(settings.SWEEP_RADIUS_FRACTION * q.radius, settings.SWEEP_MAX_RADIUS)


def _relative(value: complex, expected: complex) -> float:
    return abs(value - expected) / max(1.0, abs(expected))


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ samplers ~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def _real(fraction: float = 1.0) -> Sampler:
    def sampler(q, rng, n):
        return list(rng.uniform(-1.0, 1.0, n) * fraction * sweep_radius(q))

    return sampler


def _disk(fraction: float = 1.0) -> Sampler:
    def sampler(q, rng, n):
        radii = np.sqrt(rng.uniform(0.0, 1.0, n)) * fraction * sweep_radius(q)
        phases = rng.uniform(0.0, 2 * np.pi, n)
        return list(radii * np.exp(1j * phases))

    return sampler


def _pair_grid(q, rng, n):  # pylint: disable=unused-argument
    axis = np.linspace(-0.5, 0.5, 20) * sweep_radius(q)
    return [(float(x), float(y)) for x in axis for y in axis]


def _ray(n_points: int, skip_origin: bool = False, limit: float = 1.2) -> Sampler:
    r"""``n_points`` evenly spaced points of :math:`[0, \min(0.8 R, \text{limit})]`, without the
    origin if ``skip_origin``. The limit stays below the first zero of :math:`\cos_q`."""

    def sampler(q, rng, n):  # pylint: disable=unused-argument
        end = min(0.8 * sweep_radius(q), limit)
        points = [float(x) for x in np.linspace(0.0, end, n_points)]
        return points[1:] if skip_origin else points

    return sampler


def _fixed(values: Sequence[Any]) -> Sampler:
    def sampler(q, rng, n):  # pylint: disable=unused-argument
        return list(values)

    return sampler


def _classical_samples(q, rng, n):
    radius = min(1.0, 0.9 * settings.RADIUS_GUARD * q.radius)
    return list(rng.uniform(-1.0, 1.0, n) * radius)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ daehee ~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def _euler_formula(x, q, ctx):
    lhs = eq_series(1j * x, q, ctx.cfg).value
    rhs = cos_q(x, q, ctx.cfg).value + 1j * sin_q(x, q, ctx.cfg).value
    return abs(lhs - rhs) / (1 + abs(lhs))


def _cos_from_exponentials(x, q, ctx):
    average = (eq_series(1j * x, q, ctx.cfg).value + eq_series(-1j * x, q, ctx.cfg).value) / 2
    return _relative(cos_q(x, q, ctx.cfg).value, average)


def _sin_from_exponentials(x, q, ctx):
    difference = (eq_series(1j * x, q, ctx.cfg).value - eq_series(-1j * x, q, ctx.cfg).value) / 2j
    return _relative(sin_q(x, q, ctx.cfg).value, difference)


def _parity(x, q, ctx):
    odd = abs(sin_q(-x, q, ctx.cfg).value + sin_q(x, q, ctx.cfg).value)
    even = abs(cos_q(-x, q, ctx.cfg).value - cos_q(x, q, ctx.cfg).value)
    return max(odd, even)


def _exponential_pair(z, q, ctx):
    return abs(eq_series(z, q, ctx.cfg).value * Eq_series(-z, q, ctx.cfg).value - 1)


def _eq_representations(z, q, ctx):
    return _relative(eq_series(z, q, ctx.cfg).value, eq_product(z, q, ctx.cfg).value)


def _big_eq_representations(z, q, ctx):
    return _relative(Eq_series(z, q, ctx.cfg).value, Eq_product(z, q, ctx.cfg).value)


_LIMIT_GAP_DECAY = 1e-5


def _gap(n, q, ctx) -> float:
    return abs(daehee_sequence_term(n, q).value - daehee_constant(q, ctx.cfg).real)


def _limit_gap(n, q, ctx):
    # the gap shrinks like max(q, 1 - q)^n, too slowly near the ends of (0, 1) for a fixed n
    if max(q.q, 1 - q.q) ** n > _LIMIT_GAP_DECAY:
        return None
    return _gap(n, q, ctx)


def _limit_trend(pair, q, ctx):
    early, late = pair
    return max(0.0, _gap(late, q, ctx) - _gap(early, q, ctx))


def _daehee_set() -> tuple[Identity, ...]:
    return (
        Identity("daehee.euler_formula", _euler_formula, _real(), 1e-10),
        Identity("daehee.cos_from_exponentials", _cos_from_exponentials, _real(), 1e-10),
        Identity("daehee.sin_from_exponentials", _sin_from_exponentials, _real(), 1e-10),
        Identity("daehee.parity", _parity, _real(), 1e-12),
        Identity("daehee.exponential_pair", _exponential_pair, _disk(), 1e-10),
        Identity("daehee.eq_series_vs_product", _eq_representations, _disk(), 1e-10),
        Identity("daehee.Eq_series_vs_product", _big_eq_representations, _disk(), 1e-10),
        Identity("daehee.limit_gap", _limit_gap, _fixed([50]), 1e-3),
        Identity("daehee.limit_trend", _limit_trend, _fixed([(10, 50)]), 0.0),
    )


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ addition ~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def _exp_qsum(pair, q, ctx):
    x, y = pair
    product = eq_series(x, q, ctx.cfg).value * eq_series(y, q, ctx.cfg).value
    return _relative(fn_at_qsum("e_q", x, y, q, ctx.cfg).value, product)


def _exp_qsum_imaginary(pair, q, ctx):
    x, y = pair
    product = eq_series(1j * x, q, ctx.cfg).value * eq_series(1j * y, q, ctx.cfg).value
    return _relative(fn_at_qsum("e_q", 1j * x, 1j * y, q, ctx.cfg).value, product)


def _cos_qsum(pair, q, ctx):
    x, y = pair
    cx, cy = cos_q(x, q, ctx.cfg).value, cos_q(y, q, ctx.cfg).value
    sx, sy = sin_q(x, q, ctx.cfg).value, sin_q(y, q, ctx.cfg).value
    return _relative(fn_at_qsum("cos_q", x, y, q, ctx.cfg).value, cx * cy - sx * sy)


def _sin_qsum(pair, q, ctx):
    x, y = pair
    cx, cy = cos_q(x, q, ctx.cfg).value, cos_q(y, q, ctx.cfg).value
    sx, sy = sin_q(x, q, ctx.cfg).value, sin_q(y, q, ctx.cfg).value
    return _relative(fn_at_qsum("sin_q", x, y, q, ctx.cfg).value, sx * cy + cx * sy)


def _addition_set() -> tuple[Identity, ...]:
    return (
        Identity("addition.exp_qsum", _exp_qsum, _pair_grid, 1e-8),
        Identity("addition.exp_qsum_imaginary", _exp_qsum_imaginary, _pair_grid, 1e-8),
        Identity("addition.cos_qsum", _cos_qsum, _pair_grid, 1e-8),
        Identity("addition.sin_qsum", _sin_qsum, _pair_grid, 1e-8),
    )


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ pythagorean ~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def _sum_of_squares(x, q, ctx):
    c, s = cos_q(x, q, ctx.cfg).value, sin_q(x, q, ctx.cfg).value
    return _relative(fn_at_scaled_qdiff("cos_q", x, q, "-", ctx.cfg).value, c * c + s * s)


def _difference_of_squares(x, q, ctx):
    c, s = cos_q(x, q, ctx.cfg).value, sin_q(x, q, ctx.cfg).value
    return _relative(fn_at_scaled_qdiff("cos_q", x, q, "+", ctx.cfg).value, c * c - s * s)


def _double_sin(x, q, ctx):
    c, s = cos_q(x, q, ctx.cfg).value, sin_q(x, q, ctx.cfg).value
    return _relative(fn_at_scaled_qdiff("sin_q", x, q, "+", ctx.cfg).value, 2 * s * c)


def _one_plus_tan_squared(x, q, ctx):
    t, sec = tan_q(x, q, ctx.cfg).value, sec_q(x, q, ctx.cfg).value
    scaled = fn_at_scaled_qdiff("cos_q", x, q, "-", ctx.cfg).value
    return _relative(1 + t * t, scaled * sec * sec)


def _one_plus_cot_squared(x, q, ctx):
    c, csc = cot_q(x, q, ctx.cfg).value, csc_q(x, q, ctx.cfg).value
    scaled = fn_at_scaled_qdiff("cos_q", x, q, "-", ctx.cfg).value
    return _relative(1 + c * c, scaled * csc * csc)


def _tan_cot(x, q, ctx):
    return abs(tan_q(x, q, ctx.cfg).value * cot_q(x, q, ctx.cfg).value - 1)


def _sec_cos(x, q, ctx):
    return abs(sec_q(x, q, ctx.cfg).value * cos_q(x, q, ctx.cfg).value - 1)


def _pythagorean_set() -> tuple[Identity, ...]:
    # (1 (+) 1)^n grows like 2^n, so these sweeps stay in half the radius
    half = _real(0.5)
    return (
        Identity("pythagorean.sum_of_squares", _sum_of_squares, half, 1e-8),
        Identity("pythagorean.difference_of_squares", _difference_of_squares, half, 1e-8),
        Identity("pythagorean.double_sin", _double_sin, half, 1e-8),
        Identity("pythagorean.one_plus_tan_squared", _one_plus_tan_squared, half, 1e-8, 0.05),
        Identity("pythagorean.one_plus_cot_squared", _one_plus_cot_squared, half, 1e-8, 0.05),
        Identity("pythagorean.tan_cot_reciprocal", _tan_cot, half, 1e-10, 0.05),
        Identity("pythagorean.sec_cos_reciprocal", _sec_cos, half, 1e-10, 0.05),
    )


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ calculus ~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

_MONOMIAL_POINTS = [(n, x) for n in range(11) for x in (0.2, 0.7, 1.3)]
_INTEGRAL_POINTS = [(n, x) for n in range(9) for x in (0.25, 1.0, 1.75)]


def _handle(kind, q, ctx) -> Evaluable:
    return QFunctionHandle(kind, q).as_evaluable(ctx.cfg)


def _dq_monomial(sample, q, ctx):  # pylint: disable=unused-argument
    n, x = sample
    return _relative(jackson_derivative(Evaluable.monomial(n), x, q), monomial_derivative(n, x, q))


def _dq_exponential(x, q, ctx):
    # lambda = 1/2 keeps lambda * x inside half the radius
    scale = 0.5
    exponential = _handle("e_q", q, ctx).scaled(scale)
    return _relative(jackson_derivative(exponential, x, q), scale * exponential(x))


def _integral_monomial(sample, q, ctx):
    n, x = sample
    integral = jackson_integral(Evaluable.monomial(n), x, q, ctx.quadrature).value
    return _relative(integral, x ** (n + 1) / q_integer(n + 1, q))


def _basket(q, ctx) -> dict[str, Evaluable]:
    return {
        "t^2": Evaluable.monomial(2),
        "t^2+1": Evaluable.monomial(2) + 1,
        "e_q(t/2)": _handle("e_q", q, ctx).scaled(0.5),
        "sin_q": _handle("sin_q", q, ctx),
        "cos_q": _handle("cos_q", q, ctx),
    }


def _fundamental_theorem(x, q, ctx):
    return max(
        abs(fundamental_theorem_check(f, x, q, ctx.quadrature).value) / max(1.0, abs(f(x)))
        for f in _basket(q, ctx).values()
    )


def _pairs(q, ctx) -> list[tuple[Evaluable, Evaluable]]:
    sin, cos = _handle("sin_q", q, ctx), _handle("cos_q", q, ctx)
    return [(Evaluable.monomial(2), Evaluable.monomial(3)), (sin, cos), (cos, sin)]


def _product_rule(x, q, ctx):
    return max(abs(product_rule_residual(f, g, x, q)) for f, g in _pairs(q, ctx))


def _quotient_rule(x, q, ctx):
    cos = _handle("cos_q", q, ctx)
    pairs = [
        (Evaluable.monomial(2), Evaluable.monomial(1)),
        (_handle("sin_q", q, ctx), cos),
        (Evaluable.constant(1.0), cos),
    ]
    return max(abs(quotient_rule_residual(f, g, x, q)) for f, g in pairs)


def _integration_by_parts(x, q, ctx):
    t = Evaluable.monomial(1)
    pairs = [(t, t), (1 + t, 1 + t)] + _pairs(q, ctx)[1:]
    return max(
        abs(integration_by_parts_residual(f, g, x, q, ctx.quadrature)) for f, g in pairs
    )


def _linearity(sample, q, ctx):  # pylint: disable=unused-argument
    x, a, b = sample
    f, g = Evaluable.monomial(3), Evaluable.monomial(2) + 1
    combined = jackson_derivative(a * f + b * g, x, q)
    separate = a * jackson_derivative(f, x, q) + b * jackson_derivative(g, x, q)
    return _relative(combined, separate)


def _linearity_samples(q, rng, n):
    xs = rng.uniform(0.1, 1.0, n)
    coefficients = rng.uniform(-2.0, 2.0, (n, 2))
    return [(float(x), float(a), float(b)) for x, (a, b) in zip(xs, coefficients)]


@lru_cache(maxsize=64)
def _suite_residuals(x: float, q: QParam, ctx: SweepContext) -> dict[str, float]:
    reports = qtrig_derivative_suite(x, q, ctx.cfg, ctx.quadrature)
    return {r.identity_id: r.max_abs_residual for r in reports}


def _suite_residual(identity_id: str) -> Callable[[Any, QParam, SweepContext], Optional[float]]:
    def residual(x, q, ctx):
        return _suite_residuals(x, q, ctx).get(identity_id)

    return residual


def _calculus_set() -> tuple[Identity, ...]:
    nonzero_ray = _ray(7, skip_origin=True)
    suite = tuple(
        Identity(identity_id, _suite_residual(identity_id), ray, 1e-8)
        for identity_id, ray in (
            ("calculus.dq_sin_q", nonzero_ray),
            ("calculus.dq_cos_q", nonzero_ray),
            ("calculus.dq_tan_q", nonzero_ray),
            ("calculus.integral_sin_q", _ray(7)),
            ("calculus.integral_cos_q", _ray(7)),
            ("calculus.integral_tan_q", _ray(7)),
        )
    )
    return (
        Identity("calculus.dq_monomials", _dq_monomial, _fixed(_MONOMIAL_POINTS), 1e-12),
        Identity("calculus.dq_exponential", _dq_exponential, _real(), 1e-9),
        Identity("calculus.linearity", _linearity, _linearity_samples, 1e-12),
        Identity(
            "calculus.integral_monomials", _integral_monomial, _fixed(_INTEGRAL_POINTS), 1e-10
        ),
    ) + suite + (
        Identity("calculus.fundamental_theorem", _fundamental_theorem, _ray(5), 1e-9),
        Identity("calculus.product_rule", _product_rule, nonzero_ray, 1e-9),
        Identity("calculus.quotient_rule", _quotient_rule, nonzero_ray, 1e-9),
        Identity("calculus.integration_by_parts", _integration_by_parts, _ray(5), 1e-9),
    )


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ errata ~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def _confirmed(literal: complex, predicted_gap: float, tolerance: float) -> float:
    r"""How far an uncorrected residual is from its predicted value, or ``inf`` if the
    uncorrected form did not fail at all."""
    if abs(literal) <= 100 * tolerance:
        return np.inf
    return abs(abs(literal) - predicted_gap)


def _literal_fundamental_theorem(x, q, ctx):
    f = Evaluable.monomial(2) + 1
    literal = fundamental_theorem_check(f, x, q, ctx.quadrature, subtract_origin=False).value
    return _confirmed(literal, abs(f(0.0)), 1e-9)


def _literal_integral_sin(x, q, ctx):
    integral = jackson_integral(_handle("sin_q", q, ctx), x, q, ctx.quadrature).value
    literal = integral + cos_q(x, q, ctx.cfg).value
    return _confirmed(literal, 1.0, 1e-8)


def _literal_integral_cos(x, q, ctx):
    integral = jackson_integral(_handle("cos_q", q, ctx), x, q, ctx.quadrature).value
    sine = sin_q(x, q, ctx.cfg).value
    return _confirmed(integral + sine, 2 * abs(sine), 1e-8)


def _literal_integration_by_parts(x, q, ctx):  # pylint: disable=unused-argument
    f = 1 + Evaluable.monomial(1)
    literal = integration_by_parts_residual(f, f, x, q, ctx.quadrature, subtract_origin=False)
    return _confirmed(literal, abs(f(0.0) * f(0.0)), 1e-9)


def _errata_set() -> tuple[Identity, ...]:
    positive_ray = _ray(5, skip_origin=True)
    return (
        Identity(
            "errata.fundamental_theorem_literal", _literal_fundamental_theorem, positive_ray, 1e-9
        ),
        Identity("errata.integral_sin_literal", _literal_integral_sin, positive_ray, 1e-8),
        Identity("errata.integral_cos_literal", _literal_integral_cos, positive_ray, 1e-8),
        Identity(
            "errata.integration_by_parts_literal", _literal_integration_by_parts, positive_ray, 1e-9
        ),
    )


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ binomial ~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

_ROWS = list(range(31))


def _pascal_rule(n, q, ctx):  # pylint: disable=unused-argument
    if n == 0:
        return 0.0
    failures = sum(
        q_binomial_poly(n, k) != q_binomial_poly(n - 1, k).shift(k) + q_binomial_poly(n - 1, k - 1)
        for k in range(1, n)
    )
    return float(failures)


def _symmetry(n, q, ctx):  # pylint: disable=unused-argument
    return float(sum(q_binomial_poly(n, k) != q_binomial_poly(n, n - k) for k in range(n + 1)))


def _shape(n, q, ctx):  # pylint: disable=unused-argument
    failures = 0
    for k in range(n + 1):
        p = q_binomial_poly(n, k)
        failures += not p.is_palindromic()
        failures += any(c < 0 for c in p.coefficients)
        failures += p.degree != k * (n - k)
    return float(failures)


def _classical_value(n, q, ctx):  # pylint: disable=unused-argument
    return float(sum(q_binomial_poly(n, k)(1) != comb(n, k, exact=True) for k in range(n + 1)))


def _exact_row(n: int, q: QParam) -> np.ndarray:
    return np.array([float(p(q.q)) for p in q_binomial_row(n)])


def _numeric_form(n, q, ctx):  # pylint: disable=unused-argument
    exact = _exact_row(n, q)
    return max(abs(q_binomial_numeric(n, k, q) / exact[k] - 1) for k in range(n + 1))


def _quotient_form(n, q, ctx):  # pylint: disable=unused-argument
    exact = _exact_row(n, q)
    return max(abs(q_binomial_quotient(n, k, q) / exact[k] - 1) for k in range(n + 1))


def _alternating_sum(n, q, ctx):  # pylint: disable=unused-argument
    return abs(q_sub_power(1.0, 1.0, n, q)) / float(np.sum(q_binomial_values(n, q)))


def _binomial_set() -> tuple[Identity, ...]:
    rows = _fixed(_ROWS)
    return (
        Identity("binomial.pascal_rule", _pascal_rule, rows, 0.0),
        Identity("binomial.symmetry", _symmetry, rows, 0.0),
        Identity("binomial.palindromic_nonnegative_degree", _shape, rows, 0.0),
        Identity("binomial.classical_value", _classical_value, rows, 0.0),
        Identity("binomial.numeric_form", _numeric_form, rows, 1e-12),
        Identity("binomial.quotient_form", _quotient_form, rows, 1e-10),
        Identity("binomial.alternating_sum", _alternating_sum, _fixed(_ROWS[1::2]), 1e-12),
    )


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ classical ~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def _first_order_bound(q: QParam) -> float:
    r"""The size of the distance to the classical functions on :math:`|x| \leq 1`, which
    shrinks linearly with :math:`1 - q`."""
    return 10 * (1 - q.q)


def _classical_errors(x, q, ctx) -> tuple[float, float, float, float]:
    return (
        abs(sin_q(x, q, ctx.cfg).value - np.sin(x)),
        abs(cos_q(x, q, ctx.cfg).value - np.cos(x)),
        abs(eq_series(x, q, ctx.cfg).value - np.exp(x)),
        abs(eq_series(1j * x, q, ctx.cfg).value - np.exp(1j * x)),
    )


def _classical_identity(identity_id: str, index: int) -> Identity:
    def residual(x, q, ctx):
        return _classical_errors(x, q, ctx)[index] / _first_order_bound(q)

    return Identity(identity_id, residual, _classical_samples, 1.0)


def _napier(n, q, ctx):  # pylint: disable=unused-argument
    return abs(daehee_constant(q, ctx.cfg).real - np.e) / _first_order_bound(q)


def _dq_cubic(x, q, ctx):  # pylint: disable=unused-argument
    cubic = Evaluable.monomial(3)
    error = abs(jackson_derivative(cubic, x, q) - 3 * x**2)
    return error / (3 * (1 - q.q) + 1e-12)


def _closer_limit(x_samples, q, ctx):
    # zero only when the errors strictly shrink; a tie fails
    closer = 1 - (1 - q.q) / 10
    if 1 - closer < QParam.EDGE:
        return None
    closer = QParam(closer)
    here = max(max(_classical_errors(x, q, ctx)) for x in x_samples)
    there = max(max(_classical_errors(x, closer, ctx)) for x in x_samples)
    if there < here:
        return 0.0
    return max(there - here, np.finfo(float).tiny)


def _classical_set() -> tuple[Identity, ...]:
    return (
        Identity("classical.napier", _napier, _fixed([1]), 1.0),
        _classical_identity("classical.sin", 0),
        _classical_identity("classical.cos", 1),
        _classical_identity("classical.exp", 2),
        _classical_identity("classical.euler", 3),
        Identity("classical.dq_cubic", _dq_cubic, _fixed([0.1, 0.4, 0.7, 1.0]), 1.0),
        Identity(
            "classical.closer_limit",
            _closer_limit,
            lambda q, rng, n: [tuple(_classical_samples(q, rng, min(n, 20)))],
            0.0,
        ),
    )


IDENTITY_SETS: dict[str, Callable[[], tuple[Identity, ...]]] = {
    "daehee": _daehee_set,
    "addition": _addition_set,
    "pythagorean": _pythagorean_set,
    "calculus": _calculus_set,
    "errata": _errata_set,
    "binomial": _binomial_set,
    "classical": _classical_set,
}
r"""The identity sets, by name. ``"all"`` stands for all of them, in this order."""


def identity_set(name: str) -> tuple[Identity, ...]:
    r"""The identities of a set (``"all"`` for every set).

    Raises:
        ValueError: if the set does not exist
    """
    if name == "all":
        return tuple(identity for build in IDENTITY_SETS.values() for identity in build())
    if name not in IDENTITY_SETS:
        raise ValueError(
            f"Unknown identity set {name!r}; use 'all' or one of {list(IDENTITY_SETS)}."
        )
    return IDENTITY_SETS[name]()


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ sweeps ~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


_POLE = object()


def _rng(identity_id: str, seed: int) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(identity_id.encode())])


def _map(fn: Callable, items: list) -> list:
    if settings.MAX_WORKERS > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=settings.MAX_WORKERS) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def check_identity(
    identity: Identity, q: QParam, seed: int, ctx: Optional[SweepContext] = None
) -> IdentityReport:
    r"""Checks an identity over its sweep at ``q``.

    Samples that hit a pole are skipped. If more than ``identity.max_skip_fraction`` of them
    are skipped, the skipped samples count with an infinite residual. A sample that fails with
    any other evaluation error counts with an infinite residual, so the report fails. A
    residual of ``None`` means the identity does not apply to that sample; an identity that
    applies to no sample is not reported.

    Args:
        identity: the identity
        q: the deformation parameter
        seed: the seed of the sweep
        ctx: the configs of the sweep

    Returns:
        IdentityReport: the report of the sweep, or ``None`` if the identity does not apply
    """
    q = as_qparam(q)
    ctx = ctx or SweepContext()
    samples = identity.sampler(q, _rng(identity.identity_id, seed), ctx.n_samples)

    def run(sample):
        try:
            return identity.residual(sample, q, ctx)
        except PoleError:
            return _POLE
        except QtrigError as e:
            log.warning("%s failed at %s, q = %s: %s", identity.identity_id, sample, q.q, e)
            return np.inf

    outcomes = _map(run, samples)
    skipped = [s for s, r in zip(samples, outcomes) if r is _POLE]
    kept = [(s, r) for s, r in zip(samples, outcomes) if r is not _POLE and r is not None]

    if skipped:
        log.warning(
            "%s skipped %d of %d samples at q = %s (pole).",
            identity.identity_id,
            len(skipped),
            len(samples),
            q.q,
        )
    if len(skipped) > identity.max_skip_fraction * len(samples) or (skipped and not kept):
        kept += [(s, np.inf) for s in skipped]
    if not kept:
        log.info("%s does not apply at q = %s.", identity.identity_id, q.q)
        return None

    inputs, residuals = zip(*kept)
    return IdentityReport.from_residuals(
        identity.identity_id, q.q, residuals, inputs, identity.tolerance, skipped=len(skipped)
    )


def check_identities(
    identities: Sequence[Identity],
    qs: Sequence[float],
    seed: int,
    ctx: Optional[SweepContext] = None,
    on_step: Optional[Callable[[str], None]] = None,
) -> list[IdentityReport]:
    r"""Checks identities at every ``q``, in order: all the identities at the first ``q``,
    then at the second, and so on.

    Args:
        identities: the identities
        qs: the deformation parameters
        seed: the seed of the sweeps
        ctx: the configs of the sweeps
        on_step: called with the name of every identity once it is checked

    Returns:
        list[IdentityReport]: one report per identity per ``q`` (identities that do not apply
        at some ``q`` are left out)
    """
    reports = []
    for q in qs:
        q = as_qparam(q)
        for identity in identities:
            report = check_identity(identity, q, seed, ctx)
            if report is not None:
                reports.append(report)
            if on_step is not None:
                on_step(identity.identity_id)
    return reports
