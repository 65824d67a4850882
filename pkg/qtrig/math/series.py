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
This module contains the truncated power series engine.

A series is described by its coefficients (:class:`SeriesSpec`); :func:`evaluate` sums it at a
point and :func:`evaluate_with_powers` sums it against an arbitrary sequence standing in for
the powers of the argument, which is how functions are evaluated at formal q-sums.

The summation stops after ``tail_run`` consecutive negligible terms, and reports the sum of
their magnitudes as its error estimate. Series whose terms keep growing geometrically are
reported as divergent.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from qtrig.utils.errors import DivergentError, DomainError, NonConvergentError
from qtrig.utils.logger import create_logger
from qtrig.utils.settings import settings
from qtrig.utils.typing import ComplexValue

__all__ = [
    "EvalConfig",
    "ValueWithError",
    "SeriesSpec",
    "as_complex",
    "evaluate",
    "evaluate_with_powers",
    "DIVERGENCE_MIN_DEGREE",
]

log = create_logger(__name__)

DIVERGENCE_MIN_DEGREE = 10
r"""Divergence is only declared on terms of degree larger than this."""

_RATIO_SLACK = 1e-9


def as_complex(z: ComplexValue, name: str = "z") -> complex:
    r"""Converts ``z`` into a finite Python complex.

    Args:
        z: the value to convert
        name: the name of the argument, used in error messages

    Returns:
        complex: the converted value

    Raises:
        TypeError: if ``z`` is not a number
        DomainError: if ``z`` has a non-finite component
    """
    try:
        w = complex(z)
    except (TypeError, ValueError) as e:
        raise TypeError(f"``{name}`` must be a number, got {z!r}.") from e
    if not (np.isfinite(w.real) and np.isfinite(w.imag)):
        raise DomainError(f"``{name}`` must be finite, got {w}.")
    return w


@dataclass(frozen=True)
class EvalConfig:
    r"""Tolerances and caps of a series or product evaluation.

    Fields left unset are read from :data:`qtrig.settings` when the config is created.

    Args:
        abs_tol: absolute size below which a term is negligible
        rel_tol: size, relative to the partial sum, below which a term is negligible
        max_terms: number of series terms after which the evaluation gives up
        max_factors: number of factors after which an infinite product gives up
        tail_run: number of consecutive negligible terms needed to stop
        divergence_growth: term-to-term growth that, sustained over ``tail_run`` terms,
            signals divergence
    """

    abs_tol: float = field(default_factory=lambda: settings.SERIES_ABS_TOL)
    rel_tol: float = field(default_factory=lambda: settings.SERIES_REL_TOL)
    max_terms: int = field(default_factory=lambda: settings.SERIES_MAX_TERMS)
    max_factors: int = field(default_factory=lambda: settings.PRODUCT_MAX_FACTORS)
    tail_run: int = field(default_factory=lambda: settings.SERIES_TAIL_RUN)
    divergence_growth: float = field(default_factory=lambda: settings.SERIES_DIVERGENCE_GROWTH)

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("Series tolerances must be positive.")
        if self.tail_run < 1:
            raise ValueError(f"``tail_run`` must be at least 1, got {self.tail_run}.")
        if self.max_factors < 1:
            raise ValueError(f"``max_factors`` must be at least 1, got {self.max_factors}.")
        if self.max_terms < self.tail_run:
            raise ValueError(
                f"``max_terms`` ({self.max_terms}) must be at least ``tail_run`` ({self.tail_run})."
            )
        if not self.divergence_growth >= 1:
            raise ValueError(
                f"``divergence_growth`` must be at least 1, got {self.divergence_growth}."
            )

    def replace(self, **changes) -> EvalConfig:
        r"""Returns a copy of this config with some fields changed."""
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class ValueWithError:
    r"""An evaluated quantity together with an estimate of its truncation error.

    Args:
        value: the value
        error_estimate: a non-negative estimate of the truncation error
        terms_used: the number of terms (or factors, or points) that were used
    """

    value: complex
    error_estimate: float
    terms_used: int

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "error_estimate", float(self.error_estimate))
        if not self.error_estimate >= 0:
            raise ValueError(f"An error estimate must be non-negative, got {self.error_estimate}.")

    @property
    def real(self) -> float:
        r"""The real part of the value."""
        return self.value.real

    @property
    def imag(self) -> float:
        r"""The imaginary part of the value."""
        return self.value.imag


@dataclass(frozen=True)
class SeriesSpec:
    r"""A power series :math:`\sum_n a_n z^n` described by its coefficients.

    ``coefficient_at`` must be defined (and finite) for every degree the engine may ask for,
    and must be reentrant: the engine calls it from whatever thread is evaluating.

    Args:
        coefficient_at: a function returning :math:`a_n` for a degree :math:`n \geq 0`
        radius_hint: the radius of convergence, if known. :func:`evaluate` rejects
            arguments beyond ``settings.RADIUS_GUARD`` times this radius.
        name: a label used in log and error messages
    """

    coefficient_at: Callable[[int], ComplexValue]
    radius_hint: Optional[float] = None
    name: str = "series"

    def __post_init__(self):
        if self.radius_hint is not None and not self.radius_hint > 0:
            raise ValueError(f"``radius_hint`` must be positive, got {self.radius_hint}.")


def _running_powers(z: complex) -> Callable[[int], complex]:
    r"""Returns ``n -> z**n`` computed by repeated multiplication (and remembered)."""
    powers = [1 + 0j]

    def power_at(n: int) -> complex:
        while len(powers) <= n:
            powers.append(powers[-1] * z)
        return powers[n]

    return power_at


def _sustained_growth(ratios: deque, growth: float) -> bool:
    r"""Whether the recent term ratios show geometric growth: every ratio is at least
    ``growth`` and the ratios are not shrinking."""
    ratios = list(ratios)
    if any(r < growth for r in ratios):
        return False
    return all(b >= a * (1 - _RATIO_SLACK) for a, b in zip(ratios, ratios[1:]))


def _accumulate(
    series: SeriesSpec, power_at: Callable[[int], ComplexValue], cfg: EvalConfig
) -> ValueWithError:
    r"""Sums ``a_n * power_at(n)`` with the stopping and divergence rules of the engine."""
    total = 0j
    small_run = 0
    recent = deque(maxlen=cfg.tail_run)
    ratios = deque(maxlen=cfg.tail_run)
    last_nonzero = 0.0

    for n in range(cfg.max_terms):
        a = complex(series.coefficient_at(n))
        term = 0j if a == 0 else a * complex(power_at(n))
        if not (np.isfinite(term.real) and np.isfinite(term.imag)):
            raise DivergentError(f"Term {n} of {series.name} is not finite.")

        total += term
        magnitude = abs(term)
        recent.append(magnitude)

        if magnitude < max(cfg.abs_tol, cfg.rel_tol * abs(total)):
            small_run += 1
            if small_run >= cfg.tail_run:
                log.debug("%s converged after %d terms.", series.name, n + 1)
                return ValueWithError(total, sum(recent), n + 1)
            continue

        small_run = 0
        if last_nonzero > 0:
            ratios.append(magnitude / last_nonzero)
        last_nonzero = magnitude
        if (
            n > DIVERGENCE_MIN_DEGREE
            and len(ratios) == cfg.tail_run
            and _sustained_growth(ratios, cfg.divergence_growth)
        ):
            raise DivergentError(
                f"The terms of {series.name} grow geometrically "
                f"(degree {n}, ratio {ratios[-1]:.3g})."
            )

    raise NonConvergentError(
        f"{series.name} did not meet its tolerance within {cfg.max_terms} terms."
    )


def evaluate(
    series: SeriesSpec, z: ComplexValue, cfg: Optional[EvalConfig] = None
) -> ValueWithError:
    r"""Evaluates a power series at a point.

    Args:
        series: the series
        z: the argument
        cfg: the evaluation config (defaults from the settings)

    Returns:
        ValueWithError: the partial sum, the sum of the magnitudes of the last ``tail_run``
        terms and the number of terms used

    Raises:
        DomainError: if ``|z|`` reaches ``settings.RADIUS_GUARD`` times the radius hint
        DivergentError: if the terms grow geometrically
        NonConvergentError: if ``cfg.max_terms`` terms do not suffice
    """
    z = as_complex(z)
    cfg = cfg or EvalConfig()
    if series.radius_hint is not None and abs(z) >= settings.RADIUS_GUARD * series.radius_hint:
        raise DomainError(
            f"|z| = {abs(z):.6g} is outside the guarded disk of {series.name} "
            f"(radius {series.radius_hint:.6g}, guard {settings.RADIUS_GUARD})."
        )
    return _accumulate(series, _running_powers(z), cfg)


def evaluate_with_powers(
    series: SeriesSpec,
    power_at: Callable[[int], ComplexValue],
    cfg: Optional[EvalConfig] = None,
) -> ValueWithError:
    r"""Evaluates :math:`\sum_n a_n p_n`, where :math:`p_n` replaces the :math:`n`-th power of
    the argument.

    ``power_at`` is only called for degrees with a non-zero coefficient, in increasing order.

    Args:
        series: the series
        power_at: the function returning :math:`p_n`
        cfg: the evaluation config (defaults from the settings)

    Returns:
        ValueWithError: as for :func:`evaluate`

    Raises:
        DivergentError: if the terms grow geometrically
        NonConvergentError: if ``cfg.max_terms`` terms do not suffice
    """
    cfg = cfg or EvalConfig()
    return _accumulate(series, power_at, cfg)
