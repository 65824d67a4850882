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
This module contains the Jackson q-derivative and q-integral,

.. math::

    D_q f(x) = \frac{f(x) - f(qx)}{(1-q)x}, \qquad
    \int_0^x f(t)\, d_q t = (1-q) \sum_{k\geq 0} f(q^k x)\, q^k x,

together with the rules of q-calculus (fundamental theorem, product and quotient rules,
integration by parts) written as residuals, and the derivatives and antiderivatives of the
q-trigonometric functions.

The telescoping sum behind the fundamental theorem converges to :math:`f(x) - f(0)`, so the
residuals subtract the boundary value at the origin. Pass ``subtract_origin=False`` to get the
uncorrected forms, which only vanish when that boundary value is zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np

from qtrig.math.qcore import as_qparam, q_integer
from qtrig.math.series import EvalConfig, ValueWithError, as_complex
from qtrig.special.qfunctions import cos_q, sin_q, tan_q
from qtrig.utils.errors import DomainError, NonConvergentError, PoleError
from qtrig.utils.logger import create_logger
from qtrig.utils.reports import IdentityReport
from qtrig.utils.settings import settings
from qtrig.utils.typing import ComplexValue, QLike

__all__ = [
    "Evaluable",
    "QuadratureConfig",
    "jackson_derivative",
    "q_derivative",
    "jackson_integral",
    "fundamental_theorem_check",
    "product_rule_residual",
    "quotient_rule_residual",
    "integration_by_parts_residual",
    "qtrig_derivative_suite",
    "monomial_derivative",
]

log = create_logger(__name__)

_EPS = np.finfo(np.float64).eps

Scalar = Union[complex, float, int]


class Evaluable:
    r"""A deterministic complex function of a complex variable, the operand of the Jackson
    operators.

    Evaluables support ``+``, ``-``, ``*`` and ``/`` between themselves and with scalars, so
    that integrands like :math:`1 + \tan_q t \tan_q(qt)` can be assembled from pieces.

    .. code::

        >>> f = Evaluable.monomial(2) + 1
        >>> f(2.0)
        (5+0j)

    Args:
        fn: the function; it must be reentrant
        domain_radius: if given, arguments with a larger magnitude raise a ``DomainError``
        name: a label used in messages
    """

    __slots__ = ("_fn", "domain_radius", "name")

    def __init__(
        self,
        fn: Callable[[complex], ComplexValue],
        domain_radius: Optional[float] = None,
        name: str = "f",
    ):
        if domain_radius is not None and not domain_radius > 0:
            raise ValueError(f"``domain_radius`` must be positive, got {domain_radius}.")
        self._fn = fn
        self.domain_radius = domain_radius
        self.name = name

    @classmethod
    def constant(cls, value: Scalar) -> Evaluable:
        r"""The constant function ``value``."""
        value = as_complex(value, "value")
        return cls(lambda _: value, name=f"{value}")

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1.0) -> Evaluable:
        r"""The function :math:`c\,t^n`."""
        if degree < 0:
            raise ValueError(f"The degree of a monomial must be non-negative, got {degree}.")
        coefficient = as_complex(coefficient, "coefficient")
        return cls(lambda t: coefficient * t**degree, name=f"t^{degree}")

    def scaled(self, factor: Scalar) -> Evaluable:
        r"""The function :math:`t \mapsto f(\lambda t)`."""
        factor = as_complex(factor, "factor")
        radius = None
        if self.domain_radius is not None and factor != 0:
            radius = self.domain_radius / abs(factor)
        return Evaluable(lambda t: self(factor * t), radius, f"{self.name}({factor}t)")

    def __call__(self, x: ComplexValue) -> complex:
        x = as_complex(x, "x")
        if self.domain_radius is not None and abs(x) > self.domain_radius:
            raise DomainError(
                f"{self.name} is evaluated at |x| = {abs(x):.6g}, "
                f"outside its domain of radius {self.domain_radius:.6g}."
            )
        return complex(self._fn(x))

    def _combine(self, other, op: Callable[[complex, complex], complex], symbol: str) -> Evaluable:
        if not isinstance(other, Evaluable):
            other = Evaluable.constant(other)
        radii = [r for r in (self.domain_radius, other.domain_radius) if r is not None]
        return Evaluable(
            lambda t: op(self(t), other(t)),
            min(radii) if radii else None,
            f"({self.name} {symbol} {other.name})",
        )

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b, "+")

    def __radd__(self, other):
        return Evaluable.constant(other) + self

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b, "-")

    def __rsub__(self, other):
        return Evaluable.constant(other) - self

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b, "*")

    def __rmul__(self, other):
        return Evaluable.constant(other) * self

    def __truediv__(self, other):
        return self._combine(other, _divide, "/")

    def __rtruediv__(self, other):
        return Evaluable.constant(other) / self

    def __neg__(self):
        return self * -1.0

    def __repr__(self) -> str:
        return f"Evaluable({self.name})"


def _divide(a: complex, b: complex) -> complex:
    if abs(b) < settings.POLE_TOL:
        raise PoleError(f"Division by {abs(b):.3g}, below the pole tolerance.")
    return a / b


@dataclass(frozen=True)
class QuadratureConfig:
    r"""Stopping rule and cap of the Jackson integral.

    Args:
        tail_tol: size below which a summand counts as negligible
        max_points: the number of geometric points after which the integral gives up
        tail_run: the number of consecutive negligible summands needed to stop
    """

    tail_tol: float = field(default_factory=lambda: settings.QUADRATURE_TAIL_TOL)
    max_points: int = field(default_factory=lambda: settings.QUADRATURE_MAX_POINTS)
    tail_run: int = 3

    def __post_init__(self):
        if not self.tail_tol > 0:
            raise ValueError(f"``tail_tol`` must be positive, got {self.tail_tol}.")
        if self.max_points < 8:
            raise ValueError(f"``max_points`` must be at least 8, got {self.max_points}.")
        if not 1 <= self.tail_run <= self.max_points:
            raise ValueError(f"``tail_run`` must lie in [1, max_points], got {self.tail_run}.")


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ Jackson operators ~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def jackson_derivative(f: Evaluable, x: ComplexValue, q: QLike) -> complex:
    r"""The Jackson derivative :math:`D_q f(x) = (f(x) - f(qx))/((1-q)x)`.

    Args:
        f: the function
        x: a non-zero point
        q: the deformation parameter

    Returns:
        complex: :math:`D_q f(x)`

    Raises:
        DomainError: at ``x = 0``, where the two-point formula is undefined
    """
    x = as_complex(x, "x")
    q = as_qparam(q).q
    if x == 0:
        raise DomainError("The Jackson derivative is not defined at x = 0.")
    return (f(x) - f(q * x)) / ((1 - q) * x)


def q_derivative(f: Evaluable, q: QLike) -> Evaluable:
    r"""The function :math:`D_q f` as an :class:`Evaluable`."""
    q = as_qparam(q)
    return Evaluable(lambda t: jackson_derivative(f, t, q), f.domain_radius, f"D_q {f.name}")


def jackson_integral(
    f: Evaluable, x: float, q: QLike, cfg: Optional[QuadratureConfig] = None
) -> ValueWithError:
    r"""The Jackson integral :math:`\int_0^x f(t)\, d_q t` over the points :math:`q^k x`.

    The sum stops once ``cfg.tail_run`` consecutive summands fall below ``cfg.tail_tol``;
    the error estimate bounds the remaining tail by a geometric series started at the last
    summand, plus the rounding accumulated over the summands.

    Args:
        f: the integrand, evaluable on :math:`(0, x]`
        x: a real non-negative upper limit
        q: the deformation parameter
        cfg: the quadrature config

    Returns:
        ValueWithError: the integral, its error estimate and the number of points used

    Raises:
        DomainError: if ``x`` is negative or not real
        NonConvergentError: if ``cfg.max_points`` points do not suffice
    """
    z = as_complex(x, "x")
    if z.imag != 0 or z.real < 0:
        raise DomainError(f"The Jackson integral needs a real non-negative upper limit, got {z}.")
    x = z.real
    q = as_qparam(q).q
    cfg = cfg or QuadratureConfig()
    if x == 0:
        return ValueWithError(0.0, 0.0, 0)

    total = 0j
    magnitudes = 0.0
    small_run = 0
    for k in range(cfg.max_points):
        point = x * q**k
        summand = (1 - q) * point * f(point)
        total += summand
        magnitude = abs(summand)
        magnitudes += magnitude
        if magnitude < cfg.tail_tol:
            small_run += 1
            if small_run >= cfg.tail_run:
                log.debug("Jackson integral of %s used %d points.", f.name, k + 1)
                error = magnitude * q / (1 - q) + _EPS * magnitudes
                return ValueWithError(total, error, k + 1)
        else:
            small_run = 0
    raise NonConvergentError(
        f"The Jackson integral of {f.name} up to {x} needs more than {cfg.max_points} points."
    )


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ rules of q-calculus ~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def fundamental_theorem_check(
    f: Evaluable,
    x: float,
    q: QLike,
    cfg: Optional[QuadratureConfig] = None,
    subtract_origin: bool = True,
) -> ValueWithError:
    r"""The residual of the fundamental theorem of q-calculus,

    .. math::

        \int_0^x D_q f(t)\, d_q t - \left(f(x) - f(0)\right).

    Args:
        f: the function, evaluable on :math:`[0, x]`
        x: a real non-negative point
        q: the deformation parameter
        cfg: the quadrature config
        subtract_origin: if ``False``, the residual is taken against :math:`f(x)` alone

    Returns:
        ValueWithError: the residual, with the error estimate of the integral
    """
    integral = jackson_integral(q_derivative(f, q), x, q, cfg)
    boundary = f(x) - (f(0.0) if subtract_origin else 0.0)
    error = integral.error_estimate + 4 * _EPS * abs(boundary)
    return ValueWithError(integral.value - boundary, error, integral.terms_used)


def product_rule_residual(f: Evaluable, g: Evaluable, x: ComplexValue, q: QLike) -> complex:
    r"""The residual of the q-product rule
    :math:`D_q(fg)(x) - \left[f(x) D_q g(x) + g(qx) D_q f(x)\right]`.

    Raises:
        DomainError: at ``x = 0``
    """
    x = as_complex(x, "x")
    q = as_qparam(q)
    derivative = jackson_derivative(f * g, x, q)
    expansion = f(x) * jackson_derivative(g, x, q) + g(q.q * x) * jackson_derivative(f, x, q)
    return derivative - expansion


def quotient_rule_residual(
    f: Evaluable, g: Evaluable, x: ComplexValue, q: QLike, pole_tol: Optional[float] = None
) -> complex:
    r"""The residual of the q-quotient rule

    .. math::

        D_q\left(\frac{f}{g}\right)(x)
        - \frac{D_q f(x)\, g(qx) - f(qx)\, D_q g(x)}{g(x)\, g(qx)}.

    Raises:
        DomainError: at ``x = 0``
        PoleError: if :math:`|g(x)|` or :math:`|g(qx)|` is below ``pole_tol``
            (defaults to ``settings.POLE_TOL``)
    """
    x = as_complex(x, "x")
    q = as_qparam(q)
    pole_tol = settings.POLE_TOL if pole_tol is None else pole_tol
    g_x, g_qx = g(x), g(q.q * x)
    if min(abs(g_x), abs(g_qx)) < pole_tol:
        raise PoleError(f"The denominator {g.name} is below {pole_tol:.3g} near x = {x}.")
    derivative = jackson_derivative(f / g, x, q)
    expansion = (jackson_derivative(f, x, q) * g_qx - f(q.q * x) * jackson_derivative(g, x, q)) / (
        g_x * g_qx
    )
    return derivative - expansion


def integration_by_parts_residual(
    f: Evaluable,
    g: Evaluable,
    x: float,
    q: QLike,
    cfg: Optional[QuadratureConfig] = None,
    subtract_origin: bool = True,
) -> complex:
    r"""The residual of q-integration by parts,

    .. math::

        \int_0^x f(t) D_q g(t)\, d_q t
        - \left[f(x)g(x) - f(0)g(0) - \int_0^x g(qt) D_q f(t)\, d_q t\right].

    Args:
        f: the first function, evaluable on :math:`[0, x]`
        g: the second function, evaluable on :math:`[0, x]`
        x: a real non-negative point
        q: the deformation parameter
        cfg: the quadrature config
        subtract_origin: if ``False``, the boundary term :math:`f(0)g(0)` is left out

    Returns:
        complex: the residual
    """
    q = as_qparam(q)
    lhs = jackson_integral(f * q_derivative(g, q), x, q, cfg)
    shifted = g.scaled(q.q) * q_derivative(f, q)
    rhs_integral = jackson_integral(shifted, x, q, cfg)
    boundary = f(x) * g(x) - (f(0.0) * g(0.0) if subtract_origin else 0.0)
    return lhs.value - (boundary - rhs_integral.value)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ q-trigonometric calculus ~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

DERIVATIVE_SUITE_TOLERANCE = 1e-8


def _trig_evaluables(q, cfg: Optional[EvalConfig]) -> tuple[Evaluable, Evaluable, Evaluable]:
    radius = settings.RADIUS_GUARD * as_qparam(q).radius
    sin = Evaluable(lambda t: sin_q(t, q, cfg).value, radius, "sin_q")
    cos = Evaluable(lambda t: cos_q(t, q, cfg).value, radius, "cos_q")
    tan = Evaluable(lambda t: tan_q(t, q, cfg).value, radius, "tan_q")
    return sin, cos, tan


def qtrig_derivative_suite(
    x: ComplexValue,
    q: QLike,
    cfg: Optional[EvalConfig] = None,
    quadrature: Optional[QuadratureConfig] = None,
) -> list[IdentityReport]:
    r"""Checks the derivatives and antiderivatives of the q-trigonometric functions at ``x``:

    .. math::

        D_q \sin_q x = \cos_q x, \quad D_q \cos_q x = -\sin_q x, \quad
        D_q \tan_q x = 1 + \tan_q x \tan_q(qx),

        \int_0^x \sin_q t\, d_q t = 1 - \cos_q x, \quad
        \int_0^x \cos_q t\, d_q t = \sin_q x, \quad
        \int_0^x (1 + \tan_q t \tan_q(qt))\, d_q t = \tan_q x.

    The derivative checks are left out at ``x = 0``, and the integral checks need a real
    non-negative ``x``. Residuals are measured relative to :math:`\max(1, |\text{value}|)` and
    compared with ``1e-8``.

    Args:
        x: the point
        q: the deformation parameter
        cfg: the series config
        quadrature: the quadrature config

    Returns:
        list[IdentityReport]: one single-sample report per identity checked

    Raises:
        PoleError: if ``x`` or ``qx`` is too close to a zero of :math:`\cos_q`
    """
    x = as_complex(x, "x")
    q = as_qparam(q)
    sin, cos, tan = _trig_evaluables(q, cfg)
    one_plus_tan_tan = 1 + tan * tan.scaled(q.q)

    checks: list[tuple[str, Callable[[], complex], Callable[[], complex]]] = []
    if x != 0:
        checks += [
            ("calculus.dq_sin_q", lambda: jackson_derivative(sin, x, q), lambda: cos(x)),
            ("calculus.dq_cos_q", lambda: jackson_derivative(cos, x, q), lambda: -sin(x)),
            (
                "calculus.dq_tan_q",
                lambda: jackson_derivative(tan, x, q),
                lambda: one_plus_tan_tan(x),
            ),
        ]
    if x.imag == 0 and x.real >= 0:
        checks += [
            (
                "calculus.integral_sin_q",
                lambda: jackson_integral(sin, x.real, q, quadrature).value,
                lambda: 1 - cos(x),
            ),
            (
                "calculus.integral_cos_q",
                lambda: jackson_integral(cos, x.real, q, quadrature).value,
                lambda: sin(x),
            ),
            (
                "calculus.integral_tan_q",
                lambda: jackson_integral(one_plus_tan_tan, x.real, q, quadrature).value,
                lambda: tan(x),
            ),
        ]
    if not checks:
        raise DomainError(f"No q-trigonometric identity can be checked at x = {x}.")

    reports = []
    for identity_id, lhs, rhs in checks:
        expected = rhs()
        residual = abs(lhs() - expected) / max(1.0, abs(expected))
        reports.append(
            IdentityReport.from_residuals(
                identity_id, q.q, [residual], [x], DERIVATIVE_SUITE_TOLERANCE
            )
        )
    return reports


def monomial_derivative(n: int, x: ComplexValue, q: QLike) -> complex:
    r"""The closed form :math:`D_q t^n = [n]_q x^{n-1}`."""
    x = as_complex(x, "x")
    return q_integer(n, q) * x ** (n - 1) if n > 0 else 0j
