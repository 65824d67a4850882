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
This module contains the q-exponentials :math:`e_q` and :math:`E_q`, the q-trigonometric
functions and the Daehee constant.

.. math::

    e_q(z) = \sum_{n\geq 0} \frac{z^n}{[n]_q!}, \qquad
    E_q(z) = \sum_{n\geq 0} \frac{q^{n(n-1)/2} z^n}{[n]_q!}, \qquad
    \cos_q x + i \sin_q x = e_q(ix).

The series of :math:`e_q`, :math:`\sin_q` and :math:`\cos_q` converge for
:math:`|z| < 1/(1-q)`; arguments beyond ``settings.RADIUS_GUARD`` times that radius are
rejected. :math:`e_q` is also available through its product form, which continues it
beyond the disk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from qtrig.math.caching import q_cache
from qtrig.math.kernels import big_eq_coefficients, inverse_q_factorials
from qtrig.math.qcore import (
    QParam,
    as_qparam,
    q_add_power,
    q_binomial_values,
    q_integer,
    q_pochhammer_infinite,
    q_sub_power,
)
from qtrig.math.series import (
    EvalConfig,
    SeriesSpec,
    ValueWithError,
    as_complex,
    evaluate,
    evaluate_with_powers,
)
from qtrig.utils.errors import DomainError, PoleError
from qtrig.utils.logger import create_logger
from qtrig.utils.settings import settings
from qtrig.utils.typing import ComplexValue, FunctionKind, QLike, RealVector, Sign

__all__ = [
    "FUNCTION_KINDS",
    "SERIES_KINDS",
    "series_spec",
    "QFunctionHandle",
    "DaeheeSequenceTerm",
    "eq_series",
    "eq_product",
    "Eq_series",
    "Eq_product",
    "sin_q",
    "cos_q",
    "tan_q",
    "sec_q",
    "csc_q",
    "cot_q",
    "daehee_constant",
    "daehee_sequence_term",
    "fn_at_qsum",
    "fn_at_scaled_qdiff",
]

log = create_logger(__name__)

FUNCTION_KINDS = ("e_q", "E_q", "sin_q", "cos_q", "tan_q", "sec_q", "csc_q", "cot_q")
SERIES_KINDS = ("e_q", "E_q", "sin_q", "cos_q")

# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ coefficient tables ~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def _read_only(table: np.ndarray) -> np.ndarray:
    table.flags.writeable = False
    return table


@q_cache
def _eq_table(n_terms: int, q: float) -> RealVector:
    return _read_only(inverse_q_factorials(n_terms, q))


@q_cache
def _big_eq_table(n_terms: int, q: float) -> RealVector:
    return _read_only(big_eq_coefficients(n_terms, q))


@q_cache
def _sin_table(n_terms: int, q: float) -> RealVector:
    table = np.array(_eq_table(n_terms, q))
    table[0::2] = 0.0
    table[3::4] *= -1
    return _read_only(table)


@q_cache
def _cos_table(n_terms: int, q: float) -> RealVector:
    table = np.array(_eq_table(n_terms, q))
    table[1::2] = 0.0
    table[2::4] *= -1
    return _read_only(table)


_TABLES = {"e_q": _eq_table, "E_q": _big_eq_table, "sin_q": _sin_table, "cos_q": _cos_table}


def series_spec(kind: FunctionKind, q: QLike, n_terms: Optional[int] = None) -> SeriesSpec:
    r"""The power series of one of the functions defined by a series.

    Args:
        kind: one of ``"e_q"``, ``"E_q"``, ``"sin_q"``, ``"cos_q"``
        q: the deformation parameter
        n_terms: how many coefficients to tabulate (defaults to ``settings.SERIES_MAX_TERMS``)

    Returns:
        SeriesSpec: the series, with radius hint :math:`1/(1-q)` (none for the entire
        :math:`E_q`)
    """
    if kind not in _TABLES:
        raise ValueError(f"{kind!r} is not defined by a power series; use one of {SERIES_KINDS}.")
    q = as_qparam(q)
    n_terms = n_terms or settings.SERIES_MAX_TERMS
    table = _TABLES[kind](n_terms, q)
    radius = None if kind == "E_q" else q.radius
    return SeriesSpec(coefficient_at=table.__getitem__, radius_hint=radius, name=f"{kind}[q={q.q}]")


def _series(kind: FunctionKind, q: QLike, cfg: EvalConfig) -> SeriesSpec:
    return series_spec(kind, q, cfg.max_terms)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ q-exponentials ~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def eq_series(z: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None) -> ValueWithError:
    r"""The q-exponential :math:`e_q(z) = \sum_n z^n/[n]_q!`, summed as a series.

    Raises:
        DomainError: if :math:`|z|` reaches the guarded part of the radius :math:`1/(1-q)`
    """
    cfg = cfg or EvalConfig()
    return evaluate(_series("e_q", q, cfg), z, cfg)


def eq_product(z: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None) -> ValueWithError:
    r"""The q-exponential through its product form :math:`e_q(z) = 1/(z(1-q):q)_\infty`.

    The product form is meromorphic and stays defined outside the disk of convergence of the
    series, away from the poles :math:`z = q^{-k}/(1-q)`.

    Args:
        z: the argument
        q: the deformation parameter
        cfg: the evaluation config

    Returns:
        ValueWithError: :math:`e_q(z)`, with the relative error of the truncated product

    Raises:
        PoleError: if a factor of the product is smaller than ``cfg.abs_tol`` in magnitude
    """
    z = as_complex(z)
    q = as_qparam(q)
    cfg = cfg or EvalConfig()
    product = q_pochhammer_infinite(z * (1 - q.q), q, cfg, pole_tol=cfg.abs_tol)
    magnitude = abs(product.value)
    return ValueWithError(
        1 / product.value, product.error_estimate / magnitude**2, product.terms_used
    )


def Eq_series(z: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None) -> ValueWithError:
    r"""The q-exponential :math:`E_q(z) = \sum_n q^{n(n-1)/2} z^n/[n]_q!`, summed as a series.
    :math:`E_q` is entire, so every finite argument is accepted."""
    cfg = cfg or EvalConfig()
    return evaluate(_series("E_q", q, cfg), z, cfg)


def Eq_product(z: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None) -> ValueWithError:
    r"""The q-exponential through its product form :math:`E_q(z) = (-z(1-q):q)_\infty`."""
    z = as_complex(z)
    q = as_qparam(q)
    return q_pochhammer_infinite(-z * (1 - q.q), q, cfg)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ q-trigonometry ~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def sin_q(x: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None) -> ValueWithError:
    r"""The q-sine :math:`\sin_q x = \sum_n (-1)^n x^{2n+1}/[2n+1]_q!`.

    Raises:
        DomainError: if :math:`|x|` reaches the guarded part of the radius :math:`1/(1-q)`
    """
    cfg = cfg or EvalConfig()
    return evaluate(_series("sin_q", q, cfg), x, cfg)


def cos_q(x: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None) -> ValueWithError:
    r"""The q-cosine :math:`\cos_q x = \sum_n (-1)^n x^{2n}/[2n]_q!`.

    Raises:
        DomainError: if :math:`|x|` reaches the guarded part of the radius :math:`1/(1-q)`
    """
    cfg = cfg or EvalConfig()
    return evaluate(_series("cos_q", q, cfg), x, cfg)


def _quotient(
    numerator: Optional[ValueWithError],
    denominator: ValueWithError,
    pole_tol: Optional[float],
    name: str,
) -> ValueWithError:
    r"""Divides two evaluated values, propagating their error estimates to first order.
    A missing numerator stands for the exact constant 1."""
    pole_tol = settings.POLE_TOL if pole_tol is None else pole_tol
    den = denominator.value
    if abs(den) < pole_tol:
        raise PoleError(f"The denominator of {name} is {abs(den):.3g}, below {pole_tol:.3g}.")
    num = 1.0 if numerator is None else numerator.value
    num_error = 0.0 if numerator is None else numerator.error_estimate
    num_terms = 0 if numerator is None else numerator.terms_used
    quotient = num / den
    error = (num_error + abs(quotient) * denominator.error_estimate) / abs(den)
    return ValueWithError(quotient, error, max(num_terms, denominator.terms_used))


def tan_q(
    x: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None, pole_tol: Optional[float] = None
) -> ValueWithError:
    r"""The q-tangent :math:`\tan_q x = \sin_q x / \cos_q x`.

    Args:
        x: the argument
        q: the deformation parameter
        cfg: the evaluation config
        pole_tol: the smallest accepted :math:`|\cos_q x|` (defaults to ``settings.POLE_TOL``)

    Raises:
        PoleError: if :math:`|\cos_q x|` is below ``pole_tol``
    """
    return _quotient(sin_q(x, q, cfg), cos_q(x, q, cfg), pole_tol, "tan_q")


def sec_q(
    x: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None, pole_tol: Optional[float] = None
) -> ValueWithError:
    r"""The q-secant :math:`\sec_q x = 1 / \cos_q x`; see :func:`tan_q` for the pole handling."""
    return _quotient(None, cos_q(x, q, cfg), pole_tol, "sec_q")


def csc_q(
    x: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None, pole_tol: Optional[float] = None
) -> ValueWithError:
    r"""The q-cosecant :math:`\csc_q x = 1 / \sin_q x`; in particular it has a pole at 0."""
    return _quotient(None, sin_q(x, q, cfg), pole_tol, "csc_q")


def cot_q(
    x: ComplexValue, q: QLike, cfg: Optional[EvalConfig] = None, pole_tol: Optional[float] = None
) -> ValueWithError:
    r"""The q-cotangent :math:`\cot_q x = \cos_q x / \sin_q x`."""
    return _quotient(cos_q(x, q, cfg), sin_q(x, q, cfg), pole_tol, "cot_q")


_FUNCTIONS: dict[str, Callable[..., ValueWithError]] = {
    "e_q": eq_series,
    "E_q": Eq_series,
    "sin_q": sin_q,
    "cos_q": cos_q,
    "tan_q": tan_q,
    "sec_q": sec_q,
    "csc_q": csc_q,
    "cot_q": cot_q,
}


@dataclass(frozen=True)
class QFunctionHandle:
    r"""One of the q-functions with its deformation parameter fixed.

    .. code::

        >>> cos = QFunctionHandle("cos_q", 0.5)
        >>> cos(0.0).value
        (1+0j)

    Args:
        kind: the function, one of :data:`FUNCTION_KINDS`
        q: the deformation parameter
    """

    kind: FunctionKind
    q: QParam

    def __post_init__(self):
        if self.kind not in FUNCTION_KINDS:
            raise ValueError(f"Unknown function {self.kind!r}; use one of {FUNCTION_KINDS}.")
        object.__setattr__(self, "q", as_qparam(self.q))

    @property
    def radius(self) -> Optional[float]:
        r"""The radius of the disk where the function is evaluated (``None`` if entire)."""
        return None if self.kind == "E_q" else self.q.radius

    def __call__(self, x: ComplexValue, cfg: Optional[EvalConfig] = None) -> ValueWithError:
        return _FUNCTIONS[self.kind](x, self.q, cfg)

    def as_evaluable(self, cfg: Optional[EvalConfig] = None):
        r"""This function as an :class:`~qtrig.special.qcalculus.Evaluable`, for use with the
        Jackson operators.

        Args:
            cfg: the evaluation config used for every evaluation

        Returns:
            Evaluable: the function :math:`x \mapsto` ``self(x, cfg).value``
        """
        # pylint: disable=import-outside-toplevel
        from qtrig.special.qcalculus import Evaluable

        radius = None if self.radius is None else settings.RADIUS_GUARD * self.radius
        return Evaluable(
            lambda x: self(x, cfg).value, domain_radius=radius, name=f"{self.kind}[q={self.q.q}]"
        )


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ Daehee constant ~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


@dataclass(frozen=True)
class DaeheeSequenceTerm:
    r"""A term :math:`(1 \oplus_q 1/[n]_q)^n` of the sequence converging to the Daehee
    constant :math:`e_q(1)`."""

    n: int
    value: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"The Daehee sequence starts at n = 1, got {self.n}.")
        if not np.isfinite(self.value):
            raise ValueError(f"The term {self.n} of the Daehee sequence is not finite.")


def daehee_constant(q: QLike, cfg: Optional[EvalConfig] = None) -> ValueWithError:
    r"""The Daehee constant :math:`e_q(1) = \sum_k 1/[k]_q!`, the q-analogue of Napier's
    constant."""
    return eq_series(1.0, q, cfg)


def daehee_sequence_term(n: int, q: QLike) -> DaeheeSequenceTerm:
    r"""The n-th term of the sequence

    .. math::

        \left(1 \oplus_q \frac{1}{[n]_q}\right)^n = \sum_{k=0}^n \binom{n}{k}_q [n]_q^{-k},

    whose limit is the Daehee constant. The row of binomials is built at ``q`` with the Pascal
    recurrence, so long sequences stay cheap.

    Args:
        n: a positive integer
        q: the deformation parameter

    Returns:
        DaeheeSequenceTerm: the term
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"``n`` must be a positive integer, got {n!r}.")
    n = int(n)
    q = as_qparam(q)
    inverse = 1 / q_integer(n, q)
    powers = np.cumprod(np.concatenate(([1.0], np.full(n, inverse))))
    value = float(np.dot(q_binomial_values(n, q), powers))
    return DaeheeSequenceTerm(n, value)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# ~~~~~~~~~~~~~~ composed arguments ~~~~~~~~~~~~
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~


def _check_bound(bound: float, q: QParam, what: str):
    limit = settings.RADIUS_GUARD * q.radius
    if not bound < limit:
        raise DomainError(f"{what} = {bound:.6g} must stay below {limit:.6g} at q = {q.q}.")


def fn_at_qsum(
    kind: FunctionKind,
    x: ComplexValue,
    y: ComplexValue,
    q: QLike,
    cfg: Optional[EvalConfig] = None,
) -> ValueWithError:
    r"""Evaluates :math:`e_q`, :math:`\sin_q` or :math:`\cos_q` at the q-sum
    :math:`x \oplus_q y`, that is, with :math:`(x \oplus_q y)^n` in place of the n-th power of
    the argument.

    Since :math:`|(x \oplus_q y)^n| \leq (|x|+|y|)^n`, the series converges when
    :math:`|x|+|y|` lies inside the guarded radius.

    Args:
        kind: one of ``"e_q"``, ``"sin_q"``, ``"cos_q"``
        x: the first summand
        y: the second summand
        q: the deformation parameter
        cfg: the evaluation config

    Returns:
        ValueWithError: the value at the q-sum

    Raises:
        DomainError: if :math:`|x|+|y|` reaches the guarded radius
    """
    if kind not in ("e_q", "sin_q", "cos_q"):
        raise ValueError(
            f"Evaluation at a q-sum is available for e_q, sin_q and cos_q, not {kind!r}."
        )
    x = as_complex(x, "x")
    y = as_complex(y, "y")
    q = as_qparam(q)
    cfg = cfg or EvalConfig()
    _check_bound(abs(x) + abs(y), q, "|x| + |y|")
    return evaluate_with_powers(_series(kind, q, cfg), lambda n: q_add_power(x, y, n, q), cfg)


def fn_at_scaled_qdiff(
    kind: FunctionKind,
    x: ComplexValue,
    q: QLike,
    sign: Sign = "-",
    cfg: Optional[EvalConfig] = None,
) -> ValueWithError:
    r"""Evaluates :math:`\sin_q` or :math:`\cos_q` at :math:`x(1 \ominus_q 1)` (``sign="-"``)
    or :math:`x(1 \oplus_q 1)` (``sign="+"``), with :math:`x^n (1 \mp_q 1)^n` in place of the
    n-th power of the argument.

    :math:`|(1 \ominus_q 1)^n| \leq 1` and :math:`|(1 \oplus_q 1)^n| \leq 2^n`, so the guard is
    on :math:`|x|` and :math:`2|x|` respectively.

    Args:
        kind: ``"sin_q"`` or ``"cos_q"``
        x: the scale
        q: the deformation parameter
        sign: ``"-"`` for the q-difference, ``"+"`` for the q-sum
        cfg: the evaluation config

    Returns:
        ValueWithError: the value at the scaled q-difference (or q-sum)

    Raises:
        DomainError: if the scaled argument reaches the guarded radius
    """
    if kind not in ("sin_q", "cos_q"):
        raise ValueError(
            f"Evaluation at a scaled q-difference is available for sin_q and cos_q, not {kind!r}."
        )
    if sign not in ("+", "-"):
        raise ValueError(f"``sign`` must be '+' or '-', got {sign!r}.")
    x = as_complex(x, "x")
    q = as_qparam(q)
    cfg = cfg or EvalConfig()
    scale = 2.0 if sign == "+" else 1.0
    _check_bound(scale * abs(x), q, "|x| |1 (+-) 1|")

    expansion = q_add_power if sign == "+" else q_sub_power
    unit_powers: dict[int, complex] = {}

    def power_at(n: int) -> complex:
        if n not in unit_powers:
            unit_powers[n] = expansion(1.0, 1.0, n, q)
        return x**n * unit_powers[n]

    return evaluate_with_powers(_series(kind, q, cfg), power_at, cfg)
