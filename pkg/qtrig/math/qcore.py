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
This module contains the q-combinatorics: the deformation parameter, q-integers and
q-factorials, q-shifted factorials (finite and infinite), Gaussian binomial coefficients
and the q-addition and q-subtraction power expansions.

Gaussian binomials are built exactly, as integer polynomials in ``q``, through the Pascal rule

.. math::

    \binom{n}{k}_q = q^k \binom{n-1}{k}_q + \binom{n-1}{k-1}_q,

and only then evaluated at a numerical ``q``. The factorial quotient is kept as an independent
cross-check (:func:`q_binomial_quotient`).
"""

from __future__ import annotations

from functools import lru_cache
from numbers import Integral
from typing import Optional

import numpy as np

from qtrig.math.caching import q_cache
from qtrig.math.kernels import binomial_row_values, shifted_factorial_product
from qtrig.math.polynomial import QPolynomial
from qtrig.math.series import EvalConfig, ValueWithError, as_complex
from qtrig.utils.errors import DomainError, NonConvergentError, PoleError
from qtrig.utils.logger import create_logger
from qtrig.utils.typing import ComplexValue, QLike, RealVector

__all__ = [
    "QParam",
    "as_qparam",
    "q_integer",
    "q_number",
    "q_factorial",
    "q_shifted_factorial",
    "q_pochhammer_infinite",
    "q_binomial_row",
    "q_binomial_poly",
    "q_binomial_values",
    "q_binomial_numeric",
    "q_binomial_quotient",
    "q_add_power",
    "q_sub_power",
]

log = create_logger(__name__)


class QParam:
    r"""The deformation parameter :math:`q`, restricted to the real interval :math:`(0, 1)`.

    Values within ``QParam.EDGE`` of 1 are rejected, as :math:`1 - q` would no longer carry
    enough digits for the q-integers.

    Args:
        q: the value of the parameter

    Raises:
        DomainError: if ``q`` is not a real number in :math:`(0, 1 - \text{EDGE}]`
    """

    EDGE = 1e-12

    __slots__ = ("_q",)

    def __init__(self, q: QLike):
        if isinstance(q, QParam):
            q = q.q
        if isinstance(q, (complex, np.complexfloating)):
            raise DomainError(f"``q`` must be real, got {q}.")
        try:
            q = float(q)
        except (TypeError, ValueError) as e:
            raise DomainError(f"``q`` must be a real number, got {q!r}.") from e
        if not (np.isfinite(q) and 0 < q < 1):
            raise DomainError(f"``q`` must lie in (0, 1), got {q}.")
        if 1 - q < self.EDGE:
            raise DomainError(f"``q`` = {q!r} is too close to 1.")
        self._q = q

    @property
    def q(self) -> float:
        r"""The value of the parameter."""
        return self._q

    @property
    def radius(self) -> float:
        r"""The radius of convergence :math:`1/(1-q)` of the q-exponential series."""
        return 1 / (1 - self._q)

    def __float__(self) -> float:
        return self._q

    def __eq__(self, other) -> bool:
        if isinstance(other, QParam):
            return self._q == other._q
        if isinstance(other, (float, int, np.floating)):
            return self._q == float(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._q)

    def __repr__(self) -> str:
        return f"QParam({self._q!r})"


def as_qparam(q: QLike) -> QParam:
    r"""Returns ``q`` as a validated :class:`QParam`."""
    return q if isinstance(q, QParam) else QParam(q)


def _check_index(n, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, (Integral, np.integer)):
        raise TypeError(f"``{name}`` must be an integer, got {n!r}.")
    if n < 0:
        raise ValueError(f"``{name}`` must be non-negative, got {n}.")
    return int(n)


def q_integer(n: int, q: QLike) -> float:
    r"""The q-integer :math:`[n]_q = (1 - q^n)/(1 - q) = 1 + q + \dots + q^{n-1}`.

    Args:
        n: a non-negative integer
        q: the deformation parameter

    Returns:
        float: :math:`[n]_q`, exactly 0 for ``n = 0``
    """
    n = _check_index(n)
    q = as_qparam(q).q
    if n == 0:
        return 0.0
    return (1 - q**n) / (1 - q)


def q_number(x: float, q: QLike) -> float:
    r"""The generalized q-number :math:`[x]_q = (1 - q^x)/(1 - q)` of a real ``x``.

    Args:
        x: a real number
        q: the deformation parameter

    Returns:
        float: :math:`[x]_q`
    """
    q = as_qparam(q).q
    x = float(x)
    if not np.isfinite(x):
        raise DomainError(f"``x`` must be finite, got {x}.")
    return float(np.expm1(x * np.log(q)) / (q - 1))


def q_factorial(n: int, q: QLike) -> float:
    r"""The q-factorial :math:`[n]_q! = [n]_q [n-1]_q \cdots [1]_q`.

    Args:
        n: a non-negative integer
        q: the deformation parameter

    Returns:
        float: :math:`[n]_q!`, 1 for ``n = 0``
    """
    n = _check_index(n)
    q = as_qparam(q)
    result = 1.0
    for k in range(1, n + 1):
        result *= q_integer(k, q)
    return result


def q_shifted_factorial(a: ComplexValue, q: QLike, k: int) -> complex:
    r"""The q-shifted factorial :math:`(a:q)_k = (1-a)(1-aq)\cdots(1-aq^{k-1})`.

    Args:
        a: the base
        q: the deformation parameter
        k: the number of factors

    Returns:
        complex: :math:`(a:q)_k`, 1 for ``k = 0``
    """
    a = as_complex(a, "a")
    k = _check_index(k, "k")
    q = as_qparam(q).q
    value, _ = shifted_factorial_product(a, q, k)
    return complex(value)


def q_pochhammer_infinite(
    a: ComplexValue,
    q: QLike,
    cfg: Optional[EvalConfig] = None,
    pole_tol: Optional[float] = None,
) -> ValueWithError:
    r"""The infinite q-shifted factorial :math:`(a:q)_\infty = \lim_k (a:q)_k`.

    The product is truncated after the first :math:`K` factors, where :math:`K` is the
    smallest index with :math:`|a q^K| < \text{abs_tol}`. The dropped factors multiply the
    value by :math:`1 + O(|a q^K|/(1-q))`, which is the relative error reported.

    Args:
        a: the base
        q: the deformation parameter
        cfg: the evaluation config; ``abs_tol`` is the tail tolerance and ``max_factors`` caps
            the number of factors
        pole_tol: if given, a factor smaller than this in magnitude raises a ``PoleError``

    Returns:
        ValueWithError: the truncated product, its error estimate and the number of factors

    Raises:
        NonConvergentError: if more than ``cfg.max_factors`` factors would be needed
        PoleError: if ``pole_tol`` is given and a factor is smaller
    """
    a = as_complex(a, "a")
    q = as_qparam(q).q
    cfg = cfg or EvalConfig()

    if a == 0:
        return ValueWithError(1.0, 0.0, 0)

    magnitude = abs(a)
    if magnitude < cfg.abs_tol:
        n_factors = 0
    else:
        n_factors = int(np.floor(np.log(cfg.abs_tol / magnitude) / np.log(q))) + 1
    if n_factors > cfg.max_factors:
        raise NonConvergentError(
            f"(a:q)_inf with |a| = {magnitude:.6g} needs {n_factors} factors, "
            f"more than the cap of {cfg.max_factors}."
        )

    value, smallest = shifted_factorial_product(a, q, n_factors)
    if pole_tol is not None and smallest < pole_tol:
        raise PoleError(f"A factor of (a:q)_inf has magnitude {smallest:.3g} at a = {a}.")

    dropped = magnitude * q**n_factors / (1 - q)
    log.debug("(a:q)_inf truncated after %d factors.", n_factors)
    return ValueWithError(value, abs(value) * dropped, n_factors)


@lru_cache(maxsize=128)
def _binomial_row(n: int) -> tuple[QPolynomial, ...]:
    if n == 0:
        return (QPolynomial.one(),)
    previous = _binomial_row(n - 1)
    middle = tuple(previous[k].shift(k) + previous[k - 1] for k in range(1, n))
    return (QPolynomial.one(),) + middle + (QPolynomial.one(),)


def q_binomial_row(n: int) -> tuple[QPolynomial, ...]:
    r"""The exact Gaussian binomial coefficients :math:`\binom{n}{0}_q, \dots, \binom{n}{n}_q`.

    Rows are memoized; the memo is a ``functools.lru_cache`` and is safe under concurrent use.

    Args:
        n: a non-negative integer

    Returns:
        tuple[QPolynomial]: the ``n + 1`` polynomials of the row
    """
    n = _check_index(n)
    # fill the memo in steps so that the recursion stays shallow for large n
    for m in range(0, n, 64):
        _binomial_row(m)
    return _binomial_row(n)


def q_binomial_poly(n: int, k: int) -> QPolynomial:
    r"""The Gaussian binomial coefficient :math:`\binom{n}{k}_q` as an exact polynomial in ``q``.

    Args:
        n: the upper index
        k: the lower index

    Returns:
        QPolynomial: a palindromic polynomial of degree :math:`k(n-k)` with non-negative
        coefficients summing to :math:`\binom{n}{k}`

    Raises:
        IndexError: unless :math:`0 \leq k \leq n`
    """
    if isinstance(n, bool) or isinstance(k, bool):
        raise TypeError("The indices of a Gaussian binomial must be integers.")
    if not (isinstance(n, (Integral, np.integer)) and isinstance(k, (Integral, np.integer))):
        raise TypeError(f"The indices of a Gaussian binomial must be integers, got {n!r}, {k!r}.")
    if n < 0 or k < 0 or k > n:
        raise IndexError(f"The Gaussian binomial ({n} {k})_q requires 0 <= k <= n.")
    return q_binomial_row(int(n))[int(k)]


@q_cache
def q_binomial_values(n: int, q: float) -> RealVector:
    r"""The row of Gaussian binomial coefficients :math:`\binom{n}{k}_q`, :math:`k = 0..n`,
    evaluated at ``q``.

    The row is built numerically with the recurrence of the exact polynomials, in
    :math:`O(n^2)` operations, so that long rows stay cheap.

    The returned array is cached and read-only.

    Args:
        n: a non-negative integer
        q: the deformation parameter

    Returns:
        np.ndarray: the float64 row
    """
    q = as_qparam(q).q
    row = binomial_row_values(_check_index(n), q)
    row.flags.writeable = False
    return row


def q_binomial_numeric(x: float, k: int, q: QLike) -> float:
    r"""The Gaussian binomial coefficient with a real upper index,

    .. math::

        \binom{x}{k}_q = \frac{(1-q^x)(1-q^{x-1})\cdots(1-q^{x-k+1})}{[k]_q!\,(1-q)^k}.

    Each factor :math:`(1-q^{x-j})/(1-q^{j+1})` is computed with ``expm1``, which keeps
    its digits as ``q`` approaches 1.

    Args:
        x: the (real) upper index
        k: the lower index
        q: the deformation parameter

    Returns:
        float: the coefficient; 1 for ``k = 0``
    """
    k = _check_index(k, "k")
    x = float(x)
    if not np.isfinite(x):
        raise DomainError(f"``x`` must be finite, got {x}.")
    log_q = np.log(as_qparam(q).q)
    j = np.arange(k, dtype=np.float64)
    ratios = np.expm1((x - j) * log_q) / np.expm1((j + 1) * log_q)
    return float(np.prod(ratios))


def q_binomial_quotient(n: int, k: int, q: QLike) -> float:
    r"""The Gaussian binomial coefficient as the quotient
    :math:`(q:q)_n / ((q:q)_k (q:q)_{n-k})`.

    Raises:
        IndexError: unless :math:`0 \leq k \leq n`
    """
    n = _check_index(n)
    k = _check_index(k, "k")
    if k > n:
        raise IndexError(f"The Gaussian binomial ({n} {k})_q requires 0 <= k <= n.")
    q = as_qparam(q)
    numerator = q_shifted_factorial(q.q, q, n)
    denominator = q_shifted_factorial(q.q, q, k) * q_shifted_factorial(q.q, q, n - k)
    return float((numerator / denominator).real)


def _powers(z: complex, n: int) -> np.ndarray:
    r"""Returns ``[1, z, z**2, ..., z**n]`` built by repeated multiplication."""
    factors = np.full(n + 1, z, dtype=np.complex128)
    factors[0] = 1.0
    return np.cumprod(factors)


def q_add_power(x: ComplexValue, y: ComplexValue, n: int, q: QLike) -> complex:
    r"""The n-th power of a q-sum,

    .. math::

        (x \oplus_q y)^n = \sum_{k=0}^n \binom{n}{k}_q x^k y^{n-k}.

    Args:
        x: the first summand
        y: the second summand
        n: the power
        q: the deformation parameter

    Returns:
        complex: :math:`(x \oplus_q y)^n`
    """
    x = as_complex(x, "x")
    y = as_complex(y, "y")
    n = _check_index(n)
    binomials = q_binomial_values(n, as_qparam(q))
    return complex(np.sum(binomials * _powers(x, n) * _powers(y, n)[::-1]))


def q_sub_power(x: ComplexValue, y: ComplexValue, n: int, q: QLike) -> complex:
    r"""The n-th power of a q-difference,
    :math:`(x \ominus_q y)^n = \sum_{k=0}^n \binom{n}{k}_q (-1)^{n-k} x^k y^{n-k}`,
    that is, :math:`(x \oplus_q (-y))^n`.
    """
    return q_add_power(x, -as_complex(y, "y"), n, q)
