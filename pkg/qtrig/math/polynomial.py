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
This module contains :class:`QPolynomial`, an exact polynomial in ``q`` with arbitrary-precision
integer coefficients. It is the home of the Gaussian binomial coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Union

import numpy as np

from .kernels import horner

__all__ = ["QPolynomial"]


class QPolynomial:
    r"""
    An exact polynomial :math:`\sum_j c_j q^j` with integer coefficients.

    Coefficients are stored lowest degree first, as Python integers (so they never overflow),
    and trailing zeros are stripped: the zero polynomial has an empty coefficient tuple and
    degree ``-1``.

    .. code::

        >>> p = QPolynomial([1, 1, 2, 1, 1])
        >>> p
        QPolynomial(1 + q + 2q^2 + q^3 + q^4)
        >>> p(1)
        6

    Args:
        coefficients: the integer coefficients, lowest degree first

    Raises:
        TypeError: if a coefficient is not an integer
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coefficients = list(coefficients)
        for c in coefficients:
            if not isinstance(c, (Integral, np.integer)):
                raise TypeError(f"QPolynomial coefficients must be integers, got {c!r}.")
        coefficients = [int(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)

    @classmethod
    def one(cls) -> QPolynomial:
        r"""The constant polynomial ``1``."""
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> QPolynomial:
        r"""The polynomial ``coefficient * q**degree``."""
        if degree < 0:
            raise ValueError(f"The degree of a monomial must be non-negative, got {degree}.")
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self) -> tuple[int, ...]:
        r"""The integer coefficients, lowest degree first."""
        return self._coefficients

    @property
    def degree(self) -> int:
        r"""The degree of the polynomial (``-1`` for the zero polynomial)."""
        return len(self._coefficients) - 1

    def shift(self, k: int) -> QPolynomial:
        r"""Returns the product of this polynomial with :math:`q^k`."""
        if k < 0:
            raise ValueError(f"Cannot shift by a negative power, got {k}.")
        if not self._coefficients:
            return self
        return QPolynomial((0,) * k + self._coefficients)

    def is_palindromic(self) -> bool:
        r"""Whether the coefficient list reads the same in both directions."""
        return self._coefficients == self._coefficients[::-1]

    def to_numpy(self) -> np.ndarray:
        r"""The coefficients as a float64 array, lowest degree first."""
        return np.fromiter(
            (float(c) for c in self._coefficients), dtype=np.float64, count=len(self._coefficients)
        )

    def __call__(self, q: Union[int, Fraction, float]) -> Union[int, Fraction, float]:
        r"""Evaluates the polynomial at ``q``.

        Integer and rational arguments are evaluated exactly; anything else is evaluated in
        floating point with Horner's scheme.
        """
        if isinstance(q, (Integral, Rational)) and not isinstance(q, bool):
            acc = 0
            for c in reversed(self._coefficients):
                acc = acc * q + c
            return acc
        if not self._coefficients:
            return 0.0
        return float(horner(self.to_numpy(), float(q)))

    def __add__(self, other: QPolynomial) -> QPolynomial:
        if isinstance(other, Integral):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self._coefficients, other._coefficients
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial([x + (b[j] if j < len(b) else 0) for j, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial([-c for c in self._coefficients])

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        if isinstance(other, Integral):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        if isinstance(other, Integral):
            return QPolynomial([other * c for c in self._coefficients])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self._coefficients or not other._coefficients:
            return QPolynomial()
        out = [0] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            if a:
                for j, b in enumerate(other._coefficients):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Integral):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(("QPolynomial", self._coefficients))

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        terms = []
        for j, c in enumerate(self._coefficients):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            power = "q" if j == 1 else f"q^{j}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}{power}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QPolynomial({self})"
