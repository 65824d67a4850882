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
This module contains the numba kernels behind the q-combinatorics: coefficient tables of the
q-exponential series, Horner evaluation, truncated q-shifted factorials and rows of Gaussian
binomial coefficients.
"""

import numpy as np
from numba import njit

__all__ = [
    "inverse_q_factorials",
    "big_eq_coefficients",
    "horner",
    "shifted_factorial_product",
    "binomial_row_values",
]


@njit
def inverse_q_factorials(n_terms: int, q: float):  # pragma: no cover
    r"""Returns the table :math:`1/[k]_q!` for :math:`k = 0, \dots, n_terms - 1`.

    The table is filled with the ratio :math:`[k-1]_q!/[k]_q! = (1-q)/(1-q^k)`, so that it
    underflows gracefully to zero instead of overflowing.

    Args:
        n_terms (int): number of entries (at least 1)
        q (float): the deformation parameter

    Returns:
        np.ndarray: the float64 table
    """
    out = np.empty(n_terms, dtype=np.float64)
    out[0] = 1.0
    for k in range(1, n_terms):
        out[k] = out[k - 1] * (1.0 - q) / (1.0 - q**k)
    return out


@njit
def big_eq_coefficients(n_terms: int, q: float):  # pragma: no cover
    r"""Returns the table :math:`q^{k(k-1)/2}/[k]_q!` for :math:`k = 0, \dots, n_terms - 1`.

    Args:
        n_terms (int): number of entries (at least 1)
        q (float): the deformation parameter

    Returns:
        np.ndarray: the float64 table
    """
    out = np.empty(n_terms, dtype=np.float64)
    out[0] = 1.0
    for k in range(1, n_terms):
        out[k] = out[k - 1] * q ** (k - 1) * (1.0 - q) / (1.0 - q**k)
    return out


@njit
def horner(coefficients, x: float):  # pragma: no cover
    r"""Evaluates :math:`\sum_j c_j x^j` with Horner's scheme.

    Args:
        coefficients (np.ndarray): float64 coefficients, lowest degree first
        x (float): the evaluation point

    Returns:
        float: the value of the polynomial
    """
    acc = 0.0
    for j in range(coefficients.shape[0] - 1, -1, -1):
        acc = acc * x + coefficients[j]
    return acc


@njit
def shifted_factorial_product(a: complex, q: float, k: int):  # pragma: no cover
    r"""Computes :math:`(1-a)(1-aq)\cdots(1-aq^{k-1})` together with the smallest factor
    magnitude met along the way.

    Args:
        a (complex): the base
        q (float): the deformation parameter
        k (int): the number of factors

    Returns:
        tuple[complex, float]: the product and the smallest :math:`|1 - aq^j|`
        (``inf`` when ``k == 0``)
    """
    prod = 1.0 + 0.0j
    smallest = np.inf
    aq = a
    for _ in range(k):
        factor = 1.0 - aq
        prod *= factor
        smallest = min(smallest, abs(factor))
        aq *= q
    return prod, smallest


@njit
def binomial_row_values(n: int, q: float):  # pragma: no cover
    r"""Returns the row :math:`\binom{n}{k}_q`, :math:`k = 0, \dots, n`, at a numeric ``q``.

    The rows are built with the recurrence
    :math:`\binom{m}{k}_q = q^k \binom{m-1}{k}_q + \binom{m-1}{k-1}_q`, the one satisfied by
    the exact polynomials. All its terms are positive, so no digits cancel.

    Args:
        n (int): the row (non-negative)
        q (float): the deformation parameter

    Returns:
        np.ndarray: the float64 row
    """
    powers = np.empty(n + 1, dtype=np.float64)
    powers[0] = 1.0
    for k in range(1, n + 1):
        powers[k] = powers[k - 1] * q
    row = np.zeros(n + 1, dtype=np.float64)
    row[0] = 1.0
    for m in range(1, n + 1):
        row[m] = 1.0
        for k in range(m - 1, 0, -1):
            row[k] = powers[k] * row[k] + row[k - 1]
    return row
