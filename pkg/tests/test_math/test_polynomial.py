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


"""Tests for the exact polynomials in q."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtrig.math.polynomial import QPolynomial

coefficient_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=8)


class TestQPolynomial:
    """Tests the QPolynomial class"""

    def test_canonical_form(self):
        """Trailing zeros are stripped and the zero polynomial has degree -1."""
        p = QPolynomial([1, 2, 0, 0])
        assert p.coefficients == (1, 2)
        assert p.degree == 1
        assert QPolynomial([0, 0]).coefficients == ()
        assert QPolynomial().degree == -1

    def test_integer_coefficients_only(self):
        with pytest.raises(TypeError):
            QPolynomial([1, 0.5])

    def test_constructors(self):
        assert QPolynomial.one() == 1
        assert QPolynomial.monomial(3, 2).coefficients == (0, 0, 0, 2)
        with pytest.raises(ValueError):
            QPolynomial.monomial(-1)

    def test_shift(self):
        p = QPolynomial([1, 1])
        assert p.shift(2).coefficients == (0, 0, 1, 1)
        assert QPolynomial().shift(3) == QPolynomial()
        with pytest.raises(ValueError):
            p.shift(-1)

    def test_arithmetic(self):
        p = QPolynomial([1, 1])
        assert p * p == QPolynomial([1, 2, 1])
        assert p + 1 == QPolynomial([2, 1])
        assert 1 + p == QPolynomial([2, 1])
        assert p - p == QPolynomial()
        assert 3 * p == QPolynomial([3, 3])
        assert -p == QPolynomial([-1, -1])

    @given(coefficient_lists, coefficient_lists)
    def test_product_evaluates_to_product(self, a, b):
        """Multiplication agrees with evaluation at an integer point."""
        p, r = QPolynomial(a), QPolynomial(b)
        assert (p * r)(3) == p(3) * r(3)
        assert (p + r)(-2) == p(-2) + r(-2)

    def test_evaluation(self):
        p = QPolynomial([1, 1, 2, 1, 1])
        assert p(1) == 6
        assert p(Fraction(1, 2)) == Fraction(35, 16)
        assert p(0.5) == pytest.approx(35 / 16, rel=1e-15)
        assert QPolynomial()(0.5) == 0.0

    def test_palindromic(self):
        assert QPolynomial([1, 1, 2, 1, 1]).is_palindromic()
        assert not QPolynomial([1, 2]).is_palindromic()

    def test_hash_and_equality(self):
        assert hash(QPolynomial([1, 2])) == hash(QPolynomial([1, 2, 0]))
        assert len({QPolynomial([1, 2]), QPolynomial([1, 2, 0]), QPolynomial([2])}) == 2
        assert QPolynomial([1, 2]) != "1 + 2q"

    def test_str(self):
        assert str(QPolynomial([1, 1, 2, 1, 1])) == "1 + q + 2q^2 + q^3 + q^4"
        assert str(QPolynomial([0, -1, 3])) == "-q + 3q^2"
        assert str(QPolynomial([2, -3])) == "2 - 3q"
        assert str(QPolynomial()) == "0"
        assert repr(QPolynomial([0, 1])) == "QPolynomial(q)"

    def test_to_numpy(self):
        assert QPolynomial([1, 0, 3]).to_numpy().tolist() == [1.0, 0.0, 3.0]
