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


"""Tests for the error hierarchy."""

import json

import pytest

from qtrig.utils.errors import (
    DivergentError,
    DomainError,
    NonConvergentError,
    PoleError,
    QtrigError,
)


@pytest.mark.parametrize(
    "error, builtin",
    [
        (DomainError, ValueError),
        (PoleError, ZeroDivisionError),
        (NonConvergentError, ArithmeticError),
        (DivergentError, ArithmeticError),
    ],
)
def test_error_bases(error, builtin):
    """Every error is a QtrigError and can be caught as its closest builtin."""
    with pytest.raises(builtin):
        raise error("boom")
    assert issubclass(error, QtrigError)


def test_to_record():
    """The record names the error class and carries its message, and is valid JSON."""
    record = PoleError("cos_q vanishes").to_record()
    assert record == {"error": "PoleError", "message": "cos_q vanishes"}
    assert json.loads(json.dumps(record)) == record
