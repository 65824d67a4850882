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
This module contains the exceptions raised by qtrig.

Every error derives from :class:`QtrigError` and from the closest builtin exception, so that
``except ValueError`` or ``except ZeroDivisionError`` keep working for callers that do not
know about qtrig.
"""

__all__ = [
    "QtrigError",
    "DomainError",
    "PoleError",
    "NonConvergentError",
    "DivergentError",
]


class QtrigError(Exception):
    r"""Base class of all the errors raised by qtrig."""

    def to_record(self) -> dict[str, str]:
        r"""
        A machine-readable description of this error.

        Returns:
            dict: ``{"error": <class name>, "message": <error message>}``
        """
        return {"error": type(self).__name__, "message": str(self)}


class DomainError(QtrigError, ValueError):
    r"""An argument lies outside the region where the requested quantity is defined
    (or where its evaluation is guaranteed to converge)."""


class PoleError(QtrigError, ZeroDivisionError):
    r"""A denominator or a product factor is too close to zero."""


class NonConvergentError(QtrigError, ArithmeticError):
    r"""A series, product or quadrature hit its term cap before meeting its tolerance."""


class DivergentError(QtrigError, ArithmeticError):
    r"""The terms of a series show sustained growth."""
