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


"""A module containing all base type annotations."""

__all__ = [
    "RealVector",
    "ComplexVector",
    "IntVector",
    "ComplexValue",
    "QLike",
    "FunctionKind",
    "Sign",
]

from numbers import Number
from typing import TYPE_CHECKING, Literal, Tuple, TypeVar, Union

import numpy as np

if TYPE_CHECKING:  # pragma: no cover
    from qtrig.math.qcore import QParam

R = TypeVar("R", np.float32, np.float64)
C = TypeVar("C", np.complex64, np.complex128)
Z = TypeVar("Z", np.int32, np.int64)

RealVector = np.ndarray[Tuple[int], R]
ComplexVector = np.ndarray[Tuple[int], C]
IntVector = np.ndarray[Tuple[int], Z]

ComplexValue = Union[complex, float, int, Number, np.number]
r"""Anything that can be turned into a finite Python ``complex``."""

QLike = Union[float, "QParam"]
r"""A deformation parameter, either validated (:class:`~qtrig.math.qcore.QParam`) or raw."""

FunctionKind = Literal["e_q", "E_q", "sin_q", "cos_q", "tan_q", "sec_q", "csc_q", "cot_q"]

Sign = Literal["+", "-"]
