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
This module contains the record produced by an identity sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

import numpy as np

__all__ = ["IdentityReport", "all_passed", "jsonable_input"]


def jsonable_input(value: Any) -> Any:
    r"""Converts a sample input (a number, or a tuple of numbers) into plain JSON types.

    Real numbers become floats, complex numbers with a non-zero imaginary part become
    ``[re, im]`` pairs and tuples become lists.

    Args:
        value: the sample input

    Returns:
        A value that ``json.dumps`` can encode.
    """
    if value is None:
        return None
    if isinstance(value, (tuple, list)):
        return [jsonable_input(v) for v in value]
    if isinstance(value, str):
        return value
    z = complex(value)
    if z.imag == 0:
        return float(z.real)
    return [float(z.real), float(z.imag)]


@dataclass(frozen=True)
class IdentityReport:
    r"""The result of checking one identity over a set of sample inputs.

    Args:
        identity_id: the name of the identity
        q: the deformation parameter used (``nan`` when the sweep draws ``q`` itself)
        samples: the number of samples that were evaluated
        max_abs_residual: the largest residual magnitude observed
        argmax_input: the sample input that produced ``max_abs_residual``
        tolerance: the largest residual accepted
        passed: whether ``max_abs_residual <= tolerance``
        skipped: the number of samples skipped because they hit a pole
    """

    identity_id: str
    q: float
    samples: int
    max_abs_residual: float
    argmax_input: Any
    tolerance: float
    passed: bool
    skipped: int = 0

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError(f"An identity report needs at least one sample, got {self.samples}.")
        if self.passed != bool(self.max_abs_residual <= self.tolerance):
            raise ValueError("``passed`` must be equivalent to ``max_abs_residual <= tolerance``.")

    @classmethod
    def from_residuals(
        cls,
        identity_id: str,
        q: float,
        residuals: Sequence[float],
        inputs: Sequence[Any],
        tolerance: float,
        skipped: int = 0,
    ) -> IdentityReport:
        r"""Builds a report from the residual magnitudes of a sweep.

        Args:
            identity_id: the name of the identity
            q: the deformation parameter used
            residuals: one residual magnitude per sample
            inputs: the sample inputs, aligned with ``residuals``
            tolerance: the largest residual accepted
            skipped: the number of samples that were skipped

        Returns:
            IdentityReport: the report

        Raises:
            ValueError: if no residual was given
        """
        residuals = np.abs(np.asarray(residuals, dtype=np.complex128))
        if residuals.size == 0:
            raise ValueError(f"No sample could be evaluated for {identity_id}.")
        worst = int(np.argmax(residuals))
        max_residual = float(residuals[worst])
        return cls(
            identity_id=identity_id,
            q=float(q),
            samples=int(residuals.size),
            max_abs_residual=max_residual,
            argmax_input=inputs[worst],
            tolerance=float(tolerance),
            passed=bool(max_residual <= tolerance),
            skipped=int(skipped),
        )

    def to_dict(self) -> dict[str, Any]:
        r"""The report as a JSON-friendly dictionary, with the keys in their documented order."""
        return {
            "identity_id": self.identity_id,
            "q": self.q,
            "samples": self.samples,
            "max_abs_residual": self.max_abs_residual,
            "argmax_input": jsonable_input(self.argmax_input),
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def all_passed(reports: Iterable[IdentityReport], q: Optional[float] = None) -> bool:
    r"""Whether every report (optionally, every report for a given ``q``) passed."""
    return all(r.passed for r in reports if q is None or r.q == q)
