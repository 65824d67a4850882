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


"""The global settings of qtrig: series and quadrature tolerances, term caps, the radius guard
and the configuration of identity sweeps."""

import numpy as np
import rich.table
from rich import print

__all__ = ["settings"]


# pylint: disable=too-many-instance-attributes
class Settings:
    r"""A class containing the default tolerances, caps and sweep sizes used by qtrig
    throughout a session.

    Every configuration object (:class:`~qtrig.math.series.EvalConfig`,
    :class:`~qtrig.special.qcalculus.QuadratureConfig`) built without explicit arguments reads
    its defaults from here, so changing a setting affects all the evaluations that follow.

    .. code-block::

        from qtrig import settings

        >>> settings.SERIES_MAX_TERMS  # check the default values
        512

        >>> settings.SERIES_MAX_TERMS = 1024  # update to new values
        >>> settings.SERIES_MAX_TERMS
        1024
    """

    def __new__(cls):  # singleton
        if not hasattr(cls, "instance"):
            cls.instance = super(Settings, cls).__new__(cls)
        return cls.instance

    def __init__(self):
        self._seed = np.random.randint(0, 2**31 - 1)
        self.rng = np.random.default_rng(self._seed)

        self.SERIES_ABS_TOL = 1e-14
        "Absolute size below which a series term counts as negligible. Default is 1e-14."

        self.SERIES_REL_TOL = 1e-12
        "Size, relative to the partial sum, below which a term is negligible. Default is 1e-12."

        self.SERIES_MAX_TERMS = 512
        "The maximum number of series terms before giving up. Default is 512."

        self.PRODUCT_MAX_FACTORS = 10**7
        "The maximum number of factors of a truncated infinite product. Default is 10**7."

        self.SERIES_TAIL_RUN = 3
        "The number of consecutive negligible terms required to stop a summation. Default is 3."

        self.SERIES_DIVERGENCE_GROWTH = 1.0
        "Term-to-term growth that, sustained over a tail run, signals divergence. Default is 1.0."

        self.RADIUS_GUARD = 0.95
        "The fraction of the radius of convergence accepted by the domain guards. Default is 0.95."

        self.POLE_TOL = 1e-8
        "The smallest denominator accepted by the quotient functions. Default is 1e-8."

        self.QUADRATURE_TAIL_TOL = 1e-14
        "The size below which a q-integral summand counts as negligible. Default is 1e-14."

        self.QUADRATURE_MAX_POINTS = 8192
        "The maximum number of geometric points used by a q-integral. Default is 8192."

        self.SWEEP_RADIUS_FRACTION = 0.5
        "Identity sweeps sample arguments up to this fraction of 1/(1-q). Default is 0.5."

        self.SWEEP_MAX_RADIUS = 5.0
        "The largest argument magnitude sampled by identity sweeps. Default is 5.0 (q = 0.9)."

        self.SWEEP_SAMPLES = 200
        "The number of random samples drawn for each randomized identity. Default is 200."

        self.MAX_WORKERS = 1
        "The number of threads used to evaluate identity sweeps. Default is 1 (serial)."

        self.PROGRESSBAR = True
        "Whether or not the command line may display progress bars. Default is True."

    @property
    def RADIUS_GUARD(self):
        r"""The fraction of the radius of convergence accepted by the domain guards.
        Must lie strictly between 0 and 1. Default is ``0.95``."""
        return self._radius_guard

    @RADIUS_GUARD.setter
    def RADIUS_GUARD(self, value: float):
        if not 0 < value < 1:
            raise ValueError(f"RADIUS_GUARD must lie in (0, 1), got {value}.")
        self._radius_guard = float(value)

    @property
    def POLE_TOL(self):
        r"""The smallest denominator magnitude accepted by ``tan_q``, ``sec_q``, ``csc_q``,
        ``cot_q`` and the quotient rule. Default is ``1e-8``."""
        return self._pole_tol

    @POLE_TOL.setter
    def POLE_TOL(self, value: float):
        if not value > 0:
            raise ValueError(f"POLE_TOL must be positive, got {value}.")
        self._pole_tol = float(value)

    @property
    def SEED(self):
        r"""The seed of the identity sweeps. Setting it to ``None`` draws a new random seed on the
        next read."""
        if self._seed is None:
            self._seed = np.random.randint(0, 2**31 - 1)
            self.rng = np.random.default_rng(self._seed)
        return self._seed

    @SEED.setter
    def SEED(self, value: int):
        self._seed = value
        self.rng = np.random.default_rng(self._seed)

    def __repr__(self) -> str:
        r"""Prints the settings as a table and returns an empty string."""
        hidden = ["rng"]

        table = rich.table.Table(title="qtrig Settings")
        table.add_column("Setting")
        table.add_column("Value")

        for key, val in self.__dict__.items():
            if key in hidden:
                continue
            key = key.lstrip("_").upper()
            table.add_row(key, str(val))

        print(table)
        return ""


settings = Settings()
"""The settings singleton."""
