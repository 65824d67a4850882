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


import os

import pytest
from hypothesis import Verbosity, settings as hyp_settings

from qtrig import settings

# ~~~~~~~~~~
# Hypothesis
# ~~~~~~~~~~

hyp_settings.register_profile("ci", max_examples=10, deadline=None)
hyp_settings.register_profile("dev", max_examples=25, deadline=None)
hyp_settings.register_profile("debug", max_examples=10, verbosity=Verbosity.verbose, deadline=None)

hyp_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))

# ~~~~~~
# Pytest
# ~~~~~~

_RESTORED = (
    "SERIES_ABS_TOL",
    "SERIES_REL_TOL",
    "SERIES_MAX_TERMS",
    "PRODUCT_MAX_FACTORS",
    "RADIUS_GUARD",
    "POLE_TOL",
    "QUADRATURE_MAX_POINTS",
    "SWEEP_MAX_RADIUS",
    "SWEEP_SAMPLES",
    "MAX_WORKERS",
    "PROGRESSBAR",
)


@pytest.fixture(autouse=True)
def restore_settings():
    r"""
    Puts back the settings a test may have changed.
    """
    saved = {name: getattr(settings, name) for name in _RESTORED}
    yield
    for name, value in saved.items():
        setattr(settings, name, value)
