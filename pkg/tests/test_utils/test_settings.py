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
Tests for the Settings class.
"""

import pytest

from qtrig.math.series import EvalConfig
from qtrig.special.qcalculus import QuadratureConfig
from qtrig.utils.settings import Settings


class TestSettings:
    """Tests the Settings class"""

    def test_init(self):
        """Test the default values of the settings"""
        settings = Settings()

        assert settings.SERIES_ABS_TOL == 1e-14
        assert settings.SERIES_REL_TOL == 1e-12
        assert settings.SERIES_MAX_TERMS == 512
        assert settings.PRODUCT_MAX_FACTORS == 10**7
        assert settings.SERIES_TAIL_RUN == 3
        assert settings.SERIES_DIVERGENCE_GROWTH == 1.0
        assert settings.RADIUS_GUARD == 0.95
        assert settings.POLE_TOL == 1e-8
        assert settings.QUADRATURE_TAIL_TOL == 1e-14
        assert settings.QUADRATURE_MAX_POINTS == 8192
        assert settings.SWEEP_RADIUS_FRACTION == 0.5
        assert settings.SWEEP_MAX_RADIUS == 5.0
        assert settings.SWEEP_SAMPLES == 200
        assert settings.MAX_WORKERS == 1
        assert settings.PROGRESSBAR is True

    def test_singleton(self):
        """Test that every instance is the same object."""
        assert Settings() is Settings()

    def test_setters(self):
        settings = Settings()

        settings.SERIES_MAX_TERMS = 1024
        assert settings.SERIES_MAX_TERMS == 1024

        settings.RADIUS_GUARD = 0.5
        assert settings.RADIUS_GUARD == 0.5
        with pytest.raises(ValueError, match="RADIUS_GUARD"):
            settings.RADIUS_GUARD = 1.0
        with pytest.raises(ValueError, match="RADIUS_GUARD"):
            settings.RADIUS_GUARD = 0

        settings.POLE_TOL = 1e-6
        assert settings.POLE_TOL == 1e-6
        with pytest.raises(ValueError, match="POLE_TOL"):
            settings.POLE_TOL = 0.0

        settings.PROGRESSBAR = False
        assert settings.PROGRESSBAR is False

        s0 = settings.SEED
        settings.SEED = None
        assert settings.SEED is not None
        settings.SEED = s0

    def test_configs_read_the_settings(self):
        """Test that configs built without arguments pick up the current settings."""
        settings = Settings()
        settings.SERIES_MAX_TERMS = 77
        settings.QUADRATURE_MAX_POINTS = 99
        settings.PRODUCT_MAX_FACTORS = 55
        assert EvalConfig().max_terms == 77
        assert QuadratureConfig().max_points == 99
        assert EvalConfig().max_factors == 55

    def test_reproducibility(self):
        """Test that the random state is reproducible."""
        settings = Settings()
        s0 = settings.SEED
        settings.SEED = 42
        seq0 = [settings.rng.integers(0, 2**31 - 1) for _ in range(10)]
        settings.SEED = 42
        seq1 = [settings.rng.integers(0, 2**31 - 1) for _ in range(10)]
        assert seq0 == seq1
        settings.SEED = s0

    def test_repr(self, capsys):
        """Test that the table lists the settings."""
        repr(Settings())
        text = capsys.readouterr().out
        assert "SERIES_MAX_TERMS" in text
        assert "RADIUS_GUARD" in text
