"""Тесты для настроек симуляции и оценки."""

import math

import pytest
from hamcrest import assert_that, close_to, equal_to
from pydantic import ValidationError

from dynamic_clusters.settings.estimator import EstimatorSettings
from dynamic_clusters.settings.simulation import SimulationSettings

BASE = {'d': 2, 'box': 12.0, 'tau': 1.0, 'r': 0.5, 'v0': 1.0, 'alpha': 0.1}


class TestSimulationSettings:
    """Класс тестов настроек симуляции."""

    def test_derived_quantities(self) -> None:
        """Плотность, порог и радиус отбора пар выводятся из параметров."""
        settings = SimulationSettings(**BASE)
        assert_that(
            actual_or_assertion=(
                settings.contact_threshold,
                settings.volume,
                settings.reach,
            ),
            matcher=equal_to(obj=(1.0, 144.0, 3.0)),
        )
        assert_that(
            actual_or_assertion=settings.density,
            matcher=close_to(value=0.2, delta=1e-12),
        )
        assert_that(
            actual_or_assertion=settings.expected_count,
            matcher=close_to(value=28.8, delta=1e-9),
        )

    def test_threshold_override(self) -> None:
        """Явный порог заменяет 2r."""
        settings = SimulationSettings(**BASE, threshold=0.4)
        assert_that(
            actual_or_assertion=settings.contact_threshold,
            matcher=equal_to(obj=0.4),
        )

    def test_initialization_from_environment_variables(
        self,
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        """Параметры, не переданные явно, берутся из окружения."""
        monkeypatch.setenv('DYNCLUSTERS_SEED', '9')
        monkeypatch.setenv('DYNCLUSTERS_DYNAMICS', 'jump')
        settings = SimulationSettings(**BASE)
        assert_that(
            actual_or_assertion=(settings.seed, settings.dynamics),
            matcher=equal_to(obj=(9, 'jump')),
        )

    @pytest.mark.parametrize(
        argnames='override',
        argvalues=[
            {'alpha': 0.0},
            {'alpha': -1.0},
            {'r': 0.0},
            {'box': math.inf},
            {'d': 0},
            {'jump_rate': -0.5},
            {'threshold': 0.0},
            {'dynamics': 'ballistic'},
            {'unknown': 1},
        ],
    )
    def test_invalid(self, override: dict[str, object]) -> None:
        """Некорректные параметры отвергаются.

        Args:
            override: Заменяемые ключи
        """
        with pytest.raises(expected_exception=ValidationError):
            SimulationSettings(**{**BASE, **override})

    def test_frozen(self) -> None:
        """Настройки неизменяемы."""
        settings = SimulationSettings(**BASE)
        with pytest.raises(expected_exception=ValidationError):
            settings.alpha = 0.2


class TestEstimatorSettings:
    """Класс тестов настроек оценки."""

    def test_default_margin(self) -> None:
        """Пограничная зона по умолчанию threshold + 2·v0·τ."""
        settings = EstimatorSettings(**BASE)
        assert_that(
            actual_or_assertion=(
                settings.analysis_margin,
                settings.replicas,
                settings.workers,
            ),
            matcher=equal_to(obj=(3.0, 1000, 1)),
        )

    @pytest.mark.parametrize(
        argnames='override',
        argvalues=[
            {'margin': 1.0},
            {'box': 6.0},
            {'replicas': 0},
            {'workers': 0},
            {'bootstrap': -1},
            {'confidence': 0.0},
            {'confidence': 1.0},
        ],
    )
    def test_invalid(self, override: dict[str, object]) -> None:
        """Узкая или покрывающая куб зона и пустые счётчики отвергаются.

        Args:
            override: Заменяемые ключи
        """
        with pytest.raises(expected_exception=ValidationError):
            EstimatorSettings(**{**BASE, **override})
