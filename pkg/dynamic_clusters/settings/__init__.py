"""Настройки для конфигурационных параметров."""

from dynamic_clusters.settings.estimator import EstimatorSettings
from dynamic_clusters.settings.loader import load_settings
from dynamic_clusters.settings.simulation import SimulationSettings

__all__ = [
    'EstimatorSettings',
    'SimulationSettings',
    'load_settings',
]
