"""Пуассоновские начальные данные с частицей в центре куба."""

import numpy as np

from dynamic_clusters.dynamics.initial import sample_initial_states
from dynamic_clusters.dynamics.models import ParticleState
from dynamic_clusters.settings.simulation import SimulationSettings

__all__ = [
    'DISTINGUISHED_ID',
    'replica_rng',
    'sample_initial_configuration',
]

DISTINGUISHED_ID = 0


def replica_rng(seed: int, index: int) -> np.random.Generator:
    """Генератор реплики, зависящий только от зерна и номера.

    Args:
        seed: Общее зерно запуска
        index: Номер реплики

    Returns:
        np.random.Generator
    """
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed, spawn_key=(index,)),
    )


def sample_initial_configuration(
    config: SimulationSettings,
    rng: np.random.Generator,
) -> list[ParticleState]:
    """Пуассоновское поле в кубе плюс отмеченная частица в центре.

    Условие на точку x для пуассоновского поля реализуется добавлением
    независимой частицы в x. Отмеченная частица имеет идентификатор 0 и
    идёт первой; остальные получают 1..n.

    Args:
        config: Настройки симуляции
        rng: Генератор случайных чисел

    Returns:
        list[ParticleState]: Начальные состояния
    """
    count = int(rng.poisson(lam=config.expected_count))
    center = np.full((1, config.d), config.box / 2)
    positions = rng.uniform(low=0.0, high=config.box, size=(count, config.d))
    return sample_initial_states(
        positions=np.vstack((center, positions)),
        v0=config.v0,
        type_count=config.type_count,
        rng=rng,
        first_id=DISTINGUISHED_ID,
    )
