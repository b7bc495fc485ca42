"""Начальный закон скоростей и типов частиц."""

import numpy as np
from numpy.typing import NDArray

from dynamic_clusters.dynamics.kernels import uniform_ball
from dynamic_clusters.dynamics.models import ParticleState

__all__ = [
    'sample_initial_states',
]


def sample_initial_states(
    positions: NDArray[np.float64],
    v0: float,
    type_count: int,
    rng: np.random.Generator,
    first_id: int = 0,
) -> list[ParticleState]:
    """Присваивает точкам независимые скорости и типы.

    Скорости равномерны в шаре радиуса v0, типы равномерны на {1..A}.

    Args:
        positions: Начальные положения, форма (n, d)
        v0: Граница модуля скоростей
        type_count: Число типов A
        rng: Генератор случайных чисел
        first_id: Идентификатор первой частицы

    Returns:
        list[ParticleState]: Состояния с идентификаторами подряд
    """
    positions = np.atleast_2d(positions)
    count, dimension = positions.shape
    velocities = uniform_ball(
        rng=rng,
        count=count,
        dimension=dimension,
        radius=v0,
    )
    types = rng.integers(low=1, high=type_count + 1, size=count)
    return [
        ParticleState(
            particle_id=first_id + index,
            x=positions[index],
            v=velocities[index],
            a=int(types[index]),
        )
        for index in range(count)
    ]
