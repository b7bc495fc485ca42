"""Ядра скачков типов и скоростей для пар частиц в контакте."""

from abc import ABC, abstractmethod

import numpy as np
from numpy.typing import NDArray

from dynamic_clusters.dynamics.models import ParticleState
from dynamic_clusters.exceptions.domain import DomainException
from dynamic_clusters.settings.simulation import SimulationSettings

__all__ = [
    'JumpKernel',
    'ConstantRateKernel',
    'build_kernel',
    'uniform_ball',
]


def uniform_ball(
    rng: np.random.Generator,
    count: int,
    dimension: int,
    radius: float,
) -> NDArray[np.float64]:
    """Равномерная выборка точек в шаре.

    Направление берётся из нормального распределения, радиус как
    radius·U^(1/d).

    Args:
        rng: Генератор случайных чисел
        count: Число точек
        dimension: Размерность
        radius: Радиус шара

    Returns:
        NDArray[np.float64]: Точки формы (count, dimension)
    """
    directions = rng.standard_normal(size=(count, dimension))
    lengths = np.linalg.norm(directions, axis=1, keepdims=True)
    lengths[lengths == 0] = 1.0
    radii = radius * rng.random(size=(count, 1)) ** (1 / dimension)
    return directions / lengths * radii


class JumpKernel(ABC):
    """Правило скачка пары: интенсивность и распределение исхода."""

    def __init__(self, rate_bound: float) -> None:
        """Инициализирует ядро.

        Args:
            rate_bound: Верхняя граница интенсивности λ_max

        Raises:
            DomainException: Если граница отрицательна
        """
        if rate_bound < 0:
            raise DomainException(detail='λ_max должна быть ≥ 0')
        self._rate_bound = rate_bound

    @property
    def rate_bound(self) -> float:
        """Верхняя граница интенсивности.

        Returns:
            float: λ_max
        """
        return self._rate_bound

    @abstractmethod
    def rate(self, first: ParticleState, second: ParticleState) -> float:
        """Интенсивность скачка λ(Y_i, Y_j) пары в контакте.

        Args:
            first: Состояние первой частицы
            second: Состояние второй частицы

        Returns:
            float: Интенсивность
        """
        pass

    @abstractmethod
    def sample(
        self,
        first: ParticleState,
        second: ParticleState,
        rng: np.random.Generator,
    ) -> tuple[ParticleState, ParticleState]:
        """Разыгрывает новые типы и скорости пары.

        Положения частиц при скачке не меняются.

        Args:
            first: Состояние первой частицы
            second: Состояние второй частицы
            rng: Генератор случайных чисел

        Returns:
            tuple[ParticleState, ParticleState]: Состояния после скачка
        """
        pass


class ConstantRateKernel(JumpKernel):
    """Постоянная интенсивность; типы меняются местами с вероятностью ½.

    Новые скорости независимы и равномерны в шаре радиуса v0.
    """

    def __init__(self, rate: float, v0: float) -> None:
        """Инициализирует ядро.

        Args:
            rate: Постоянная интенсивность λ
            v0: Граница модуля скоростей
        """
        super().__init__(rate_bound=rate)
        self._v0 = v0

    def rate(self, first: ParticleState, second: ParticleState) -> float:
        """Постоянная интенсивность.

        Args:
            first: Состояние первой частицы
            second: Состояние второй частицы

        Returns:
            float: λ
        """
        return self.rate_bound

    def sample(
        self,
        first: ParticleState,
        second: ParticleState,
        rng: np.random.Generator,
    ) -> tuple[ParticleState, ParticleState]:
        """Разыгрывает обмен типами и новые скорости.

        Args:
            first: Состояние первой частицы
            second: Состояние второй частицы
            rng: Генератор случайных чисел

        Returns:
            tuple[ParticleState, ParticleState]: Состояния после скачка
        """
        swap = bool(rng.random() < 0.5)
        velocities = uniform_ball(
            rng=rng,
            count=2,
            dimension=first.x.size,
            radius=self._v0,
        )
        first_type, second_type = (
            (second.a, first.a) if swap else (first.a, second.a)
        )
        return (
            ParticleState(
                particle_id=first.particle_id,
                x=first.x,
                v=velocities[0],
                a=first_type,
            ),
            ParticleState(
                particle_id=second.particle_id,
                x=second.x,
                v=velocities[1],
                a=second_type,
            ),
        )


def build_kernel(settings: SimulationSettings) -> JumpKernel | None:
    """Выбирает ядро по виду динамики из настроек.

    Args:
        settings: Настройки симуляции

    Returns:
        JumpKernel | None: None для динамики без взаимодействия
    """
    if settings.dynamics == 'ghost':
        return None
    return ConstantRateKernel(rate=settings.jump_rate, v0=settings.v0)
