"""Настройки симуляции: геометрия, масштабирование и динамика."""

from typing import Literal

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from dynamic_clusters.schemas.validators import (
    check_non_negative_num,
    check_positive_int,
    check_positive_num,
)

__all__ = [
    'DynamicsKind',
    'SimulationSettings',
]

DynamicsKind = Literal['ghost', 'jump']


class SimulationSettings(BaseSettings):
    """Конфигурация одной реплики динамики в кубе Λ = [0, L]^d.

    Плотность задаётся в масштабе Больцмана-Грэда:
    ρ = α / (τ · v0 · r^(d-1)).

    Args:
        d: Размерность пространства.
        box: Сторона куба L (в файле допускается ключ ``L``).
        tau: Горизонт времени τ.
        r: Радиус трубки; частицы взаимодействуют на расстоянии ≤ 2r.
        v0: Граница модуля скоростей.
        alpha: Безразмерный параметр плотности α.
        dynamics: ``ghost`` (свободный пролёт) или ``jump`` (скачки).
        jump_rate: Постоянная интенсивность скачков пары в контакте.
        type_count: Число типов частиц A.
        threshold: Порог контакта; по умолчанию 2r.
        seed: Зерно генератора.
    """

    model_config = SettingsConfigDict(
        env_prefix='DYNCLUSTERS_',
        extra='forbid',
        frozen=True,
    )

    d: int = Field(default=2)
    box: float
    tau: float
    r: float
    v0: float
    alpha: float
    dynamics: DynamicsKind = 'ghost'
    jump_rate: float = 0.0
    type_count: int = 1
    threshold: float | None = None
    seed: int = 0

    @field_validator('d', 'type_count')
    @classmethod
    def validate_counts(cls, value: int) -> int:
        """Проверяет целочисленные параметры.

        Args:
            value: Значение поля

        Returns:
            int: Значение, прошедшее проверку
        """
        return check_positive_int(value=value)

    @field_validator('box', 'tau', 'r', 'v0')
    @classmethod
    def validate_scales(cls, value: float) -> float:
        """Проверяет положительность масштабов длины и времени.

        Args:
            value: Значение поля

        Returns:
            float: Значение, прошедшее проверку
        """
        return float(check_positive_num(value=value))

    @field_validator('alpha')
    @classmethod
    def validate_alpha(cls, value: float) -> float:
        """Проверяет параметр плотности.

        Args:
            value: Значение α

        Returns:
            float: Значение, прошедшее проверку

        Raises:
            ValueError: Если α не положителен
        """
        if value <= 0:
            raise ValueError(
                'alpha должен быть > 0: плотность '
                'rho = alpha / (tau * v0 * r**(d - 1))',
            )
        return float(check_positive_num(value=value))

    @field_validator('jump_rate', 'threshold')
    @classmethod
    def validate_non_negative(cls, value: float | None) -> float | None:
        """Проверяет неотрицательные параметры.

        Args:
            value: Значение поля

        Returns:
            float | None: Значение, прошедшее проверку
        """
        return check_non_negative_num(value=value)

    @model_validator(mode='after')
    def validate_threshold(self) -> 'SimulationSettings':
        """Проверяет, что порог контакта положителен.

        Returns:
            SimulationSettings: Проверенные настройки

        Raises:
            ValueError: Если порог задан нулевым
        """
        if self.threshold is not None and self.threshold <= 0:
            raise ValueError('threshold: порог контакта должен быть > 0')
        return self

    @property
    def contact_threshold(self) -> float:
        """Порог контакта: явный threshold или 2r.

        Returns:
            float: Расстояние, на котором частицы взаимодействуют
        """
        if self.threshold is not None:
            return self.threshold
        return 2 * self.r

    @property
    def density(self) -> float:
        """Плотность ρ = α / (τ · v0 · r^(d-1)).

        Returns:
            float: Плотность пуассоновского поля
        """
        return self.alpha / (self.tau * self.v0 * self.r ** (self.d - 1))

    @property
    def volume(self) -> float:
        """Объём куба Λ.

        Returns:
            float: L^d
        """
        return self.box**self.d

    @property
    def expected_count(self) -> float:
        """Ожидаемое число частиц ρ·|Λ|.

        Returns:
            float: Среднее пуассоновского числа частиц
        """
        return self.density * self.volume

    @property
    def reach(self) -> float:
        """Начальное расстояние, дальше которого пара не может встретиться.

        Returns:
            float: threshold + 2·v0·τ
        """
        return self.contact_threshold + 2 * self.v0 * self.tau
