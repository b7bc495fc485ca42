"""Настройки Монте-Карло оценки распределения размеров кластеров."""

from pydantic import field_validator, model_validator

from dynamic_clusters.schemas.validators import check_unit_interval
from dynamic_clusters.settings.simulation import SimulationSettings

__all__ = [
    'EstimatorSettings',
]


class EstimatorSettings(SimulationSettings):
    """Конфигурация оценки P_k(τ|x).

    Args:
        replicas: Число независимых реплик.
        margin: Ширина пограничной зоны; кластеры, заходящие в неё,
            отбрасываются. По умолчанию threshold + 2·v0·τ.
        require_no_initial_contact: Учитывать отдельно реплики, где в
            кластере отмеченной частицы есть контакт при t = 0.
        workers: Число процессов для реплик.
        k_min: Наименьший размер кластера в регрессии log P_k.
        bootstrap: Число бутстреп-выборок для интервала отношения.
        confidence: Уровень доверия интервалов Уилсона и отношения.
    """

    replicas: int = 1000
    margin: float | None = None
    require_no_initial_contact: bool = False
    workers: int = 1
    k_min: int = 2
    bootstrap: int = 200
    confidence: float = 0.95

    @field_validator('confidence')
    @classmethod
    def validate_confidence(cls, value: float) -> float:
        """Проверяет уровень доверия.

        Args:
            value: Значение поля

        Returns:
            float: Значение, прошедшее проверку
        """
        return check_unit_interval(value=value)

    @model_validator(mode='after')
    def validate_estimator(self) -> 'EstimatorSettings':
        """Проверяет согласованность параметров оценки.

        Returns:
            EstimatorSettings: Проверенные настройки

        Raises:
            ValueError: Если параметр вне допустимой области
        """
        for name in ('replicas', 'workers', 'k_min'):
            if getattr(self, name) < 1:
                raise ValueError(f'{name}: должно быть не меньше 1')
        if self.bootstrap < 0:
            raise ValueError('bootstrap: должно быть неотрицательным')
        minimal = 2 * self.r + 2 * self.v0 * self.tau
        if self.margin is not None and self.margin < minimal:
            raise ValueError(
                f'margin: должно быть не меньше 2r + 2*v0*tau = {minimal}',
            )
        if 2 * self.analysis_margin >= self.box:
            raise ValueError('margin: пограничная зона покрывает весь куб')
        return self

    @property
    def analysis_margin(self) -> float:
        """Фактическая ширина пограничной зоны.

        Returns:
            float: margin или threshold + 2·v0·τ
        """
        if self.margin is not None:
            return self.margin
        return max(self.reach, 2 * self.r + 2 * self.v0 * self.tau)
