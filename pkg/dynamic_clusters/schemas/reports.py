"""Схемы сводок оценивания и манифеста запуска."""

from datetime import datetime
from typing import Any

from pydantic import Field

from dynamic_clusters.schemas.base import CustomBaseModel

__all__ = [
    'OutputFileSchema',
    'ManifestSchema',
    'EstimateSummarySchema',
]


class OutputFileSchema(CustomBaseModel):
    """Выходной файл и его контрольная сумма."""

    path: str = Field(
        alias='path',
        description='Имя файла относительно каталога вывода',
        examples=['trajectories.jsonl'],
    )
    sha256: str = Field(
        alias='sha256',
        description='SHA-256 содержимого',
        examples=['0' * 64],
        min_length=64,
        max_length=64,
    )


class ManifestSchema(CustomBaseModel):
    """Документ manifest.json."""

    command: str = Field(
        alias='command',
        description='Подкоманда',
        examples=['simulate'],
    )
    config: dict[str, Any] = Field(
        alias='config',
        description='Снимок конфигурации, достаточный для повтора',
        examples=[{'d': 2, 'box': 10.0}],
    )
    arguments: dict[str, Any] = Field(
        alias='arguments',
        description='Параметры командной строки вне конфигурации',
        examples=[{'nmax': 5}],
        default_factory=dict,
    )
    seed: int | None = Field(
        alias='seed',
        description='Зерно запуска',
        examples=[0],
    )
    version: str = Field(
        alias='version',
        description='Версия пакета',
        examples=['0.1.0'],
    )
    started_at: datetime = Field(
        alias='started_at',
        description='Начало запуска (UTC)',
        examples=['2024-01-01T00:00:00Z'],
    )
    finished_at: datetime = Field(
        alias='finished_at',
        description='Окончание запуска (UTC)',
        examples=['2024-01-01T00:00:01Z'],
    )
    outputs: list[OutputFileSchema] = Field(
        alias='outputs',
        description='Выходные файлы',
        examples=[[]],
    )


class EstimateSummarySchema(CustomBaseModel):
    """Документ summary.json оценки P_k."""

    replicas: int = Field(
        alias='replicas',
        description='Всего реплик',
        examples=[1000],
    )
    usable: int = Field(
        alias='usable',
        description='Реплики, не отброшенные у границы',
        examples=[990],
    )
    discarded: int = Field(
        alias='discarded',
        description='Реплики, отброшенные у границы',
        examples=[10],
    )
    discard_fraction: float = Field(
        alias='discard_fraction',
        description='Доля отброшенных реплик',
        examples=[0.01],
    )
    initial_contact: int = Field(
        alias='initial_contact',
        description='Реплики с контактом в кластере при t = 0',
        examples=[0],
    )
    ratio: float | None = Field(
        alias='ratio',
        description='Оценка P_(k+1)/P_k; None, если опоры мало',
        examples=[0.2],
    )
    ratio_interval: tuple[float, float] | None = Field(
        alias='ratio_interval',
        description='Бутстреп-интервал отношения',
        examples=[[0.15, 0.25]],
    )
    fit_ks: list[int] = Field(
        alias='fit_ks',
        description='Размеры, вошедшие в регрессию',
        examples=[[2, 3, 4]],
    )
    density: float = Field(
        alias='density',
        description='Плотность ρ',
        examples=[10.0],
    )
    reachability_radius: float = Field(
        alias='reachability_radius',
        description='Радиус v0·τ + r шара, содержащего трубку частицы',
        examples=[1.1],
    )
    reachability_count: float = Field(
        alias='reachability_count',
        description='Среднее число точек поля в этом шаре',
        examples=[38.0],
    )
    pair_capture_bound: float = Field(
        alias='pair_capture_bound',
        description='Верхняя оценка вероятности иметь партнёра',
        examples=[0.3],
    )
    partner_fraction: float = Field(
        alias='partner_fraction',
        description='Оценка 1 - P_1',
        examples=[0.25],
    )
    runtime_seconds: float = Field(
        alias='runtime_seconds',
        description='Время счёта',
        examples=[1.5],
    )
