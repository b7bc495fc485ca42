"""Серия оценок по сетке α и размерам куба."""

from dataclasses import dataclass
from typing import Sequence

from dynamic_clusters.estimator.estimate import estimate_pk
from dynamic_clusters.estimator.fit import GeometricFit, fit_geometric_ratio
from dynamic_clusters.estimator.table import PkTable
from dynamic_clusters.logging.logger import get_logger
from dynamic_clusters.settings.estimator import EstimatorSettings
from dynamic_clusters.settings.loader import settings_from_mapping

__all__ = [
    'AlphaScanRow',
    'alpha_scan',
]

logger = get_logger(name=__name__)


@dataclass(frozen=True)
class AlphaScanRow:
    """Результат одной точки сетки.

    Args:
        alpha: Параметр плотности
        box: Сторона куба
        table: Таблица P_k
        fit: Геометрическая подгонка
    """

    alpha: float
    box: float
    table: PkTable
    fit: GeometricFit


def alpha_scan(
    base: EstimatorSettings,
    alphas: Sequence[float],
    boxes: Sequence[float] | None = None,
    min_count: int = 5,
) -> list[AlphaScanRow]:
    """Оценка и подгонка для каждой пары (L, α).

    Все точки используют геометрию и зерно base, меняются только α и L.
    Ошибки оценки и подгонки не перехватываются.

    Args:
        base: Общие настройки
        alphas: Сетка α
        boxes: Стороны куба; по умолчанию только base.box
        min_count: Наименьший счётчик размера в регрессии

    Returns:
        list[AlphaScanRow]: Строки по кубам, внутри по α

    Raises:
        ConfigException: Если точка сетки даёт некорректные настройки
    """
    rows = []
    for box in boxes or (base.box,):
        for alpha in alphas:
            config = settings_from_mapping(
                cls=EstimatorSettings,
                data={**base.model_dump(), 'alpha': alpha, 'box': box},
            )
            table = estimate_pk(config=config)
            fit = fit_geometric_ratio(
                table=table,
                k_min=config.k_min,
                min_count=min_count,
                bootstrap=config.bootstrap,
                confidence=config.confidence,
                seed=config.seed,
            )
            logger.info(
                msg='Точка сетки α просчитана',
                extra={
                    'context': {
                        'alpha': alpha,
                        'box': box,
                        'ratio': fit.ratio,
                    },
                },
            )
            rows.append(
                AlphaScanRow(alpha=alpha, box=box, table=table, fit=fit),
            )
    return rows
