"""Геометрическая подгонка хвоста P_k."""

from dataclasses import dataclass

import numpy as np
from scipy import stats

from dynamic_clusters.estimator.table import DEFAULT_CONFIDENCE, PkTable
from dynamic_clusters.exceptions.domain import EstimationException

__all__ = [
    'MIN_SUPPORT',
    'GeometricFit',
    'fit_geometric_ratio',
]

MIN_SUPPORT = 3


@dataclass(frozen=True)
class GeometricFit:
    """Оценка отношения P_{k+1}/P_k.

    Args:
        ratio: exp(наклона) регрессии log P_k по k
        interval: Бутстреп-интервал отношения
        slope: Наклон регрессии
        intercept: Свободный член регрессии
        ks: Размеры, вошедшие в регрессию
    """

    ratio: float
    interval: tuple[float, float]
    slope: float
    intercept: float
    ks: tuple[int, ...]


def _support(
    counts: dict[int, int],
    k_min: int,
    min_count: int,
) -> tuple[int, ...]:
    ks = []
    k = k_min
    while counts.get(k, 0) >= max(min_count, 1):
        ks.append(k)
        k += 1
    return tuple(ks)


def _slope(
    counts: dict[int, int],
    usable: int,
    ks: tuple[int, ...],
) -> tuple[float, float, float]:
    probabilities = np.array([counts[k] / usable for k in ks])
    result = stats.linregress(x=np.array(ks), y=np.log(probabilities))
    return float(result.slope), float(result.intercept), float(result.stderr)


def _bootstrap(
    table: PkTable,
    ks: tuple[int, ...],
    resamples: int,
    rng: np.random.Generator,
) -> list[float]:
    """Наклоны по мультиномиальным перевыборкам пригодных реплик.

    Args:
        table: Таблица счётчиков
        ks: Размеры из регрессии
        resamples: Число перевыборок
        rng: Генератор случайных чисел

    Returns:
        list[float]: Наклоны перевыборок с полной опорой
    """
    counts = np.array([table.count(k=k) for k in ks])
    rest = table.usable - int(counts.sum())
    weights = np.append(counts, rest) / table.usable
    slopes = []
    for _ in range(resamples):
        drawn = rng.multinomial(n=table.usable, pvals=weights)[:-1]
        if np.any(drawn == 0):
            continue
        slope, _, _ = _slope(
            counts=dict(zip(ks, drawn.tolist())),
            usable=table.usable,
            ks=ks,
        )
        slopes.append(slope)
    return slopes


def fit_geometric_ratio(
    table: PkTable,
    k_min: int = 2,
    min_count: int = 5,
    bootstrap: int = 200,
    confidence: float = DEFAULT_CONFIDENCE,
    seed: int = 0,
) -> GeometricFit:
    """Наклон log P_k по k, начиная с k_min, пока счётчик не меньше min_count.

    Args:
        table: Таблица счётчиков
        k_min: Первый размер в регрессии
        min_count: Наименьший счётчик размера в регрессии
        bootstrap: Число перевыборок; 0 даёт интервал по ошибке наклона
        confidence: Уровень доверия интервала
        seed: Зерно бутстрепа

    Returns:
        GeometricFit

    Raises:
        EstimationException: Если опора регрессии меньше трёх размеров
    """
    if table.usable == 0:
        raise EstimationException(detail='Нет пригодных реплик')
    ks = _support(counts=table.counts, k_min=k_min, min_count=min_count)
    if len(ks) < MIN_SUPPORT:
        raise EstimationException(
            detail=f'Для подгонки нужно ≥ {MIN_SUPPORT} размеров начиная с '
            f'{k_min} со счётчиком ≥ {min_count}, найдено {len(ks)}',
        )
    slope, intercept, stderr = _slope(
        counts=table.counts,
        usable=table.usable,
        ks=ks,
    )
    tail = (1 - confidence) / 2
    slopes = _bootstrap(
        table=table,
        ks=ks,
        resamples=bootstrap,
        rng=np.random.default_rng(seed),
    )
    if slopes:
        low, high = np.quantile(slopes, [tail, 1 - tail])
    else:
        z = float(stats.norm.ppf(1 - tail))
        low, high = slope - z * stderr, slope + z * stderr
    return GeometricFit(
        ratio=float(np.exp(slope)),
        interval=(float(np.exp(low)), float(np.exp(high))),
        slope=slope,
        intercept=intercept,
        ks=ks,
    )
