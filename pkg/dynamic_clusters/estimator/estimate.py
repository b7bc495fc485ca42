"""Оценка распределения размеров кластера отмеченной частицы."""

import math
import time
from functools import partial
from multiprocessing import Pool

from dynamic_clusters.estimator.replica import run_replica
from dynamic_clusters.estimator.table import PkTable
from dynamic_clusters.exceptions.domain import EstimationException
from dynamic_clusters.geometry.volume import capture_volume_bound
from dynamic_clusters.logging.logger import forward_worker_logs, get_logger
from dynamic_clusters.settings.estimator import EstimatorSettings
from dynamic_clusters.settings.simulation import SimulationSettings

__all__ = [
    'estimate_pk',
    'pair_capture_bound',
]

logger = get_logger(name=__name__)


def estimate_pk(config: EstimatorSettings) -> PkTable:
    """Монте-Карло оценка P_k(τ|x).

    Реплики независимы и задаются парой (seed, номер). Итоги сворачиваются
    в порядке номеров при любом числе процессов.

    Args:
        config: Настройки оценки

    Returns:
        PkTable

    Raises:
        EstimationException: Если все реплики отброшены
    """
    started = time.perf_counter()
    indices = range(config.replicas)
    task = partial(run_replica, config)
    if config.workers == 1:
        table = PkTable.from_outcomes(
            outcomes=map(task, indices),
            confidence=config.confidence,
        )
    else:
        chunksize = max(1, config.replicas // (4 * config.workers))
        with (
            forward_worker_logs() as (initializer, initargs),
            Pool(
                processes=config.workers,
                initializer=initializer,
                initargs=initargs,
            ) as pool,
        ):
            table = PkTable.from_outcomes(
                outcomes=pool.imap(task, indices, chunksize=chunksize),
                confidence=config.confidence,
            )
            # рабочие дописывают очереди логов до выхода
            pool.close()
            pool.join()
    if table.usable == 0:
        raise EstimationException(
            detail=f'Все {table.replicas} реплик отброшены у границы',
        )
    logger.info(
        msg='Оценка P_k завершена',
        extra={
            'context': {
                'alpha': config.alpha,
                'replicas': table.replicas,
                'discarded': table.discarded,
                'initial_contact': table.initial_contact_total,
                'max_k': max(table.counts, default=0),
                'seconds': round(time.perf_counter() - started, 3),
            },
        },
    )
    return table


def pair_capture_bound(config: SimulationSettings) -> float:
    """Верхняя оценка вероятности, что у отмеченной частицы есть партнёр.

    Партнёр обязан лежать в заметаемом трубкой объёме, ограниченном
    β·τ + объём шара радиуса 2r, поэтому P(k ≥ 2) ≤ 1 - exp(-ρ·V).

    Args:
        config: Настройки симуляции

    Returns:
        float: 1 - exp(-ρ·(β·τ + добавка))
    """
    bound = capture_volume_bound(
        d=config.d,
        r=config.r,
        v0=config.v0,
        tau=config.tau,
    )
    return -math.expm1(-config.density * bound.total)
