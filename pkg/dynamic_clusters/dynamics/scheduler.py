"""Экспоненциальные часы скачков с прореживанием."""

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from dynamic_clusters.exceptions.domain import InvariantBreachException

__all__ = [
    'RATE_TOLERANCE',
    'ActivePair',
    'JumpCandidate',
    'next_jump_candidate',
]

RATE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ActivePair:
    """Пара в контакте вместе с её интенсивностью скачков.

    Args:
        pair: Пара (i, j), i < j
        rate: Интенсивность λ в момент t
        rate_bound: Граница λ_max
    """

    pair: tuple[int, int]
    rate: Callable[[float], float]
    rate_bound: float


@dataclass(frozen=True)
class JumpCandidate:
    """Принятый тик часов.

    Args:
        t: Момент скачка
        pair: Пара, совершающая скачок
    """

    t: float
    pair: tuple[int, int]


def _first_accepted(
    active: ActivePair,
    now: float,
    horizon: float,
    rng: np.random.Generator,
) -> float | None:
    t = now
    while True:
        t += rng.exponential(scale=1 / active.rate_bound)
        if t >= horizon:
            return None
        rate = active.rate(t)
        if rate > active.rate_bound * (1 + RATE_TOLERANCE):
            raise InvariantBreachException(
                detail=f'Интенсивность {rate} пары {active.pair} больше '
                f'границы {active.rate_bound}',
            )
        if rng.random() * active.rate_bound < rate:
            return t


def next_jump_candidate(
    active: Sequence[ActivePair],
    now: float,
    horizon: float,
    rng: np.random.Generator,
) -> JumpCandidate | None:
    """Ближайший принятый тик среди пар в контакте.

    Каждая пара независимо получает тики пуассоновского процесса с
    интенсивностью λ_max; тик принимается с вероятностью λ/λ_max. Пары
    перебираются в лексикографическом порядке, что делает расход
    генератора воспроизводимым. Пары с λ_max = 0 генератор не трогают.

    Args:
        active: Пары в контакте
        now: Текущий момент
        horizon: Ближайшая граница отрезков контакта
        rng: Генератор случайных чисел

    Returns:
        JumpCandidate | None: Самый ранний принятый тик до horizon

    Raises:
        InvariantBreachException: Если λ > λ_max
    """
    best: JumpCandidate | None = None
    for pair in sorted(active, key=lambda item: item.pair):
        if pair.rate_bound <= 0:
            continue
        t = _first_accepted(active=pair, now=now, horizon=horizon, rng=rng)
        if t is not None and (best is None or t < best.t):
            best = JumpCandidate(t=t, pair=pair.pair)
    return best
