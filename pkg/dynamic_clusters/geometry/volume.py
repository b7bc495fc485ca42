"""Заметаемые объёмы и оценка объёма захвата для пары частиц."""

import math
from dataclasses import dataclass

import numpy as np

from dynamic_clusters.exceptions.domain import DomainException
from dynamic_clusters.geometry.vectors import Vector, as_vector, norm

__all__ = [
    'MIN_CAPTURE_SAMPLES',
    'CaptureVolumeBound',
    'CaptureVolumeEstimate',
    'ball_volume',
    'capture_volume_bound',
    'capture_volume_mc',
    'ordered_simplex_volume',
    'reachability_radius',
]

MIN_CAPTURE_SAMPLES = 1000


def ball_volume(d: int, radius: float) -> float:
    """Объём d-мерного шара.

    При d = 0 возвращается 1: нульмерное сечение отрезка считается
    единичной мерой на каждом конце.

    Args:
        d: Размерность (d ≥ 0)
        radius: Радиус шара

    Returns:
        float: π^(d/2)·R^d / Γ(d/2 + 1)

    Raises:
        DomainException: Если d < 0 или радиус отрицателен
    """
    if d < 0 or radius < 0:
        raise DomainException(
            detail=f'Нет шара размерности {d} с радиусом {radius}',
        )
    return math.pi ** (d / 2) * radius**d / math.gamma(d / 2 + 1)


def reachability_radius(r: float, v0: float, tau: float) -> float:
    """Радиус шара с центром в x(0), содержащего трубку частицы.

    Args:
        r: Радиус трубки
        v0: Граница скоростей
        tau: Горизонт времени

    Returns:
        float: v0·τ + r
    """
    return v0 * tau + r


def ordered_simplex_volume(m: int, tau: float) -> float:
    """Объём множества упорядоченных моментов 0 < t1 < ... < tm < τ.

    Args:
        m: Число моментов
        tau: Горизонт времени

    Returns:
        float: τ^m / m!

    Raises:
        DomainException: Если m < 0 или τ < 0
    """
    if m < 0 or tau < 0:
        raise DomainException(
            detail=f'Симплекс не определён для m={m}, tau={tau}',
        )
    return tau**m / math.factorial(m)


@dataclass(frozen=True)
class CaptureVolumeBound:
    """Оценка объёма начальных положений партнёра, успевающего коснуться.

    Args:
        d: Размерность
        r: Радиус трубки
        v0: Граница скоростей
        tau: Горизонт времени
        beta: Скорость роста объёма, 2·v0·vol_(d-1)(2r)
        additive: Объём шара радиуса 2r (контакт уже при t = 0)
    """

    d: int
    r: float
    v0: float
    tau: float
    beta: float
    additive: float

    @property
    def total(self) -> float:
        """Полная граница β·τ + объём начального шара.

        Returns:
            float: beta·tau + additive
        """
        return self.beta * self.tau + self.additive


def capture_volume_bound(
    d: int,
    r: float,
    v0: float,
    tau: float,
) -> CaptureVolumeBound:
    """Граница объёма захвата пары при |v1|, |v2| ≤ v0.

    Шар радиуса 2r сдвигается с относительной скоростью не больше 2·v0,
    заметая цилиндр с сечением vol_(d-1)(2r).

    Args:
        d: Размерность (d ≥ 1)
        r: Радиус трубки
        v0: Граница скоростей
        tau: Горизонт времени

    Returns:
        CaptureVolumeBound: Параметры границы

    Raises:
        DomainException: Если параметры вне области определения
    """
    if d < 1 or r <= 0 or v0 <= 0 or tau < 0:
        raise DomainException(
            detail=f'Недопустимые параметры: d={d}, r={r}, v0={v0}, '
            f'tau={tau}',
        )
    return CaptureVolumeBound(
        d=d,
        r=r,
        v0=v0,
        tau=tau,
        beta=2 * v0 * ball_volume(d=d - 1, radius=2 * r),
        additive=ball_volume(d=d, radius=2 * r),
    )


@dataclass(frozen=True)
class CaptureVolumeEstimate:
    """Монте-Карло оценка объёма со стандартной ошибкой.

    Args:
        volume: Оценка объёма
        standard_error: Стандартная ошибка оценки
        samples: Число выборочных точек
    """

    volume: float
    standard_error: float
    samples: int


def capture_volume_mc(
    v1: Vector,
    v2: Vector,
    r: float,
    tau: float,
    samples: int,
    rng: np.random.Generator,
    v0: float | None = None,
) -> CaptureVolumeEstimate:
    """Оценивает объём объединения шаров радиуса 2r вдоль t·(v1 - v2).

    Точки выбираются равномерно в описанном параллелепипеде; точка попадает
    в объединение, если расстояние до отрезка [0, τ·(v1 - v2)] не больше 2r.

    Args:
        v1: Скорость первой частицы
        v2: Скорость второй частицы
        r: Радиус трубки
        tau: Горизонт времени
        samples: Число точек (не меньше 1000)
        rng: Генератор случайных чисел
        v0: Граница скоростей для проверки входа, если задана

    Returns:
        CaptureVolumeEstimate: Оценка объёма

    Raises:
        DomainException: Если выборка мала или скорость больше v0
    """
    v1 = as_vector(coords=v1)
    v2 = as_vector(coords=v2, dimension=v1.size)
    if samples < MIN_CAPTURE_SAMPLES:
        raise DomainException(
            detail=f'Нужно не меньше {MIN_CAPTURE_SAMPLES} точек',
        )
    if v0 is not None and max(norm(v1), norm(v2)) > v0 * (1 + 1e-12):
        raise DomainException(detail=f'Скорость превышает v0 = {v0}')

    radius = 2 * r
    sweep = tau * (v1 - v2)
    lower = np.minimum(sweep, 0.0) - radius
    upper = np.maximum(sweep, 0.0) + radius
    box_volume = float(np.prod(upper - lower))

    points = rng.uniform(low=lower, high=upper, size=(samples, v1.size))
    length_sq = float(np.dot(sweep, sweep))
    if length_sq > 0:
        share = np.clip(points @ sweep / length_sq, 0.0, 1.0)
        points = points - np.outer(share, sweep)
    hits = np.einsum('ij,ij->i', points, points) <= radius * radius

    fraction = float(np.mean(hits))
    return CaptureVolumeEstimate(
        volume=box_volume * fraction,
        standard_error=box_volume
        * math.sqrt(fraction * (1 - fraction) / samples),
        samples=samples,
    )
