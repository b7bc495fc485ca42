"""Времена контакта частиц, движущихся равномерно.

Расстояние между двумя линейно движущимися точками квадратично по времени:
|dx + dv·s|² = A·s² + 2·B·s + |dx|², поэтому множество моментов, когда оно
не превышает порога, является одним отрезком. Все функции модуля сводятся к
``contact_roots``, работающей сразу с массивом пар.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from dynamic_clusters.exceptions.domain import DomainException
from dynamic_clusters.geometry.vectors import Vector, as_vector

__all__ = [
    'TANGENCY_TOLERANCE',
    'MotionSegment',
    'contact_roots',
    'first_contact_time',
    'contact_interval',
    'min_distance_on_interval',
]

# Касание (нулевой дискриминант) контактом не считается.
TANGENCY_TOLERANCE = 1e-14


@dataclass(frozen=True, eq=False)
class MotionSegment:
    """Участок свободного движения x(t) = x0 + v·(t - t0), t ∈ [t0, t1].

    Args:
        t0: Начало участка
        t1: Конец участка
        x0: Положение в момент t0
        v: Постоянная скорость
    """

    t0: float
    t1: float
    x0: Vector
    v: Vector

    def __post_init__(self) -> None:
        """Проверяет участок движения.

        Raises:
            DomainException: Если t0 > t1 или размерности не совпадают
        """
        object.__setattr__(self, 'x0', as_vector(coords=self.x0))
        object.__setattr__(
            self,
            'v',
            as_vector(coords=self.v, dimension=self.x0.size),
        )
        if not self.t0 <= self.t1:
            raise DomainException(
                detail=f'Участок движения пуст: [{self.t0}, {self.t1}]',
            )

    @property
    def dimension(self) -> int:
        """Размерность пространства.

        Returns:
            int: d
        """
        return int(self.x0.size)

    def position(self, t: float) -> Vector:
        """Положение в момент t.

        Args:
            t: Момент времени

        Returns:
            Vector: x0 + v·(t - t0)
        """
        return self.x0 + self.v * (t - self.t0)


def contact_roots(
    dx: NDArray[np.float64],
    dv: NDArray[np.float64],
    threshold: float,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Находит отрезки контакта для массива пар.

    Для каждой пары решается |dx + dv·s|² ≤ threshold² при s ≥ 0.
    Корни берутся в устойчивой форме q = -(B + sign(B)·√D).

    Args:
        dx: Относительные положения в начале окна, форма (n, d)
        dv: Относительные скорости, форма (n, d)
        threshold: Порог контакта

    Returns:
        tuple: Массивы смещений входа и выхода относительно начала окна.
            Вход равен 0, если пара уже в контакте; выход равен inf, если
            пара не расходится; nan там, где контакта при s ≥ 0 нет.
    """
    dx = np.atleast_2d(dx)
    dv = np.atleast_2d(dv)
    a = np.einsum('ij,ij->i', dv, dv)
    b = np.einsum('ij,ij->i', dx, dv)
    c = np.einsum('ij,ij->i', dx, dx) - threshold * threshold
    disc = b * b - a * c

    enter = np.full(a.shape, np.nan)
    leave = np.full(a.shape, np.nan)

    moving = a > 0
    touching = c <= 0
    enter[touching] = 0.0
    leave[touching & ~moving] = np.inf

    with np.errstate(divide='ignore', invalid='ignore'):
        q = -(b + np.copysign(np.sqrt(np.maximum(disc, 0.0)), b))
        root_q = q / a
        root_c = np.where(q != 0, c / q, 0.0)
    low = np.minimum(root_q, root_c)
    high = np.maximum(root_q, root_c)

    inside = touching & moving
    leave[inside] = np.maximum(high[inside], 0.0)

    scale = b * b + a * np.abs(c)
    approaching = (
        ~touching & moving & (b < 0) & (disc > TANGENCY_TOLERANCE * scale)
    )
    enter[approaching] = low[approaching]
    leave[approaching] = high[approaching]
    return enter, leave


def _common_window(a: MotionSegment, b: MotionSegment) -> tuple[float, float]:
    """Общее окно времени двух участков.

    Args:
        a: Первый участок
        b: Второй участок

    Returns:
        tuple[float, float]: Начало и конец пересечения окон

    Raises:
        DomainException: Если окна не пересекаются или размерности разные
    """
    if a.dimension != b.dimension:
        raise DomainException(
            detail=f'Размерности участков различны: '
            f'{a.dimension} и {b.dimension}',
        )
    start = max(a.t0, b.t0)
    end = min(a.t1, b.t1)
    if start > end:
        raise DomainException(
            detail=f'Окна [{a.t0}, {a.t1}] и [{b.t0}, {b.t1}] '
            f'не пересекаются',
        )
    return start, end


def _relative(
    a: MotionSegment,
    b: MotionSegment,
    start: float,
) -> tuple[Vector, Vector]:
    """Относительные положение и скорость пары в момент start.

    Args:
        a: Первый участок
        b: Второй участок
        start: Момент времени

    Returns:
        tuple[Vector, Vector]: dx и dv
    """
    return a.position(t=start) - b.position(t=start), a.v - b.v


def contact_interval(
    a: MotionSegment,
    b: MotionSegment,
    threshold: float,
) -> tuple[float, float] | None:
    """Замкнутый отрезок контакта пары внутри общего окна.

    Args:
        a: Первый участок
        b: Второй участок
        threshold: Порог контакта (2r)

    Returns:
        tuple[float, float] | None: Моменты входа и выхода или None

    Raises:
        DomainException: Если порог не положителен
    """
    if threshold <= 0:
        raise DomainException(detail='Порог контакта должен быть > 0')
    start, end = _common_window(a=a, b=b)
    dx, dv = _relative(a=a, b=b, start=start)
    enter, leave = contact_roots(dx=dx, dv=dv, threshold=threshold)
    if np.isnan(enter[0]) or start + enter[0] > end:
        return None
    return start + float(enter[0]), min(start + float(leave[0]), end)


def first_contact_time(
    a: MotionSegment,
    b: MotionSegment,
    threshold: float,
) -> float | None:
    """Первый момент, когда расстояние между частицами не больше порога.

    Args:
        a: Первый участок
        b: Второй участок
        threshold: Порог контакта (2r)

    Returns:
        float | None: Момент первого контакта или None
    """
    interval = contact_interval(a=a, b=b, threshold=threshold)
    if interval is None:
        return None
    return interval[0]


def min_distance_on_interval(
    a: MotionSegment,
    b: MotionSegment,
) -> tuple[float, float]:
    """Момент и величина минимального расстояния на общем окне.

    Args:
        a: Первый участок
        b: Второй участок

    Returns:
        tuple[float, float]: argmin и min расстояния
    """
    start, end = _common_window(a=a, b=b)
    dx, dv = _relative(a=a, b=b, start=start)
    speed_sq = float(np.dot(dv, dv))
    offset = 0.0
    if speed_sq > 0:
        offset = min(max(-float(np.dot(dx, dv)) / speed_sq, 0.0), end - start)
    gap = dx + dv * offset
    return start + offset, float(np.sqrt(np.dot(gap, gap)))
