"""Модели состояний частиц, траекторий и журнала событий."""

from dataclasses import dataclass
from typing import Literal

import numpy as np

from dynamic_clusters.exceptions.domain import (
    DomainException,
    InvariantBreachException,
)
from dynamic_clusters.geometry.contact import MotionSegment
from dynamic_clusters.geometry.vectors import Vector, as_vector, norm

__all__ = [
    'CONTINUITY_TOLERANCE',
    'EventKind',
    'ParticleState',
    'TrajectoryRecord',
    'Trajectory',
    'Event',
    'EventLog',
]

CONTINUITY_TOLERANCE = 1e-9

EventKind = Literal['contact-start', 'contact-end', 'jump']


@dataclass(frozen=True, eq=False)
class ParticleState:
    """Состояние частицы Y = (x, a, v) в некоторый момент.

    Args:
        particle_id: Идентификатор частицы
        x: Положение
        v: Скорость
        a: Тип частицы из {1, ..., A}
    """

    particle_id: int
    x: Vector
    v: Vector
    a: int = 1

    def __post_init__(self) -> None:
        """Приводит координаты к неизменяемым векторам.

        Raises:
            InvariantBreachException: Если состояние не конечно
        """
        try:
            x = as_vector(coords=self.x)
            v = as_vector(coords=self.v, dimension=x.size)
        except DomainException as exc:
            raise InvariantBreachException(
                detail=f'Частица {self.particle_id}: {exc.detail}',
            ) from exc
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'v', v)

    @property
    def speed(self) -> float:
        """Модуль скорости.

        Returns:
            float: |v|
        """
        return norm(vector=self.v)

    def __eq__(self, other: object) -> bool:
        """Покоординатное сравнение состояний.

        Args:
            other: Другой объект

        Returns:
            bool: True, если состояния совпадают
        """
        if not isinstance(other, ParticleState):
            return NotImplemented
        return (
            self.particle_id == other.particle_id
            and self.a == other.a
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.v, other.v)
        )


@dataclass(frozen=True, eq=False)
class TrajectoryRecord:
    """Начало участка свободного движения траектории.

    Args:
        t: Момент начала участка
        x: Положение в момент t
        v: Скорость на участке
        a: Тип частицы на участке
    """

    t: float
    x: Vector
    v: Vector
    a: int = 1

    def __post_init__(self) -> None:
        """Приводит координаты к неизменяемым векторам."""
        x = as_vector(coords=self.x)
        object.__setattr__(self, 'x', x)
        object.__setattr__(
            self,
            'v',
            as_vector(coords=self.v, dimension=x.size),
        )

    def __eq__(self, other: object) -> bool:
        """Покоординатное сравнение записей.

        Args:
            other: Другой объект

        Returns:
            bool: True, если записи совпадают
        """
        if not isinstance(other, TrajectoryRecord):
            return NotImplemented
        return (
            self.t == other.t
            and self.a == other.a
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.v, other.v)
        )


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Кусочно-линейная траектория частицы на [0, horizon].

    Args:
        particle_id: Идентификатор частицы
        records: Упорядоченные начала участков; первый в момент 0
        horizon: Горизонт времени τ
    """

    particle_id: int
    records: tuple[TrajectoryRecord, ...]
    horizon: float

    def __post_init__(self) -> None:
        """Проверяет упорядоченность и непрерывность траектории.

        Raises:
            DomainException: Если траектория некорректна
        """
        records = tuple(self.records)
        object.__setattr__(self, 'records', records)
        if not records or records[0].t != 0:
            raise DomainException(
                detail=f'Траектория {self.particle_id} должна начинаться '
                f'в момент 0',
            )
        for previous, current in zip(records, records[1:]):
            if not previous.t < current.t < self.horizon:
                raise DomainException(
                    detail=f'Траектория {self.particle_id}: моменты '
                    f'{previous.t}, {current.t} не возрастают',
                )
            expected = previous.x + previous.v * (current.t - previous.t)
            scale = 1 + float(np.max(np.abs(expected)))
            if np.max(np.abs(expected - current.x)) > (
                CONTINUITY_TOLERANCE * scale
            ):
                raise DomainException(
                    detail=f'Траектория {self.particle_id} разрывна '
                    f'в момент {current.t}',
                )

    @property
    def dimension(self) -> int:
        """Размерность пространства.

        Returns:
            int: d
        """
        return int(self.records[0].x.size)

    @property
    def max_speed(self) -> float:
        """Наибольший модуль скорости на траектории.

        Returns:
            float: max |v|
        """
        return max(norm(vector=record.v) for record in self.records)

    def segments(self) -> list[MotionSegment]:
        """Участки свободного движения, покрывающие [0, horizon].

        Returns:
            list[MotionSegment]: Участки в порядке времени
        """
        ends = [record.t for record in self.records[1:]] + [self.horizon]
        return [
            MotionSegment(t0=record.t, t1=end, x0=record.x, v=record.v)
            for record, end in zip(self.records, ends)
        ]

    def record_at(self, t: float) -> TrajectoryRecord:
        """Запись участка, действующего в момент t.

        Args:
            t: Момент времени

        Returns:
            TrajectoryRecord: Последняя запись с началом не позже t
        """
        current = self.records[0]
        for record in self.records[1:]:
            if record.t > t:
                break
            current = record
        return current

    def position(self, t: float) -> Vector:
        """Положение частицы в момент t.

        Args:
            t: Момент времени

        Returns:
            Vector: x(t)
        """
        record = self.record_at(t=t)
        return record.x + record.v * (t - record.t)

    def state_at(self, t: float) -> ParticleState:
        """Состояние частицы в момент t.

        Args:
            t: Момент времени

        Returns:
            ParticleState: (x(t), v(t), a(t))
        """
        record = self.record_at(t=t)
        return ParticleState(
            particle_id=self.particle_id,
            x=self.position(t=t),
            v=record.v,
            a=record.a,
        )

    def __eq__(self, other: object) -> bool:
        """Сравнение траекторий по всем записям.

        Args:
            other: Другой объект

        Returns:
            bool: True, если траектории совпадают
        """
        if not isinstance(other, Trajectory):
            return NotImplemented
        return (
            self.particle_id == other.particle_id
            and self.horizon == other.horizon
            and self.records == other.records
        )


@dataclass(frozen=True, eq=False)
class Event:
    """Событие динамики.

    Args:
        t: Момент события
        kind: Вид события
        pair: Пара частиц (i, j), i < j
        states: Новые состояния пары после скачка
    """

    t: float
    kind: EventKind
    pair: tuple[int, int]
    states: tuple[ParticleState, ...] | None = None

    def __eq__(self, other: object) -> bool:
        """Сравнение событий.

        Args:
            other: Другой объект

        Returns:
            bool: True, если события совпадают
        """
        if not isinstance(other, Event):
            return NotImplemented
        return (
            self.t == other.t
            and self.kind == other.kind
            and self.pair == other.pair
            and self.states == other.states
        )


@dataclass(frozen=True)
class EventLog:
    """Журнал событий одной реплики в порядке времени.

    Args:
        events: События
    """

    events: tuple[Event, ...] = ()

    def __post_init__(self) -> None:
        """Проверяет неубывание моментов событий.

        Raises:
            InvariantBreachException: Если моменты убывают
        """
        for previous, current in zip(self.events, self.events[1:]):
            if current.t < previous.t:
                raise InvariantBreachException(
                    detail=f'Журнал событий не упорядочен: {previous.t} > '
                    f'{current.t}',
                )

    def of_kind(self, kind: EventKind) -> list[Event]:
        """События заданного вида.

        Args:
            kind: Вид события

        Returns:
            list[Event]: События в порядке времени
        """
        return [event for event in self.events if event.kind == kind]

    def __len__(self) -> int:
        """Число событий.

        Returns:
            int: len(events)
        """
        return len(self.events)
