"""Событийная симуляция одной реплики на отрезке [0, τ].

Между событиями частицы летят свободно. События трёх видов: начало и конец
контакта пары (расстояние не больше порога) и скачок пары в контакте.
Отрезки контакта пар хранятся массивами и пересчитываются только для пар,
задетых скачком.
"""

from typing import Callable, NamedTuple, Sequence

import numpy as np
from numpy.typing import NDArray

from dynamic_clusters.dynamics.kernels import JumpKernel
from dynamic_clusters.dynamics.models import (
    Event,
    EventKind,
    EventLog,
    ParticleState,
    Trajectory,
    TrajectoryRecord,
)
from dynamic_clusters.dynamics.scheduler import (
    ActivePair,
    JumpCandidate,
    next_jump_candidate,
)
from dynamic_clusters.exceptions.domain import (
    DomainException,
    InvariantBreachException,
)
from dynamic_clusters.geometry.contact import contact_interval, contact_roots
from dynamic_clusters.geometry.grid import UniformGrid
from dynamic_clusters.logging.logger import get_logger
from dynamic_clusters.schemas.validators import check_speed_bound
from dynamic_clusters.settings.simulation import SimulationSettings

__all__ = [
    'MERGE_TOLERANCE',
    'SimulationResult',
    'candidate_pairs',
    'contact_intervals',
    'simulate_replica',
]

logger = get_logger(name=__name__)

MERGE_TOLERANCE = 1e-12


class SimulationResult(NamedTuple):
    """Траектории и журнал событий реплики.

    Args:
        trajectories: Траектории в порядке начальных состояний
        events: Журнал событий
    """

    trajectories: tuple[Trajectory, ...]
    events: EventLog


def candidate_pairs(
    positions: NDArray[np.float64],
    reach: float,
) -> NDArray[np.int64]:
    """Пары индексов, которые вообще могут встретиться до τ.

    Args:
        positions: Начальные положения, форма (n, d)
        reach: threshold + 2·v0·τ

    Returns:
        NDArray[np.int64]: Лексикографически упорядоченные пары
    """
    if len(positions) < 2:
        return np.empty((0, 2), dtype=np.int64)
    grid = UniformGrid(points=positions, cell_size=reach)
    return grid.candidate_pairs(radius=reach)


def _check_state(
    state: ParticleState,
    config: SimulationSettings,
    error: Callable[[str], Exception],
) -> None:
    """Проверяет границу скорости, тип и размерность состояния.

    Args:
        state: Состояние частицы
        config: Настройки симуляции
        error: Фабрика исключения по сообщению
    """
    if state.x.size != config.d:
        raise error(
            f'Частица {state.particle_id}: размерность {state.x.size} '
            f'вместо {config.d}',
        )
    if not 1 <= state.a <= config.type_count:
        raise error(
            f'Частица {state.particle_id}: тип {state.a} вне '
            f'1..{config.type_count}',
        )
    try:
        check_speed_bound(value=state.v.tolist(), bound=config.v0)
    except ValueError as exc:
        raise error(f'Частица {state.particle_id}: {exc}') from exc


def _check_initial(
    initial: Sequence[ParticleState],
    config: SimulationSettings,
) -> None:
    ids = [state.particle_id for state in initial]
    if len(set(ids)) != len(ids):
        raise DomainException(detail='Идентификаторы частиц повторяются')
    for state in initial:
        _check_state(
            state=state,
            config=config,
            error=lambda detail: DomainException(detail=detail),
        )


def _pair_ids(
    ids: Sequence[int],
    first: int,
    second: int,
) -> tuple[int, int]:
    low, high = sorted((ids[first], ids[second]))
    return low, high


def _free_flight(
    config: SimulationSettings,
    initial: Sequence[ParticleState],
    record_events: bool,
) -> SimulationResult:
    """Свободный пролёт: по одному участку на траекторию.

    Args:
        config: Настройки симуляции
        initial: Начальные состояния
        record_events: Записывать ли события контакта

    Returns:
        SimulationResult: Траектории и события контакта
    """
    trajectories = tuple(
        Trajectory(
            particle_id=state.particle_id,
            records=(
                TrajectoryRecord(t=0.0, x=state.x, v=state.v, a=state.a),
            ),
            horizon=config.tau,
        )
        for state in initial
    )
    if not record_events or len(initial) < 2:
        return SimulationResult(trajectories=trajectories, events=EventLog())

    ids = [state.particle_id for state in initial]
    positions = np.array([state.x for state in initial])
    velocities = np.array([state.v for state in initial])
    pairs = candidate_pairs(positions=positions, reach=config.reach)
    enter, leave = contact_roots(
        dx=positions[pairs[:, 0]] - positions[pairs[:, 1]],
        dv=velocities[pairs[:, 0]] - velocities[pairs[:, 1]],
        threshold=config.contact_threshold,
    )
    keyed: list[tuple[float, int, Event]] = []
    for index in np.flatnonzero(~np.isnan(enter)).tolist():
        pair = _pair_ids(
            ids=ids,
            first=int(pairs[index, 0]),
            second=int(pairs[index, 1]),
        )
        for t, kind in ((enter[index], 'contact-start'),
                        (leave[index], 'contact-end')):
            if t < config.tau:
                keyed.append(
                    (float(t), index, Event(t=float(t), kind=kind, pair=pair)),
                )
    keyed.sort(key=lambda item: (item[0], item[1]))
    return SimulationResult(
        trajectories=trajectories,
        events=EventLog(events=tuple(item[2] for item in keyed)),
    )


class _JumpReplica:
    """Событийный цикл для динамики со скачками."""

    def __init__(
        self,
        config: SimulationSettings,
        initial: Sequence[ParticleState],
        kernel: JumpKernel,
        rng: np.random.Generator,
        record_events: bool,
    ) -> None:
        self._config = config
        self._kernel = kernel
        self._rng = rng
        self._record_events = record_events
        self._events: list[Event] = []

        self._ids = [state.particle_id for state in initial]
        self._x = np.array([state.x for state in initial])
        self._v = np.array([state.v for state in initial])
        self._t0 = np.zeros(len(initial))
        self._types = [state.a for state in initial]
        self._records = [
            [TrajectoryRecord(t=0.0, x=state.x, v=state.v, a=state.a)]
            for state in initial
        ]

        self._pairs = candidate_pairs(positions=self._x, reach=config.reach)
        self._by_particle: list[list[int]] = [[] for _ in initial]
        for index, (first, second) in enumerate(self._pairs.tolist()):
            self._by_particle[first].append(index)
            self._by_particle[second].append(index)
        self._enter = np.full(len(self._pairs), np.inf)
        self._leave = np.full(len(self._pairs), np.inf)
        self._active = np.zeros(len(self._pairs), dtype=bool)
        self._refresh(indices=np.arange(len(self._pairs)), now=0.0)

    def _positions(self, indices: NDArray[np.int64], t: float) -> NDArray:
        return self._x[indices] + self._v[indices] * (
            t - self._t0[indices]
        )[:, None]

    def _state(self, index: int, t: float) -> ParticleState:
        return ParticleState(
            particle_id=self._ids[index],
            x=self._x[index] + self._v[index] * (t - self._t0[index]),
            v=self._v[index],
            a=self._types[index],
        )

    def _refresh(self, indices: NDArray[np.int64], now: float) -> None:
        """Пересчитывает отрезки контакта пар от момента now.

        Пара, которая была в контакте, но по округлению уже вне порога,
        выходит из контакта в момент now.

        Args:
            indices: Индексы пар
            now: Текущий момент
        """
        if indices.size == 0:
            return
        first = self._pairs[indices, 0]
        second = self._pairs[indices, 1]
        enter, leave = contact_roots(
            dx=self._positions(first, now) - self._positions(second, now),
            dv=self._v[first] - self._v[second],
            threshold=self._config.contact_threshold,
        )
        found = ~np.isnan(enter)
        new_enter = np.where(found, now + enter, np.inf)
        new_leave = np.where(found, now + leave, np.inf)
        new_leave[self._active[indices] & ~found] = now
        self._enter[indices] = new_enter
        self._leave[indices] = new_leave

    def _emit(
        self,
        t: float,
        kind: EventKind,
        index: int,
        states: tuple[ParticleState, ...] | None = None,
    ) -> None:
        if not self._record_events:
            return
        first, second = self._pairs[index].tolist()
        event = Event(
            t=t,
            kind=kind,
            pair=_pair_ids(ids=self._ids, first=first, second=second),
            states=states,
        )
        logger.debug(
            msg='Событие динамики',
            extra={'context': {'t': t, 'kind': kind, 'pair': event.pair}},
        )
        self._events.append(event)

    def _rate(self, first: int, second: int) -> Callable[[float], float]:
        def rate(t: float) -> float:
            return self._kernel.rate(
                self._state(index=first, t=t),
                self._state(index=second, t=t),
            )

        return rate

    def _active_pairs(self) -> list[ActivePair]:
        return [
            ActivePair(
                pair=(int(first), int(second)),
                rate=self._rate(first=int(first), second=int(second)),
                rate_bound=self._kernel.rate_bound,
            )
            for first, second in self._pairs[self._active]
        ]

    def _cross(self, index: int, t: float) -> None:
        """Обрабатывает границу отрезка контакта пары.

        Args:
            index: Индекс пары
            t: Момент границы
        """
        if self._active[index]:
            self._active[index] = False
            self._enter[index] = np.inf
            self._leave[index] = np.inf
            self._emit(t=t, kind='contact-end', index=index)
        else:
            self._active[index] = True
            self._emit(t=t, kind='contact-start', index=index)

    def _apply(self, index: int, t: float, state: ParticleState) -> None:
        self._x[index] = state.x
        self._v[index] = state.v
        self._t0[index] = t
        self._types[index] = state.a
        record = TrajectoryRecord(t=t, x=state.x, v=state.v, a=state.a)
        if self._records[index][-1].t == t:
            self._records[index][-1] = record
        else:
            self._records[index].append(record)

    def _jump(self, candidate: JumpCandidate) -> None:
        """Применяет ядро к паре в момент принятого тика.

        Args:
            candidate: Принятый тик

        Raises:
            InvariantBreachException: Если исход ядра нарушает ограничения
        """
        t = candidate.t
        first, second = candidate.pair
        before = (
            self._state(index=first, t=t),
            self._state(index=second, t=t),
        )
        after = self._kernel.sample(before[0], before[1], self._rng)
        for old, new in zip(before, after):
            _check_state(
                state=new,
                config=self._config,
                error=lambda detail: InvariantBreachException(detail=detail),
            )
            if new.particle_id != old.particle_id or not np.array_equal(
                new.x,
                old.x,
            ):
                raise InvariantBreachException(
                    detail=f'Скачок изменил положение частицы '
                    f'{old.particle_id}',
                )
        self._apply(index=first, t=t, state=after[0])
        self._apply(index=second, t=t, state=after[1])
        index = int(
            np.flatnonzero(
                (self._pairs[:, 0] == first) & (self._pairs[:, 1] == second),
            )[0],
        )
        states = after
        if self._ids[first] > self._ids[second]:
            states = (after[1], after[0])
        self._emit(t=t, kind='jump', index=index, states=states)
        touched = np.unique(
            np.array(
                self._by_particle[first] + self._by_particle[second],
                dtype=np.int64,
            ),
        )
        self._refresh(indices=touched, now=t)

    def run(self) -> SimulationResult:
        """Прогоняет события до горизонта τ.

        Returns:
            SimulationResult: Траектории и журнал событий
        """
        horizon = self._config.tau
        now = 0.0
        while True:
            boundary = np.where(self._active, self._leave, self._enter)
            index = int(np.argmin(boundary)) if boundary.size else -1
            t_boundary = float(boundary[index]) if index >= 0 else np.inf
            candidate = next_jump_candidate(
                active=self._active_pairs(),
                now=now,
                horizon=min(t_boundary, horizon),
                rng=self._rng,
            )
            if candidate is not None:
                now = candidate.t
                self._jump(candidate=candidate)
                continue
            if t_boundary >= horizon:
                break
            now = t_boundary
            self._cross(index=index, t=now)

        trajectories = tuple(
            Trajectory(
                particle_id=particle_id,
                records=tuple(records),
                horizon=horizon,
            )
            for particle_id, records in zip(self._ids, self._records)
        )
        return SimulationResult(
            trajectories=trajectories,
            events=EventLog(events=tuple(self._events)),
        )


def simulate_replica(
    config: SimulationSettings,
    initial: Sequence[ParticleState],
    seed: int | np.random.SeedSequence | np.random.Generator,
    kernel: JumpKernel | None = None,
    record_events: bool = True,
) -> SimulationResult:
    """Эволюция частиц на [0, τ].

    Без ядра или при λ_max = 0 траектории состоят из одного участка и
    генератор не используется, поэтому нулевая интенсивность даёт ровно
    тот же результат, что и свободный пролёт.

    Args:
        config: Настройки симуляции
        initial: Начальные состояния
        seed: Зерно или генератор для скачков
        kernel: Ядро скачков; None означает свободный пролёт
        record_events: Записывать ли журнал событий

    Returns:
        SimulationResult: Траектории на [0, τ] и журнал событий

    Raises:
        DomainException: Если начальные состояния некорректны
        InvariantBreachException: Если ядро нарушает ограничения модели
    """
    _check_initial(initial=initial, config=config)
    if kernel is None or kernel.rate_bound == 0:
        result = _free_flight(
            config=config,
            initial=initial,
            record_events=record_events,
        )
    else:
        result = _JumpReplica(
            config=config,
            initial=initial,
            kernel=kernel,
            rng=np.random.default_rng(seed),
            record_events=record_events,
        ).run()
    logger.debug(
        msg='Реплика просчитана',
        extra={
            'context': {
                'particles': len(initial),
                'events': len(result.events),
            },
        },
    )
    return result


def contact_intervals(
    traj_i: Trajectory,
    traj_j: Trajectory,
    r: float,
    threshold: float | None = None,
) -> list[tuple[float, float]]:
    """Максимальные замкнутые отрезки, когда пара в контакте.

    Участки двух траекторий проходятся двумя указателями; отрезки контакта
    соседних окон, касающиеся друг друга, склеиваются.

    Args:
        traj_i: Первая траектория
        traj_j: Вторая траектория
        r: Радиус трубки
        threshold: Порог контакта; по умолчанию 2r

    Returns:
        list[tuple[float, float]]: Отсортированные непересекающиеся отрезки

    Raises:
        DomainException: Если горизонты траекторий различны
    """
    if traj_i.horizon != traj_j.horizon:
        raise DomainException(detail='Горизонты траекторий различны')
    limit = 2 * r if threshold is None else threshold
    first = traj_i.segments()
    second = traj_j.segments()
    found: list[tuple[float, float]] = []
    a = b = 0
    while a < len(first) and b < len(second):
        window = contact_interval(a=first[a], b=second[b], threshold=limit)
        if window is not None:
            if found and window[0] <= found[-1][1] + MERGE_TOLERANCE:
                found[-1] = (found[-1][0], max(found[-1][1], window[1]))
            else:
                found.append(window)
        end_a, end_b = first[a].t1, second[b].t1
        if end_a <= end_b:
            a += 1
        if end_b <= end_a:
            b += 1
    return found
