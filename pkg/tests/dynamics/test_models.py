"""Тесты для состояний частиц, траекторий и журнала событий."""

import numpy as np
import pytest
from hamcrest import assert_that, equal_to

from dynamic_clusters.dynamics.models import (
    Event,
    EventLog,
    ParticleState,
    Trajectory,
    TrajectoryRecord,
)
from dynamic_clusters.exceptions.domain import (
    DomainException,
    InvariantBreachException,
)


def broken_line() -> Trajectory:
    """Траектория с поворотом в момент 2."""
    return Trajectory(
        particle_id=4,
        records=(
            TrajectoryRecord(t=0.0, x=(0.0, 0.0), v=(1.0, 0.0)),
            TrajectoryRecord(t=2.0, x=(2.0, 0.0), v=(0.0, 1.0), a=2),
        ),
        horizon=5.0,
    )


class TestParticleState:
    """Тесты состояния частицы."""

    def test_non_finite(self) -> None:
        """Бесконечная координата нарушает инвариант."""
        with pytest.raises(expected_exception=InvariantBreachException):
            ParticleState(particle_id=1, x=(np.inf, 0.0), v=(0.0, 0.0))

    def test_speed(self) -> None:
        """Модуль скорости."""
        state = ParticleState(particle_id=1, x=(0.0, 0.0), v=(3.0, 4.0))
        assert_that(
            actual_or_assertion=state.speed,
            matcher=equal_to(obj=5.0),
        )


class TestTrajectory:
    """Тесты кусочно-линейной траектории."""

    def test_position_and_state(self) -> None:
        """Положение и состояние после поворота."""
        trajectory = broken_line()
        state = trajectory.state_at(t=3.0)
        assert_that(
            actual_or_assertion=(state.x.tolist(), state.v.tolist(), state.a),
            matcher=equal_to(obj=([2.0, 1.0], [0.0, 1.0], 2)),
        )

    def test_segments_cover_horizon(self) -> None:
        """Участки покрывают [0, τ] без зазоров."""
        segments = broken_line().segments()
        assert_that(
            actual_or_assertion=[(item.t0, item.t1) for item in segments],
            matcher=equal_to(obj=[(0.0, 2.0), (2.0, 5.0)]),
        )

    def test_max_speed(self) -> None:
        """Наибольшая скорость по участкам."""
        assert_that(
            actual_or_assertion=broken_line().max_speed,
            matcher=equal_to(obj=1.0),
        )

    def test_must_start_at_zero(self) -> None:
        """Первая запись должна быть в момент 0."""
        with pytest.raises(expected_exception=DomainException):
            Trajectory(
                particle_id=1,
                records=(TrajectoryRecord(t=1.0, x=(0.0,), v=(0.0,)),),
                horizon=2.0,
            )

    def test_discontinuity(self) -> None:
        """Скачок положения недопустим."""
        with pytest.raises(expected_exception=DomainException):
            Trajectory(
                particle_id=1,
                records=(
                    TrajectoryRecord(t=0.0, x=(0.0,), v=(1.0,)),
                    TrajectoryRecord(t=1.0, x=(3.0,), v=(1.0,)),
                ),
                horizon=2.0,
            )

    def test_record_beyond_horizon(self) -> None:
        """Запись на горизонте или позже недопустима."""
        with pytest.raises(expected_exception=DomainException):
            Trajectory(
                particle_id=1,
                records=(
                    TrajectoryRecord(t=0.0, x=(0.0,), v=(1.0,)),
                    TrajectoryRecord(t=2.0, x=(2.0,), v=(1.0,)),
                ),
                horizon=2.0,
            )


class TestEventLog:
    """Тесты журнала событий."""

    def test_of_kind(self) -> None:
        """Отбор событий по виду."""
        log = EventLog(
            events=(
                Event(t=1.0, kind='contact-start', pair=(1, 2)),
                Event(t=2.0, kind='contact-end', pair=(1, 2)),
            ),
        )
        assert_that(
            actual_or_assertion=[
                event.t for event in log.of_kind(kind='contact-end')
            ],
            matcher=equal_to(obj=[2.0]),
        )

    def test_unordered(self) -> None:
        """Убывающие моменты нарушают инвариант."""
        with pytest.raises(expected_exception=InvariantBreachException):
            EventLog(
                events=(
                    Event(t=2.0, kind='contact-start', pair=(1, 2)),
                    Event(t=1.0, kind='contact-end', pair=(1, 2)),
                ),
            )
