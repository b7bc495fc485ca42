"""Репозитории траекторий и журналов событий."""

from pathlib import Path

from dynamic_clusters.dynamics.models import (
    Event,
    ParticleState,
    Trajectory,
    TrajectoryRecord,
)
from dynamic_clusters.repository.base import BaseRepositoryClass
from dynamic_clusters.schemas.records import (
    EventSchema,
    ParticleStateSchema,
    SegmentSchema,
    TrajectorySchema,
)

__all__ = [
    'TrajectoryRepository',
    'EventRepository',
]


class TrajectoryRepository(BaseRepositoryClass[Trajectory, TrajectorySchema]):
    """Файл trajectories.jsonl: одна частица на строку."""

    schema = TrajectorySchema

    def __init__(self, path: Path, horizon: float) -> None:
        """Инициализирует репозиторий.

        Args:
            path: Путь к файлу
            horizon: Горизонт τ, на котором заданы траектории
        """
        super().__init__(path=path)
        self.__horizon = horizon

    def _schema_to_dto(self, schema: TrajectorySchema) -> Trajectory:
        """Собирает траекторию из записи.

        Args:
            schema: Запись файла

        Returns:
            Trajectory
        """
        return Trajectory(
            particle_id=schema.particle_id,
            records=tuple(
                TrajectoryRecord(
                    t=segment.t,
                    x=segment.x,
                    v=segment.v,
                    a=segment.a,
                )
                for segment in schema.segments
            ),
            horizon=self.__horizon,
        )

    def _dto_to_schema(self, dto: Trajectory) -> TrajectorySchema:
        """Раскладывает траекторию в запись.

        Args:
            dto: Траектория

        Returns:
            TrajectorySchema
        """
        return TrajectorySchema(
            particle_id=dto.particle_id,
            segments=[
                SegmentSchema(
                    t=record.t,
                    x=record.x.tolist(),
                    v=record.v.tolist(),
                    a=record.a,
                )
                for record in dto.records
            ],
        )


class EventRepository(BaseRepositoryClass[Event, EventSchema]):
    """Файл events.jsonl: одно событие на строку."""

    schema = EventSchema

    def _schema_to_dto(self, schema: EventSchema) -> Event:
        """Собирает событие из записи.

        Args:
            schema: Запись файла

        Returns:
            Event
        """
        states = None
        if schema.states is not None:
            states = tuple(
                ParticleState(
                    particle_id=state.particle_id,
                    x=state.x,
                    v=state.v,
                    a=state.a,
                )
                for state in schema.states
            )
        return Event(
            t=schema.t,
            kind=schema.kind,
            pair=schema.pair,
            states=states,
        )

    def _dto_to_schema(self, dto: Event) -> EventSchema:
        """Раскладывает событие в запись.

        Args:
            dto: Событие

        Returns:
            EventSchema
        """
        states = None
        if dto.states is not None:
            states = [
                ParticleStateSchema(
                    particle_id=state.particle_id,
                    x=state.x.tolist(),
                    v=state.v.tolist(),
                    a=state.a,
                )
                for state in dto.states
            ]
        return EventSchema(
            t=dto.t,
            kind=dto.kind,
            pair=dto.pair,
            states=states,
        )
