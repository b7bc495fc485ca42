"""Схемы файловых записей: траектории, события, кластеры и деревья."""

from typing import Literal

from pydantic import Field, field_validator

from dynamic_clusters.schemas.base import CustomBaseModel
from dynamic_clusters.schemas.validators import check_finite_vector

__all__ = [
    'SegmentSchema',
    'TrajectorySchema',
    'ParticleStateSchema',
    'EventSchema',
    'EdgeSchema',
    'ClustersSchema',
    'TreeNodeSchema',
    'TreeSchema',
]


class SegmentSchema(CustomBaseModel):
    """Начало участка свободного движения."""

    t: float = Field(
        alias='t',
        description='Момент начала участка',
        examples=[0.0],
    )
    x: list[float] = Field(
        alias='x',
        description='Положение в момент t',
        examples=[[0.0, 0.0]],
    )
    v: list[float] = Field(
        alias='v',
        description='Скорость на участке',
        examples=[[1.0, 0.0]],
    )
    a: int = Field(
        alias='a',
        description='Тип частицы на участке',
        examples=[1],
    )

    @field_validator('x', 'v')
    @classmethod
    def validate_vector(cls, value: list[float]) -> list[float]:
        """Проверяет конечность координат.

        Args:
            value: Координаты

        Returns:
            list[float]: Координаты, прошедшие проверку
        """
        return check_finite_vector(value=value)


class TrajectorySchema(CustomBaseModel):
    """Строка trajectories.jsonl: одна частица."""

    particle_id: int = Field(
        alias='id',
        description='Идентификатор частицы',
        examples=[0],
    )
    segments: list[SegmentSchema] = Field(
        alias='segments',
        description='Участки в порядке времени',
        examples=[[{'t': 0.0, 'x': [0.0, 0.0], 'v': [1.0, 0.0], 'a': 1}]],
        min_length=1,
    )


class ParticleStateSchema(CustomBaseModel):
    """Состояние частицы после скачка."""

    particle_id: int = Field(
        alias='id',
        description='Идентификатор частицы',
        examples=[0],
    )
    x: list[float] = Field(
        alias='x',
        description='Положение',
        examples=[[0.0, 0.0]],
    )
    v: list[float] = Field(
        alias='v',
        description='Новая скорость',
        examples=[[0.0, 1.0]],
    )
    a: int = Field(
        alias='a',
        description='Новый тип',
        examples=[1],
    )


class EventSchema(CustomBaseModel):
    """Строка events.jsonl."""

    t: float = Field(
        alias='t',
        description='Момент события',
        examples=[4.0],
    )
    kind: Literal['contact-start', 'contact-end', 'jump'] = Field(
        alias='kind',
        description='Вид события',
        examples=['contact-start'],
    )
    pair: tuple[int, int] = Field(
        alias='pair',
        description='Пара частиц (i, j), i < j',
        examples=[[0, 1]],
    )
    states: list[ParticleStateSchema] | None = Field(
        alias='states',
        description='Состояния пары после скачка',
        examples=[None],
        default=None,
    )


class EdgeSchema(CustomBaseModel):
    """Ребро графа взаимодействий."""

    i: int = Field(
        alias='i',
        description='Меньшая частица пары',
        examples=[0],
    )
    j: int = Field(
        alias='j',
        description='Большая частица пары',
        examples=[1],
    )
    s: float = Field(
        alias='s',
        description='Момент первого контакта',
        examples=[4.0],
    )


class ClustersSchema(CustomBaseModel):
    """Документ clusters.json."""

    vertices: list[int] = Field(
        alias='vertices',
        description='Идентификаторы частиц',
        examples=[[0, 1]],
    )
    edges: list[EdgeSchema] = Field(
        alias='edges',
        description='Рёбра с моментами первого контакта',
        examples=[[{'i': 0, 'j': 1, 's': 4.0}]],
    )
    components: dict[int, list[int]] = Field(
        alias='components',
        description='Номер кластера (наименьшая частица) -> частицы',
        examples=[{0: [0, 1]}],
    )


class TreeNodeSchema(CustomBaseModel):
    """Вершина дерева: лист с частицами или слияние."""

    members: list[int] | None = Field(
        alias='members',
        description='Частицы листа',
        examples=[[0]],
        default=None,
    )
    t: float | None = Field(
        alias='t',
        description='Момент слияния',
        examples=[None],
        default=None,
    )
    i: int | None = Field(
        alias='i',
        description='Частица левого поддерева из пары',
        examples=[None],
        default=None,
    )
    j: int | None = Field(
        alias='j',
        description='Частица правого поддерева из пары',
        examples=[None],
        default=None,
    )
    left: 'TreeNodeSchema | None' = Field(
        alias='left',
        description='Левое поддерево',
        examples=[None],
        default=None,
    )
    right: 'TreeNodeSchema | None' = Field(
        alias='right',
        description='Правое поддерево',
        examples=[None],
        default=None,
    )


class TreeSchema(CustomBaseModel):
    """Дерево подкластеров одного кластера в trees.json."""

    cluster: int = Field(
        alias='cluster',
        description='Номер кластера',
        examples=[0],
    )
    variant: Literal['particles', 'initial'] = Field(
        alias='variant',
        description='Листья: частицы или начальные подкластеры',
        examples=['particles'],
    )
    times: list[float] = Field(
        alias='times',
        description='Моменты слияний по возрастанию',
        examples=[[4.0]],
    )
    newick: str = Field(
        alias='newick',
        description='Компактная текстовая запись',
        examples=['(0,1)4:0-1;'],
    )
    root: TreeNodeSchema = Field(
        alias='root',
        description='Корень дерева',
        examples=[{'members': [0]}],
    )
