"""Разбиения частиц на кластеры и начальные подкластеры."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from dynamic_clusters.clustering.graph import InteractionGraph
from dynamic_clusters.clustering.union_find import UnionFind
from dynamic_clusters.dynamics.models import ParticleState
from dynamic_clusters.exceptions.domain import DomainException
from dynamic_clusters.geometry.grid import UniformGrid

__all__ = [
    'ClusterPartition',
    'InitialSubclusters',
    'connected_components',
    'initial_subclusters',
]


@dataclass(frozen=True)
class ClusterPartition:
    """Разбиение частиц на блоки с каноническими номерами.

    Номер блока равен наименьшему идентификатору его частиц.

    Args:
        assignment: Частица -> номер блока
    """

    assignment: dict[int, int]

    @classmethod
    def from_blocks(
        cls,
        blocks: dict[int, tuple[int, ...]],
    ) -> 'ClusterPartition':
        """Собирает разбиение из блоков.

        Args:
            blocks: Номер -> частицы блока

        Returns:
            ClusterPartition
        """
        return cls(
            assignment={
                particle: min(block)
                for block in blocks.values()
                for particle in block
            },
        )

    @property
    def sizes(self) -> dict[int, int]:
        """Размеры блоков.

        Returns:
            dict[int, int]: Номер блока -> число частиц
        """
        counts: dict[int, int] = {}
        for cluster in self.assignment.values():
            counts[cluster] = counts.get(cluster, 0) + 1
        return dict(sorted(counts.items()))

    def clusters(self) -> dict[int, tuple[int, ...]]:
        """Блоки разбиения.

        Returns:
            dict[int, tuple[int, ...]]: Номер -> отсортированные частицы
        """
        members: dict[int, list[int]] = {}
        for particle, cluster in sorted(self.assignment.items()):
            members.setdefault(cluster, []).append(particle)
        return {
            cluster: tuple(block) for cluster, block in sorted(members.items())
        }

    def cluster_of(self, particle_id: int) -> tuple[int, ...]:
        """Блок, содержащий частицу.

        Args:
            particle_id: Идентификатор частицы

        Returns:
            tuple[int, ...]: Частицы блока

        Raises:
            DomainException: Если частица неизвестна
        """
        if particle_id not in self.assignment:
            raise DomainException(detail=f'Частица {particle_id} не найдена')
        return self.clusters()[self.assignment[particle_id]]

    def __len__(self) -> int:
        """Число блоков.

        Returns:
            int: Количество блоков
        """
        return len(set(self.assignment.values()))


def connected_components(graph: InteractionGraph) -> ClusterPartition:
    """Динамические кластеры: компоненты связности графа.

    Args:
        graph: Граф взаимодействий

    Returns:
        ClusterPartition: Разбиение с номерами по наименьшей частице
    """
    union_find = UnionFind(elements=graph.vertices)
    for edge in graph.edges:
        union_find.union(edge.i, edge.j)
    return ClusterPartition.from_blocks(blocks=union_find.groups())


@dataclass(frozen=True)
class InitialSubclusters:
    """Компоненты графа близости в момент 0.

    Args:
        partition: Разбиение частиц на подкластеры
    """

    partition: ClusterPartition

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Подкластеры, упорядоченные по наименьшей частице.

        Returns:
            tuple[tuple[int, ...], ...]: Блоки
        """
        return tuple(self.partition.clusters().values())

    @property
    def all_singletons(self) -> bool:
        """Все ли подкластеры одноэлементны.

        Returns:
            bool: True, если начальных контактов нет
        """
        return all(len(block) == 1 for block in self.blocks)

    def block_of(self, particle_id: int) -> tuple[int, ...]:
        """Подкластер частицы.

        Args:
            particle_id: Идентификатор частицы

        Returns:
            tuple[int, ...]: Частицы подкластера
        """
        return self.partition.cluster_of(particle_id=particle_id)


def initial_subclusters(
    states: Sequence[ParticleState],
    r: float,
    threshold: float | None = None,
) -> InitialSubclusters:
    """Начальные подкластеры: ребро, если |x_i(0) - x_j(0)| ≤ порога.

    Args:
        states: Состояния частиц в момент 0
        r: Радиус трубки
        threshold: Порог контакта; по умолчанию 2r

    Returns:
        InitialSubclusters: Компоненты графа близости
    """
    limit = 2 * r if threshold is None else threshold
    ids = [state.particle_id for state in states]
    union_find = UnionFind(elements=ids)
    if len(states) > 1:
        grid = UniformGrid(
            points=np.array([state.x for state in states]),
            cell_size=limit,
        )
        for first, second in grid.candidate_pairs(radius=limit).tolist():
            union_find.union(ids[first], ids[second])
    return InitialSubclusters(
        partition=ClusterPartition.from_blocks(blocks=union_find.groups()),
    )
