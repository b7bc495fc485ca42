"""Граф взаимодействий частиц на [0, τ]."""

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.typing import NDArray

from dynamic_clusters.dynamics.models import Trajectory
from dynamic_clusters.dynamics.simulator import contact_intervals
from dynamic_clusters.exceptions.domain import DomainException
from dynamic_clusters.geometry.contact import contact_roots
from dynamic_clusters.geometry.grid import UniformGrid, all_pairs
from dynamic_clusters.logging.logger import get_logger

__all__ = [
    'Edge',
    'InteractionGraph',
    'first_contact',
    'build_interaction_graph',
    'cluster_containing',
]

logger = get_logger(name=__name__)


@dataclass(frozen=True, order=True)
class Edge:
    """Ребро графа с моментом первого взаимодействия.

    Args:
        i: Меньший идентификатор
        j: Больший идентификатор
        s: Момент первого контакта s_ij
    """

    i: int
    j: int
    s: float


@dataclass(frozen=True)
class InteractionGraph:
    """Граф G(τ, r): вершины частицы, ребро если пара встретилась.

    Args:
        vertices: Идентификаторы частиц
        edges: Рёбра, упорядоченные по (i, j)
        tau: Горизонт времени
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    tau: float

    def __post_init__(self) -> None:
        """Проверяет рёбра.

        Raises:
            DomainException: Если ребро некорректно или повторяется
        """
        known = set(self.vertices)
        seen: set[tuple[int, int]] = set()
        for edge in self.edges:
            key = (edge.i, edge.j)
            if edge.i >= edge.j or key in seen:
                raise DomainException(detail=f'Некорректное ребро {key}')
            if edge.i not in known or edge.j not in known:
                raise DomainException(detail=f'Ребро {key} вне вершин')
            if not 0 <= edge.s <= self.tau:
                raise DomainException(
                    detail=f'Момент {edge.s} ребра {key} вне [0, τ]',
                )
            seen.add(key)

    def adjacency(self) -> dict[int, list[int]]:
        """Списки смежности.

        Returns:
            dict[int, list[int]]: Вершина -> отсортированные соседи
        """
        neighbours: dict[int, list[int]] = {
            vertex: [] for vertex in self.vertices
        }
        for edge in self.edges:
            neighbours[edge.i].append(edge.j)
            neighbours[edge.j].append(edge.i)
        return {vertex: sorted(found) for vertex, found in neighbours.items()}

    def contact_times(self) -> dict[tuple[int, int], float]:
        """Моменты первого контакта по парам.

        Returns:
            dict[tuple[int, int], float]: (i, j) -> s_ij
        """
        return {(edge.i, edge.j): edge.s for edge in self.edges}

    def restricted(self, vertices: Sequence[int]) -> 'InteractionGraph':
        """Подграф на заданных вершинах.

        Args:
            vertices: Вершины подграфа

        Returns:
            InteractionGraph: Индуцированный подграф
        """
        keep = set(vertices)
        return InteractionGraph(
            vertices=tuple(sorted(keep)),
            edges=tuple(
                edge
                for edge in self.edges
                if edge.i in keep and edge.j in keep
            ),
            tau=self.tau,
        )


def first_contact(
    traj_i: Trajectory,
    traj_j: Trajectory,
    r: float,
    threshold: float | None = None,
) -> float | None:
    """Момент первого контакта пары на [0, τ].

    Args:
        traj_i: Первая траектория
        traj_j: Вторая траектория
        r: Радиус трубки
        threshold: Порог контакта; по умолчанию 2r

    Returns:
        float | None: Начало первого отрезка контакта или None
    """
    found = contact_intervals(
        traj_i=traj_i,
        traj_j=traj_j,
        r=r,
        threshold=threshold,
    )
    if not found:
        return None
    return found[0][0]


def _check_horizons(trajectories: Sequence[Trajectory], tau: float) -> None:
    for trajectory in trajectories:
        if trajectory.horizon != tau:
            raise DomainException(
                detail=f'Траектория {trajectory.particle_id} задана на '
                f'[0, {trajectory.horizon}], а не на [0, {tau}]',
            )


def _reach(trajectories: Sequence[Trajectory], limit: float) -> float:
    speed = max(trajectory.max_speed for trajectory in trajectories)
    return limit + 2 * speed * trajectories[0].horizon


def _pairs(
    positions: NDArray[np.float64],
    reach: float,
    use_grid: bool,
) -> NDArray[np.int64]:
    if not use_grid or reach <= 0:
        return all_pairs(count=len(positions))
    grid = UniformGrid(points=positions, cell_size=reach)
    return grid.candidate_pairs(radius=reach)


def _single_segment_times(
    trajectories: Sequence[Trajectory],
    pairs: NDArray[np.int64],
    limit: float,
    tau: float,
) -> NDArray[np.float64]:
    """Моменты входа в контакт для пар из однозвенных траекторий.

    Args:
        trajectories: Траектории
        pairs: Пары индексов
        limit: Порог контакта
        tau: Горизонт

    Returns:
        NDArray[np.float64]: Момент входа или nan, если контакта до τ нет
    """
    x = np.array([trajectory.records[0].x for trajectory in trajectories])
    v = np.array([trajectory.records[0].v for trajectory in trajectories])
    enter, _ = contact_roots(
        dx=x[pairs[:, 0]] - x[pairs[:, 1]],
        dv=v[pairs[:, 0]] - v[pairs[:, 1]],
        threshold=limit,
    )
    return np.where(enter <= tau, enter, np.nan)


def build_interaction_graph(
    trajectories: Sequence[Trajectory],
    r: float,
    tau: float,
    threshold: float | None = None,
    use_grid: bool = True,
) -> InteractionGraph:
    """Строит граф взаимодействий по траекториям.

    Пары с начальным расстоянием больше threshold + 2·v_max·τ встретиться
    не могут и отбрасываются сеткой. Для однозвенных траекторий моменты
    контакта считаются сразу для всех пар.

    Args:
        trajectories: Траектории частиц на [0, τ]
        r: Радиус трубки
        tau: Горизонт времени
        threshold: Порог контакта; по умолчанию 2r
        use_grid: Отбирать ли пары сеткой

    Returns:
        InteractionGraph: Граф с моментами первого контакта на рёбрах
    """
    _check_horizons(trajectories=trajectories, tau=tau)
    ids = [trajectory.particle_id for trajectory in trajectories]
    if len(trajectories) < 2:
        return InteractionGraph(vertices=tuple(ids), edges=(), tau=tau)
    limit = 2 * r if threshold is None else threshold
    positions = np.array(
        [trajectory.records[0].x for trajectory in trajectories],
    )
    pairs = _pairs(
        positions=positions,
        reach=_reach(trajectories=trajectories, limit=limit),
        use_grid=use_grid,
    )
    if all(len(trajectory.records) == 1 for trajectory in trajectories):
        times = _single_segment_times(
            trajectories=trajectories,
            pairs=pairs,
            limit=limit,
            tau=tau,
        ).tolist()
    else:
        times = [
            first_contact(
                traj_i=trajectories[first],
                traj_j=trajectories[second],
                r=r,
                threshold=limit,
            )
            for first, second in pairs.tolist()
        ]
    edges = []
    for (first, second), s in zip(pairs.tolist(), times):
        if s is None or np.isnan(s):
            continue
        low, high = sorted((ids[first], ids[second]))
        edges.append(Edge(i=low, j=high, s=float(s)))
    graph = InteractionGraph(
        vertices=tuple(ids),
        edges=tuple(sorted(edges)),
        tau=tau,
    )
    logger.info(
        msg='Граф взаимодействий построен',
        extra={
            'context': {
                'vertices': len(ids),
                'candidate_pairs': len(pairs),
                'edges': len(edges),
            },
        },
    )
    return graph


def cluster_containing(
    trajectories: Sequence[Trajectory],
    particle_id: int,
    r: float,
    tau: float,
    threshold: float | None = None,
) -> tuple[int, ...]:
    """Кластер одной частицы обходом в ширину.

    Соседи каждой вершины ищутся сеткой по начальным положениям, так что
    контакты считаются только для пар внутри кластера и его окрестности.

    Args:
        trajectories: Траектории частиц на [0, τ]
        particle_id: Идентификатор частицы
        r: Радиус трубки
        tau: Горизонт времени
        threshold: Порог контакта; по умолчанию 2r

    Returns:
        tuple[int, ...]: Отсортированные идентификаторы частиц кластера

    Raises:
        DomainException: Если частицы нет среди траекторий
    """
    _check_horizons(trajectories=trajectories, tau=tau)
    ids = [trajectory.particle_id for trajectory in trajectories]
    index_of = {particle: index for index, particle in enumerate(ids)}
    if particle_id not in index_of:
        raise DomainException(detail=f'Частица {particle_id} не найдена')
    limit = 2 * r if threshold is None else threshold
    reach = _reach(trajectories=trajectories, limit=limit)
    grid = UniformGrid(
        points=np.array(
            [trajectory.records[0].x for trajectory in trajectories],
        ),
        cell_size=reach,
    )
    start = index_of[particle_id]
    visited = {start}
    queue = deque([start])
    checked: defaultdict[int, set[int]] = defaultdict(set)
    while queue:
        current = queue.popleft()
        for other in grid.within(index=current, radius=reach):
            if other in visited or other in checked[current]:
                continue
            checked[other].add(current)
            s = first_contact(
                traj_i=trajectories[current],
                traj_j=trajectories[other],
                r=r,
                threshold=limit,
            )
            if s is not None:
                visited.add(other)
                queue.append(other)
    return tuple(sorted(ids[index] for index in visited))
