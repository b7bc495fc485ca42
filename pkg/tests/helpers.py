"""Переборные оракулы и построители траекторий для тестов."""

from collections import deque
from typing import Sequence

import numpy as np

from dynamic_clusters.dynamics.models import (
    Trajectory,
    TrajectoryRecord,
)
from dynamic_clusters.geometry.contact import (
    MotionSegment,
    min_distance_on_interval,
)


def straight(
    particle_id: int,
    x: Sequence[float],
    v: Sequence[float],
    tau: float,
    a: int = 1,
) -> Trajectory:
    """Однозвенная траектория свободного пролёта.

    Args:
        particle_id: Идентификатор частицы
        x: Положение в момент 0
        v: Скорость
        tau: Горизонт
        a: Тип частицы

    Returns:
        Trajectory
    """
    return Trajectory(
        particle_id=particle_id,
        records=(TrajectoryRecord(t=0.0, x=x, v=v, a=a),),
        horizon=tau,
    )


def random_ghost(
    rng: np.random.Generator,
    count: int,
    box: float,
    v0: float,
    tau: float,
    dimension: int = 2,
) -> list[Trajectory]:
    """Случайные однозвенные траектории в кубе.

    Args:
        rng: Генератор
        count: Число частиц
        box: Сторона куба
        v0: Граница скоростей
        tau: Горизонт
        dimension: Размерность

    Returns:
        list[Trajectory]
    """
    positions = rng.uniform(low=0.0, high=box, size=(count, dimension))
    directions = rng.normal(size=(count, dimension))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    speeds = v0 * rng.uniform(size=(count, 1))
    return [
        straight(
            particle_id=index,
            x=positions[index],
            v=directions[index] * speeds[index],
            tau=tau,
        )
        for index in range(count)
    ]


def stepping_first_contact(
    a: MotionSegment,
    b: MotionSegment,
    threshold: float,
    steps: int = 20000,
) -> float | None:
    """Первый контакт перебором по сетке времени с уточнением бисекцией.

    Args:
        a: Первый участок
        b: Второй участок
        threshold: Порог контакта
        steps: Число шагов сетки

    Returns:
        float | None: Момент первого контакта или None
    """
    start, end = max(a.t0, b.t0), min(a.t1, b.t1)

    def inside(t: float) -> bool:
        gap = a.position(t=t) - b.position(t=t)
        return float(np.dot(gap, gap)) <= threshold * threshold

    if inside(start):
        return start
    times = np.linspace(start, end, steps + 1)
    previous = start
    for t in times[1:]:
        if inside(float(t)):
            low, high = previous, float(t)
            for _ in range(80):
                middle = (low + high) / 2
                if inside(middle):
                    high = middle
                else:
                    low = middle
            return high
        previous = float(t)
    return None


def touching(
    first: Trajectory,
    second: Trajectory,
    threshold: float,
) -> bool:
    """Касаются ли однозвенные траектории на всём горизонте.

    Args:
        first: Первая траектория
        second: Вторая траектория
        threshold: Порог контакта

    Returns:
        bool
    """
    _, distance = min_distance_on_interval(
        a=first.segments()[0],
        b=second.segments()[0],
    )
    return distance <= threshold


def bfs_components(
    vertices: Sequence[int],
    edges: Sequence[tuple[int, int]],
) -> set[tuple[int, ...]]:
    """Компоненты связности обходом в ширину из каждой вершины.

    Args:
        vertices: Вершины
        edges: Рёбра

    Returns:
        set[tuple[int, ...]]: Отсортированные компоненты
    """
    neighbours: dict[int, set[int]] = {vertex: set() for vertex in vertices}
    for first, second in edges:
        neighbours[first].add(second)
        neighbours[second].add(first)
    components = set()
    for vertex in vertices:
        seen = {vertex}
        queue = deque([vertex])
        while queue:
            current = queue.popleft()
            for other in neighbours[current] - seen:
                seen.add(other)
                queue.append(other)
        components.add(tuple(sorted(seen)))
    return components


def resimulated_merges(
    trajectories: Sequence[Trajectory],
    threshold: float,
    tolerance: float = 1e-12,
) -> list[tuple[float, int, int, int]]:
    """Слияния с пересчётом всех межблочных контактов после каждого шага.

    Args:
        trajectories: Однозвенные траектории одного кластера
        threshold: Порог контакта
        tolerance: Допуск равенства моментов

    Returns:
        list[tuple[float, int, int, int]]: Момент, пара (i < j) и число
            максимальных подкластеров после слияния
    """
    by_id = {trajectory.particle_id: trajectory for trajectory in trajectories}
    blocks = [{particle} for particle in sorted(by_id)]
    merges = []
    while len(blocks) > 1:
        found = []
        for index, block in enumerate(blocks):
            for other_index in range(index + 1, len(blocks)):
                for first in block:
                    for second in blocks[other_index]:
                        t = stepping_first_contact(
                            a=by_id[first].segments()[0],
                            b=by_id[second].segments()[0],
                            threshold=threshold,
                            steps=2000,
                        )
                        if t is not None:
                            low, high = sorted((first, second))
                            found.append((t, low, high, index, other_index))
        earliest = min(item[0] for item in found)
        t, low, high, index, other_index = min(
            (item for item in found if item[0] <= earliest + tolerance),
            key=lambda item: (item[1], item[2]),
        )
        blocks[index] |= blocks.pop(other_index)
        merges.append((t, low, high, len(blocks)))
    return merges


def comb_cluster() -> list[Trajectory]:
    """Четыре частицы: {1, 2} в контакте с нуля, 3 и 4 приходят позже.

    Первые контакты между блоками: (1, 3) в момент 3 и (1, 4) в момент 6
    при пороге 2.

    Returns:
        list[Trajectory]
    """
    return [
        straight(particle_id=1, x=(0.0, 0.0), v=(0.0, 0.0), tau=10.0),
        straight(particle_id=2, x=(1.5, 0.0), v=(0.0, 0.0), tau=10.0),
        straight(particle_id=3, x=(-5.0, 0.0), v=(1.0, 0.0), tau=10.0),
        straight(particle_id=4, x=(0.0, 8.0), v=(0.0, -1.0), tau=10.0),
    ]
