"""Равномерная сетка для отбора пар близких точек."""

from collections import defaultdict
from itertools import product

import numpy as np
from numpy.typing import NDArray

from dynamic_clusters.exceptions.domain import DomainException

__all__ = [
    'UniformGrid',
    'all_pairs',
]


def all_pairs(count: int) -> NDArray[np.int64]:
    """Все пары индексов i < j в лексикографическом порядке.

    Args:
        count: Число точек

    Returns:
        NDArray[np.int64]: Массив формы (count·(count-1)/2, 2)
    """
    first, second = np.triu_indices(count, k=1)
    return np.column_stack((first, second)).astype(np.int64)


class UniformGrid:
    """Пространственный хеш точек по кубическим ячейкам.

    Точки на расстоянии не больше cell_size всегда попадают в одну или
    соседние ячейки, поэтому перебор 3^d соседних ячеек находит все такие
    пары.
    """

    def __init__(self, points: NDArray[np.float64], cell_size: float) -> None:
        """Раскладывает точки по ячейкам.

        Args:
            points: Координаты точек, форма (n, d)
            cell_size: Сторона ячейки

        Raises:
            DomainException: Если сторона ячейки не положительна
        """
        if cell_size <= 0:
            raise DomainException(detail='Сторона ячейки должна быть > 0')
        self._points = np.atleast_2d(np.asarray(points, dtype=np.float64))
        self._cell_size = cell_size
        self._cells: defaultdict[tuple[int, ...], list[int]] = defaultdict(
            list,
        )
        keys = np.floor(self._points / cell_size).astype(np.int64)
        self._keys = [tuple(key) for key in keys.tolist()]
        for index, key in enumerate(self._keys):
            self._cells[key].append(index)
        dimension = self._points.shape[1] if len(self._points) else 0
        self._offsets = list(product((-1, 0, 1), repeat=dimension))

    @property
    def cell_size(self) -> float:
        """Сторона ячейки.

        Returns:
            float: cell_size
        """
        return self._cell_size

    def near(self, index: int) -> list[int]:
        """Индексы точек из ячейки точки index и соседних ячеек.

        Args:
            index: Индекс точки

        Returns:
            list[int]: Индексы кандидатов, кроме самой точки
        """
        key = self._keys[index]
        found: list[int] = []
        for offset in self._offsets:
            cell = tuple(k + o for k, o in zip(key, offset))
            found.extend(self._cells.get(cell, ()))
        return [other for other in found if other != index]

    def within(self, index: int, radius: float) -> list[int]:
        """Индексы точек на расстоянии не больше radius от точки index.

        Args:
            index: Индекс точки
            radius: Радиус поиска (не больше стороны ячейки)

        Returns:
            list[int]: Отсортированные индексы соседей
        """
        candidates = np.array(self.near(index=index), dtype=np.int64)
        if candidates.size == 0:
            return []
        gaps = self._points[candidates] - self._points[index]
        close = np.einsum('ij,ij->i', gaps, gaps) <= radius * radius
        return sorted(candidates[close].tolist())

    def candidate_pairs(self, radius: float) -> NDArray[np.int64]:
        """Пары i < j на расстоянии не больше radius.

        Args:
            radius: Радиус отбора (не больше стороны ячейки)

        Returns:
            NDArray[np.int64]: Лексикографически упорядоченные пары (P, 2)

        Raises:
            DomainException: Если радиус больше стороны ячейки
        """
        if radius > self._cell_size:
            raise DomainException(
                detail=f'Радиус {radius} больше стороны ячейки '
                f'{self._cell_size}',
            )
        pairs = [
            (index, other)
            for index in range(len(self._points))
            for other in self.near(index=index)
            if other > index
        ]
        if not pairs:
            return np.empty((0, 2), dtype=np.int64)
        found = np.array(sorted(pairs), dtype=np.int64)
        gaps = self._points[found[:, 0]] - self._points[found[:, 1]]
        close = np.einsum('ij,ij->i', gaps, gaps) <= radius * radius
        return found[close]
