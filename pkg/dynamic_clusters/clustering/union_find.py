"""Система непересекающихся множеств."""

from typing import Hashable, Iterable

__all__ = [
    'UnionFind',
]


class UnionFind:
    """Объединение по рангу со сжатием путей.

    Представитель каждого множества произволен; канонический идентификатор
    (наименьший элемент) отдаёт ``groups``.
    """

    def __init__(self, elements: Iterable[Hashable]) -> None:
        """Создаёт по одноэлементному множеству на элемент.

        Args:
            elements: Элементы
        """
        self._leader = {element: element for element in elements}
        self._size = {element: 1 for element in self._leader}
        self._rank = {element: 0 for element in self._leader}
        self._count = len(self._leader)

    def __repr__(self) -> str:
        """Краткое описание.

        Returns:
            str: Число множеств
        """
        return f'UnionFind(clusters={self._count})'

    def __contains__(self, element: Hashable) -> bool:
        """Проверяет принадлежность элемента.

        Args:
            element: Элемент

        Returns:
            bool: True, если элемент известен
        """
        return element in self._leader

    @property
    def count(self) -> int:
        """Число множеств.

        Returns:
            int: Количество непересекающихся множеств
        """
        return self._count

    def find(self, element: Hashable) -> Hashable:
        """Представитель множества элемента.

        Args:
            element: Элемент

        Returns:
            Hashable: Представитель
        """
        path = [element]
        parent = self._leader[element]
        while parent != self._leader[parent]:
            path.append(parent)
            parent = self._leader[parent]
        for node in path:
            self._leader[node] = parent
        return parent

    def union(self, first: Hashable, second: Hashable) -> bool:
        """Объединяет множества двух элементов.

        Args:
            first: Первый элемент
            second: Второй элемент

        Returns:
            bool: True, если множества были различны
        """
        root_a, root_b = self.find(first), self.find(second)
        if root_a == root_b:
            return False
        if self._rank[root_b] > self._rank[root_a]:
            root_a, root_b = root_b, root_a
        if self._rank[root_a] == self._rank[root_b]:
            self._rank[root_a] += 1
        self._leader[root_b] = root_a
        self._size[root_a] += self._size[root_b]
        self._count -= 1
        return True

    def size(self, element: Hashable) -> int:
        """Размер множества элемента.

        Args:
            element: Элемент

        Returns:
            int: Число элементов в множестве
        """
        return self._size[self.find(element)]

    def groups(self) -> dict[Hashable, tuple]:
        """Множества с каноническими идентификаторами.

        Returns:
            dict: Наименьший элемент -> отсортированные элементы множества
        """
        members: dict[Hashable, list] = {}
        for element in self._leader:
            members.setdefault(self.find(element), []).append(element)
        blocks = [tuple(sorted(block)) for block in members.values()]
        return {block[0]: block for block in sorted(blocks)}
