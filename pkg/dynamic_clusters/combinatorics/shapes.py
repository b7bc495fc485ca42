"""Формы полных двоичных деревьев."""

from dataclasses import dataclass, field
from functools import lru_cache

from dynamic_clusters.exceptions.domain import DomainException

__all__ = [
    'MAX_ENUMERATION_LEAVES',
    'TreeShape',
    'enumerate_shapes',
]

MAX_ENUMERATION_LEAVES = 12


@dataclass(frozen=True)
class TreeShape:
    """Полное двоичное дерево без меток.

    Лист не имеет детей, внутренняя вершина имеет ровно двух. Число листьев
    поддерева хранится в каждой вершине.

    Args:
        left: Левое поддерево или None для листа
        right: Правое поддерево или None для листа
    """

    left: 'TreeShape | None' = None
    right: 'TreeShape | None' = None
    leaves: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        """Считает листья и проверяет двоичность.

        Raises:
            DomainException: Если у вершины ровно один ребёнок
        """
        if (self.left is None) != (self.right is None):
            raise DomainException(
                detail='У внутренней вершины должно быть два ребёнка',
            )
        if self.left is None or self.right is None:
            object.__setattr__(self, 'leaves', 1)
        else:
            object.__setattr__(
                self,
                'leaves',
                self.left.leaves + self.right.leaves,
            )

    @classmethod
    def leaf(cls) -> 'TreeShape':
        """Одноэлементное дерево.

        Returns:
            TreeShape
        """
        return cls()

    @classmethod
    def join(cls, left: 'TreeShape', right: 'TreeShape') -> 'TreeShape':
        """Дерево с корнем над двумя поддеревьями.

        Args:
            left: Левое поддерево
            right: Правое поддерево

        Returns:
            TreeShape
        """
        return cls(left=left, right=right)

    @classmethod
    def comb(cls, leaves: int) -> 'TreeShape':
        """Левая гребёнка: листья присоединяются по одному.

        Args:
            leaves: Число листьев

        Returns:
            TreeShape

        Raises:
            DomainException: Если листьев меньше одного
        """
        if leaves < 1:
            raise DomainException(detail='Число листьев должно быть ≥ 1')
        shape = cls.leaf()
        for _ in range(leaves - 1):
            shape = cls.join(left=shape, right=cls.leaf())
        return shape

    @classmethod
    def complete(cls, depth: int) -> 'TreeShape':
        """Полное сбалансированное дерево с 2^depth листьями.

        Args:
            depth: Глубина

        Returns:
            TreeShape

        Raises:
            DomainException: Если глубина отрицательна
        """
        if depth < 0:
            raise DomainException(detail='Глубина должна быть ≥ 0')
        shape = cls.leaf()
        for _ in range(depth):
            shape = cls.join(left=shape, right=shape)
        return shape

    @property
    def is_leaf(self) -> bool:
        """Является ли вершина листом.

        Returns:
            bool
        """
        return self.left is None

    @property
    def internal_count(self) -> int:
        """Число внутренних вершин.

        Returns:
            int: leaves - 1
        """
        return self.leaves - 1

    def children(self) -> tuple['TreeShape', 'TreeShape']:
        """Дети внутренней вершины.

        Returns:
            tuple[TreeShape, TreeShape]: Левое и правое поддеревья

        Raises:
            DomainException: Если вершина лист
        """
        if self.left is None or self.right is None:
            raise DomainException(detail='У листа нет детей')
        return self.left, self.right

    def signature(self) -> str:
        """Скобочная запись формы.

        Returns:
            str: ``o`` для листа, ``(L,R)`` для внутренней вершины
        """
        if self.left is None or self.right is None:
            return 'o'
        return f'({self.left.signature()},{self.right.signature()})'

    def canonical(self) -> 'TreeShape':
        """Форма с неупорядоченными детьми в каноническом порядке.

        Меньшее по (числу листьев, записи) поддерево ставится слева.

        Returns:
            TreeShape
        """
        if self.left is None or self.right is None:
            return self
        left, right = self.left.canonical(), self.right.canonical()
        if (right.leaves, right.signature()) < (
            left.leaves,
            left.signature(),
        ):
            left, right = right, left
        return TreeShape.join(left=left, right=right)

    def internal_nodes(self) -> list['TreeShape']:
        """Внутренние вершины в прямом порядке обхода.

        Номер вершины в этом списке служит её меткой.

        Returns:
            list[TreeShape]: Корень первым
        """
        found: list[TreeShape] = []
        stack = [self]
        while stack:
            node = stack.pop()
            if node.left is None or node.right is None:
                continue
            found.append(node)
            stack.append(node.right)
            stack.append(node.left)
        return found

    def parents(self) -> tuple[int | None, ...]:
        """Родитель каждой внутренней вершины по меткам прямого обхода.

        Returns:
            tuple[int | None, ...]: Метка родителя; None для корня
        """
        parents: list[int | None] = []
        stack: list[tuple[TreeShape, int | None]] = [(self, None)]
        while stack:
            node, parent = stack.pop()
            if node.left is None or node.right is None:
                continue
            label = len(parents)
            parents.append(parent)
            stack.append((node.right, label))
            stack.append((node.left, label))
        return tuple(parents)

    def __str__(self) -> str:
        """Скобочная запись.

        Returns:
            str
        """
        return self.signature()


@lru_cache(maxsize=None)
def _shapes(leaves: int) -> tuple[TreeShape, ...]:
    if leaves == 1:
        return (TreeShape.leaf(),)
    found: dict[str, TreeShape] = {}
    for small in range(1, leaves // 2 + 1):
        for left in _shapes(small):
            for right in _shapes(leaves - small):
                shape = TreeShape.join(left=left, right=right).canonical()
                found.setdefault(shape.signature(), shape)
    return tuple(found[key] for key in sorted(found))


def enumerate_shapes(leaves: int) -> list[TreeShape]:
    """Все канонические формы с данным числом листьев.

    Их число равно числу Веддерберна-Этерингтона.

    Args:
        leaves: Число листьев N, 1 ≤ N ≤ 12

    Returns:
        list[TreeShape]: Формы, упорядоченные по записи

    Raises:
        DomainException: Если N вне области полного перебора
    """
    if not 1 <= leaves <= MAX_ENUMERATION_LEAVES:
        raise DomainException(
            detail=f'Полный перебор форм возможен для 1 ≤ N ≤ '
            f'{MAX_ENUMERATION_LEAVES}, получено {leaves}',
        )
    return list(_shapes(leaves))
