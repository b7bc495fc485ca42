"""Дерево подкластеров: листья, слияния и корень."""

from dataclasses import dataclass
from typing import Union

from dynamic_clusters.combinatorics.shapes import TreeShape
from dynamic_clusters.exceptions.domain import DomainException

__all__ = [
    'TIE_TOLERANCE',
    'LeafNode',
    'MergeNode',
    'TreeNode',
    'ClusterTree',
]

TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class LeafNode:
    """Лист: частица или начальный подкластер.

    Args:
        members: Отсортированные идентификаторы частиц
    """

    members: tuple[int, ...]

    @property
    def min_id(self) -> int:
        """Наименьшая частица листа.

        Returns:
            int
        """
        return self.members[0]

    @property
    def particles(self) -> tuple[int, ...]:
        """Частицы под вершиной.

        Returns:
            tuple[int, ...]
        """
        return self.members


@dataclass(frozen=True)
class MergeNode:
    """Слияние двух максимальных подкластеров.

    Args:
        t: Момент слияния t_w
        i: Частица левого поддерева из взаимодействующей пары
        j: Частица правого поддерева из взаимодействующей пары
        left: Поддерево с меньшей наименьшей частицей
        right: Второе поддерево
    """

    t: float
    i: int
    j: int
    left: 'TreeNode'
    right: 'TreeNode'

    def __post_init__(self) -> None:
        """Проверяет согласованность пары с поддеревьями.

        Raises:
            DomainException: Если пара не лежит в своих поддеревьях
        """
        if self.i not in self.left.particles:
            raise DomainException(
                detail=f'Частица {self.i} не лежит в левом поддереве',
            )
        if self.j not in self.right.particles:
            raise DomainException(
                detail=f'Частица {self.j} не лежит в правом поддереве',
            )

    @property
    def min_id(self) -> int:
        """Наименьшая частица поддерева.

        Returns:
            int
        """
        return self.left.min_id

    @property
    def particles(self) -> tuple[int, ...]:
        """Частицы под вершиной.

        Returns:
            tuple[int, ...]
        """
        return tuple(sorted(self.left.particles + self.right.particles))


TreeNode = Union[LeafNode, MergeNode]


@dataclass(frozen=True)
class ClusterTree:
    """Дерево подкластеров с явными детьми и плоским списком слияний.

    Args:
        leaves: Листья по возрастанию наименьшей частицы
        merges: Внутренние вершины в порядке моментов слияния
        root: Корень
    """

    leaves: tuple[LeafNode, ...]
    merges: tuple[MergeNode, ...]
    root: TreeNode

    def __post_init__(self) -> None:
        """Проверяет число вершин и порядок моментов.

        Raises:
            DomainException: Если дерево несогласованно
        """
        if len(self.merges) != len(self.leaves) - 1:
            raise DomainException(
                detail=f'{len(self.leaves)} листьев требуют '
                f'{len(self.leaves) - 1} слияний, получено '
                f'{len(self.merges)}',
            )
        for previous, current in zip(self.merges, self.merges[1:]):
            if current.t < previous.t - TIE_TOLERANCE:
                raise DomainException(
                    detail=f'Моменты слияний убывают: {previous.t} > '
                    f'{current.t}',
                )

    @property
    def particles(self) -> tuple[int, ...]:
        """Частицы кластера.

        Returns:
            tuple[int, ...]
        """
        return self.root.particles

    @property
    def times(self) -> tuple[float, ...]:
        """Моменты t_1 ≤ … ≤ t_{M-1}.

        Returns:
            tuple[float, ...]
        """
        return tuple(merge.t for merge in self.merges)

    def shape(self) -> TreeShape:
        """Упорядоченная форма дерева без моментов и меток.

        Returns:
            TreeShape
        """
        return _shape(node=self.root)

    def to_newick(self) -> str:
        """Компактная запись для логов.

        Лист пишется как ``1`` или ``{1,2}``, слияние как ``(L,R)t:i-j``.

        Returns:
            str
        """
        return f'{_newick(node=self.root)};'


def _shape(node: TreeNode) -> TreeShape:
    if isinstance(node, LeafNode):
        return TreeShape.leaf()
    return TreeShape.join(
        left=_shape(node=node.left),
        right=_shape(node=node.right),
    )


def _newick(node: TreeNode) -> str:
    if isinstance(node, LeafNode):
        if len(node.members) == 1:
            return str(node.members[0])
        return '{' + ','.join(str(member) for member in node.members) + '}'
    return (
        f'({_newick(node=node.left)},{_newick(node=node.right)})'
        f'{node.t:.6g}:{node.i}-{node.j}'
    )
