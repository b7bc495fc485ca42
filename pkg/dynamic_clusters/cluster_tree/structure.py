"""Комбинаторная структура дерева: форма, порядок слияний и пары."""

from dataclasses import dataclass

from dynamic_clusters.cluster_tree.models import (
    ClusterTree,
    LeafNode,
    MergeNode,
    TreeNode,
)
from dynamic_clusters.combinatorics.counting import is_linear_extension
from dynamic_clusters.combinatorics.shapes import TreeShape
from dynamic_clusters.exceptions.domain import DomainException

__all__ = [
    'CombStructure',
    'extract_comb_structure',
]


@dataclass(frozen=True)
class CombStructure:
    """Дерево без моментов времени.

    Внутренние вершины помечены номерами прямого обхода формы.

    Args:
        shape: Упорядоченная форма дерева
        order: Метки внутренних вершин в порядке слияний
        designated: Взаимодействующая пара (i_w, j_w) для каждой метки
        specified: Выделенная частица
        specified_leaf: Номер листа выделенной частицы слева направо
    """

    shape: TreeShape
    order: tuple[int, ...]
    designated: tuple[tuple[int, int], ...]
    specified: int
    specified_leaf: int

    def __post_init__(self) -> None:
        """Проверяет, что порядок является линейным расширением.

        Raises:
            DomainException: Если порядок нарушает частичный порядок дерева
        """
        if not is_linear_extension(shape=self.shape, order=self.order):
            raise DomainException(
                detail=f'Порядок {self.order} не согласован с формой '
                f'{self.shape}',
            )

    def designated_leaf(self, label: int) -> int:
        """i(w): частица левого поддерева из пары вершины.

        Args:
            label: Метка внутренней вершины

        Returns:
            int
        """
        return self.designated[label][0]


def _preorder(root: TreeNode) -> tuple[list[MergeNode], list[LeafNode]]:
    merges: list[MergeNode] = []
    leaves: list[LeafNode] = []
    stack = [root]
    while stack:
        node = stack.pop()
        if isinstance(node, LeafNode):
            leaves.append(node)
            continue
        merges.append(node)
        stack.append(node.right)
        stack.append(node.left)
    return merges, leaves


def extract_comb_structure(
    tree: ClusterTree,
    specified: int,
) -> CombStructure:
    """Отбрасывает моменты, оставляя форму, порядок и пары.

    Args:
        tree: Дерево подкластеров
        specified: Выделенная частица

    Returns:
        CombStructure

    Raises:
        DomainException: Если частица не лежит ни в одном листе
    """
    merges, leaves = _preorder(root=tree.root)
    label_of = {id(merge): label for label, merge in enumerate(merges)}
    leaf_index = next(
        (
            index
            for index, leaf in enumerate(leaves)
            if specified in leaf.members
        ),
        None,
    )
    if leaf_index is None:
        raise DomainException(
            detail=f'Частица {specified} не является листом дерева',
        )
    return CombStructure(
        shape=tree.shape(),
        order=tuple(label_of[id(merge)] for merge in tree.merges),
        designated=tuple((merge.i, merge.j) for merge in merges),
        specified=specified,
        specified_leaf=leaf_index,
    )
