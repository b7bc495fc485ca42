"""Точный подсчёт порядков слияний и множителей дерева подкластеров.

Все величины считаются в целых числах Python без переполнения, отношения
возвращаются как ``Fraction``.
"""

import math
from fractions import Fraction
from typing import Iterator, Sequence

from dynamic_clusters.combinatorics.shapes import TreeShape
from dynamic_clusters.exceptions.domain import DomainException

__all__ = [
    'r_orderings',
    'interleavings',
    'linear_extensions',
    'enumerate_linear_extensions',
    'is_linear_extension',
    'pair_factor',
    'q_value',
    'q_recurrence_bound',
    'normalized_ratio',
    'entropy',
]


def _check_sizes(*sizes: int) -> None:
    for size in sizes:
        if size < 1:
            raise DomainException(detail=f'Размер должен быть ≥ 1: {size}')


def r_orderings(k: int, l: int) -> int:  # noqa: E741
    """Число R(k, l) полных порядков двух упорядоченных блоков.

    R(k, l) = 2·Σ_{i=1..k} C(k-1, i-1)·C(l-1, i-1) при k ≤ l; формула
    симметризована.

    Args:
        k: Размер первого блока
        l: Размер второго блока

    Returns:
        int: R(k, l)
    """
    _check_sizes(k, l)
    small, large = sorted((k, l))
    return 2 * sum(
        math.comb(small - 1, i - 1) * math.comb(large - 1, i - 1)
        for i in range(1, small + 1)
    )


def interleavings(k: int, l: int) -> int:  # noqa: E741
    """Число всех сохраняющих порядок перемешиваний C(k + l, k).

    Args:
        k: Длина первой последовательности
        l: Длина второй последовательности

    Returns:
        int: C(k + l, k)
    """
    _check_sizes(k, l)
    return math.comb(k + l, k)


def linear_extensions(shape: TreeShape) -> int:
    """B(T): число порядков слияний, согласованных с деревом.

    Формула крюков для леса: (N-1)! / ∏_w (N_w - 1), где N_w число
    листьев поддерева внутренней вершины w.

    Args:
        shape: Форма дерева

    Returns:
        int: B(T)
    """
    denominator = math.prod(
        node.internal_count for node in shape.internal_nodes()
    )
    return math.factorial(shape.internal_count) // denominator


def enumerate_linear_extensions(
    shape: TreeShape,
) -> Iterator[tuple[int, ...]]:
    """Перебирает все порядки слияний перебором с возвратом.

    Метки вершин берутся из прямого обхода; каждая вершина идёт после
    своих внутренних детей.

    Args:
        shape: Форма дерева

    Yields:
        tuple[int, ...]: Метки внутренних вершин в порядке слияний
    """
    parents = shape.parents()
    pending = [0] * len(parents)
    for parent in parents:
        if parent is not None:
            pending[parent] += 1
    ready = {label for label, count in enumerate(pending) if count == 0}
    order: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        if len(order) == len(parents):
            yield tuple(order)
            return
        for label in sorted(ready):
            ready.remove(label)
            order.append(label)
            parent = parents[label]
            if parent is not None:
                pending[parent] -= 1
                if pending[parent] == 0:
                    ready.add(parent)
            yield from extend()
            if parent is not None:
                if pending[parent] == 0:
                    ready.discard(parent)
                pending[parent] += 1
            order.pop()
            ready.add(label)

    yield from extend()


def is_linear_extension(shape: TreeShape, order: Sequence[int]) -> bool:
    """Проверяет, что порядок ставит детей раньше родителей.

    Args:
        shape: Форма дерева
        order: Метки внутренних вершин прямого обхода

    Returns:
        bool: True, если order линейное расширение
    """
    parents = shape.parents()
    if sorted(order) != list(range(len(parents))):
        return False
    position = {label: index for index, label in enumerate(order)}
    return all(
        parent is None or position[label] < position[parent]
        for label, parent in enumerate(parents)
    )


def pair_factor(shape: TreeShape) -> int:
    """D(T) = ∏_w (листья левого ребёнка)·(листья правого ребёнка).

    Args:
        shape: Форма дерева

    Returns:
        int: D(T)
    """
    return math.prod(
        node.children()[0].leaves * node.children()[1].leaves
        for node in shape.internal_nodes()
    )


def q_value(shape: TreeShape) -> int:
    """Q(T, N) = B(T)·D(T).

    Args:
        shape: Форма дерева

    Returns:
        int: Q(T, N)
    """
    return linear_extensions(shape=shape) * pair_factor(shape=shape)


def q_recurrence_bound(shape: TreeShape) -> int:
    """Правая часть рекуррентной оценки N·Q(T₁)·Q(T₂)·R(k, N-k).

    Это верхняя оценка q_value, а не тождество.

    Args:
        shape: Форма дерева с N ≥ 2 листьями

    Returns:
        int: Значение правой части

    Raises:
        DomainException: Если форма лист
    """
    if shape.is_leaf:
        raise DomainException(detail='Оценка определена для N ≥ 2')
    left, right = shape.children()
    return (
        shape.leaves
        * q_value(shape=left)
        * q_value(shape=right)
        * r_orderings(k=left.leaves, l=right.leaves)
    )


def normalized_ratio(k: int, n: int) -> Fraction:
    """r(k, n-k) = R(k, n-k) / C(n, k).

    Args:
        k: Размер первого блока
        n: Общий размер

    Returns:
        Fraction: Точное отношение

    Raises:
        DomainException: Если не выполнено 1 ≤ k ≤ n - 1
    """
    if not 1 <= k <= n - 1:
        raise DomainException(detail=f'Нужно 1 ≤ k ≤ n - 1: k={k}, n={n}')
    return Fraction(r_orderings(k=k, l=n - k), math.comb(n, k))


def entropy(alpha: float) -> float:
    """H(α) = -α·ln α - (1-α)·ln(1-α); на концах доопределена нулём.

    Args:
        alpha: Доля из [0, 1]

    Returns:
        float: Энтропия в натуральных логарифмах

    Raises:
        DomainException: Если α вне [0, 1]
    """
    if not 0 <= alpha <= 1:
        raise DomainException(detail=f'α должна лежать в [0, 1]: {alpha}')
    if alpha in (0, 1):
        return 0.0
    return -alpha * math.log(alpha) - (1 - alpha) * math.log1p(-alpha)
