"""Проверочные таблицы: максимум Q(T, N)/N! и оценка для полных деревьев."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from dynamic_clusters.combinatorics.counting import q_value
from dynamic_clusters.combinatorics.shapes import (
    MAX_ENUMERATION_LEAVES,
    TreeShape,
    enumerate_shapes,
)
from dynamic_clusters.exceptions.domain import DomainException

__all__ = [
    'LemmaScanRow',
    'EnvelopeRow',
    'lemma_bound_scan',
    'complete_tree_envelope',
]


@dataclass(frozen=True)
class LemmaScanRow:
    """Строка таблицы максимумов по формам.

    Args:
        n: Число листьев N
        shape_count: Число канонических форм
        max_q: max_T Q(T, N)
        argmax: Скобочная запись формы, дающей максимум
        ratio: max Q / N! как точное отношение
        constant: (max Q / N!)^(1/N)
    """

    n: int
    shape_count: int
    max_q: int
    argmax: str
    ratio: Fraction
    constant: float


@dataclass(frozen=True)
class EnvelopeRow:
    """Строка сравнения полного дерева с 2^(N·log₂N + cN).

    Args:
        depth: Глубина полного дерева
        n: Число листьев 2^depth
        q: Q(T, N)
        log2_q: log₂ Q
        implied_c: (log₂ Q - N·log₂ N) / N
    """

    depth: int
    n: int
    q: int
    log2_q: float
    implied_c: float


def lemma_bound_scan(n_max: int) -> list[LemmaScanRow]:
    """Максимум Q(T, N)/N! по всем формам для N = 1..n_max.

    Args:
        n_max: Наибольшее N, не больше 12

    Returns:
        list[LemmaScanRow]: Строки по возрастанию N

    Raises:
        DomainException: Если n_max вне области перебора
    """
    if not 1 <= n_max <= MAX_ENUMERATION_LEAVES:
        raise DomainException(
            detail=f'n_max должно лежать в 1..{MAX_ENUMERATION_LEAVES}',
        )
    rows = []
    for n in range(1, n_max + 1):
        shapes = enumerate_shapes(leaves=n)
        best = max(shapes, key=lambda shape: q_value(shape=shape))
        max_q = q_value(shape=best)
        ratio = Fraction(max_q, math.factorial(n))
        rows.append(
            LemmaScanRow(
                n=n,
                shape_count=len(shapes),
                max_q=max_q,
                argmax=best.signature(),
                ratio=ratio,
                constant=float(ratio) ** (1 / n),
            ),
        )
    return rows


def complete_tree_envelope(depths: Iterable[int]) -> list[EnvelopeRow]:
    """Q для полных деревьев с N = 2^n листьями и константа c оценки.

    Args:
        depths: Глубины n ≥ 1

    Returns:
        list[EnvelopeRow]: Строки в порядке depths

    Raises:
        DomainException: Если глубина меньше 1
    """
    rows = []
    for depth in depths:
        if depth < 1:
            raise DomainException(detail='Глубина должна быть ≥ 1')
        n = 2**depth
        q = q_value(shape=TreeShape.complete(depth=depth))
        log2_q = math.log2(q)
        rows.append(
            EnvelopeRow(
                depth=depth,
                n=n,
                q=q,
                log2_q=log2_q,
                implied_c=(log2_q - n * depth) / n,
            ),
        )
    return rows
