"""Модуль векторов координат и скоростей."""

from typing import Sequence, TypeAlias

import numpy as np
from numpy.typing import NDArray

from dynamic_clusters.exceptions.domain import DomainException

__all__ = [
    'Vector',
    'as_vector',
    'norm',
]

Vector: TypeAlias = NDArray[np.float64]


def as_vector(
    coords: Sequence[float] | Vector,
    dimension: int | None = None,
) -> Vector:
    """Преобразует координаты в неизменяемый вектор numpy.

    Args:
        coords: Координаты
        dimension: Ожидаемая размерность, если известна

    Returns:
        Vector: Одномерный массив float64, защищённый от записи

    Raises:
        DomainException: При неверной размерности или бесконечных координатах
    """
    vector = np.array(coords, dtype=np.float64).reshape(-1)
    if vector.size == 0:
        raise DomainException(detail='Вектор не может быть пустым')
    if dimension is not None and vector.size != dimension:
        raise DomainException(
            detail=f'Ожидалась размерность {dimension}, '
            f'получено {vector.size}',
        )
    if not np.all(np.isfinite(vector)):
        raise DomainException(detail='Координаты должны быть конечными')
    vector.setflags(write=False)
    return vector


def norm(vector: Vector) -> float:
    """Евклидова норма вектора.

    Args:
        vector: Вектор

    Returns:
        float: |vector|
    """
    return float(np.sqrt(np.dot(vector, vector)))
