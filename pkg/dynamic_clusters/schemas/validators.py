"""Данный модуль добавляет общие кастомные валидаторы."""

import math
from functools import wraps
from typing import Any, Callable, Optional, Sequence

__all__ = [
    'skip_if_none',
    'check_integer',
    'check_positive_num',
    'check_non_negative_num',
    'check_positive_int',
    'check_unit_interval',
    'check_finite_vector',
    'check_speed_bound',
]


def skip_if_none(func: Callable[..., Any]) -> Callable[..., Optional[Any]]:
    """Декоратор для валидаторов: при value is None возвращает None.

    Args:
        func: Функция-валидатор, принимающая аргумент value

    Returns:
        Обёрнутый валидатор, который:
            - возвращает None, если вход равен None;
            - иначе вызывает исходную функцию
    """

    @wraps(func)
    def wrapper(
        value: Optional[Any],
        *args: object,
        **kwargs: object,
    ) -> Optional[Any]:
        if value is None:
            return None
        return func(value=value, *args, **kwargs)

    return wrapper


def check_integer(value: int) -> int:
    """Проверяет, что значение является целым числом.

    Args:
        value: Проверяемое значение

    Returns:
        int: то же число

    Raises:
        ValueError: Значение должно целым числом
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError('Значение должно быть целым числом')
    return value


def check_positive_num(value: int | float) -> int | float:
    """Проверяет, что значение является положительным конечным числом.

    Args:
        value: Проверяемое значение

    Returns:
        int | float: то же число

    Raises:
        ValueError: Если значение не число или не положительное
    """
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError('Значение должно быть числом')
    if not math.isfinite(value):
        raise ValueError('Значение должно быть конечным')
    if value <= 0:
        raise ValueError('Значение должно быть больше нуля')
    return value


@skip_if_none
def check_non_negative_num(value: int | float) -> int | float:
    """Проверяет, что значение является неотрицательным конечным числом.

    Args:
        value: Проверяемое значение

    Returns:
        int | float: то же число

    Raises:
        ValueError: Если значение отрицательное или не конечное
    """
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError('Значение должно быть числом')
    if not math.isfinite(value) or value < 0:
        raise ValueError('Значение должно быть неотрицательным')
    return value


def check_positive_int(value: int) -> int:
    """Проверяет, что значение является натуральным числом.

    Args:
        value: Проверяемое значение

    Returns:
        int: то же число

    Raises:
        ValueError: Если значение не целое или меньше единицы
    """
    check_integer(value=value)
    if value < 1:
        raise ValueError('Значение должно быть не меньше 1')
    return value


def check_unit_interval(value: float) -> float:
    """Проверяет, что значение лежит строго внутри (0, 1).

    Args:
        value: Проверяемое значение

    Returns:
        float: то же число

    Raises:
        ValueError: Если значение вне открытого интервала
    """
    if not 0 < value < 1:
        raise ValueError('Значение должно лежать в интервале (0, 1)')
    return value


def check_finite_vector(
    value: Sequence[float],
    dimension: int | None = None,
) -> list[float]:
    """Проверяет вектор координат на конечность и размерность.

    Args:
        value: Координаты вектора
        dimension: Ожидаемая размерность, если известна

    Returns:
        list[float]: Координаты в виде списка чисел

    Raises:
        ValueError: Если координата не конечна или размерность не совпала
    """
    coords = [float(item) for item in value]
    if not coords:
        raise ValueError('Вектор не может быть пустым')
    if dimension is not None and len(coords) != dimension:
        raise ValueError(
            f'Ожидалась размерность {dimension}, получено {len(coords)}',
        )
    if not all(math.isfinite(item) for item in coords):
        raise ValueError('Координаты вектора должны быть конечными')
    return coords


def check_speed_bound(
    value: Sequence[float],
    bound: float,
    tolerance: float = 1e-12,
) -> Sequence[float]:
    """Проверяет, что модуль скорости не превышает границу.

    Args:
        value: Вектор скорости
        bound: Верхняя граница модуля скорости v0
        tolerance: Допуск округления

    Returns:
        Sequence[float]: Исходный вектор

    Raises:
        ValueError: Если модуль скорости больше bound
    """
    speed = math.hypot(*value)
    if speed > bound * (1 + tolerance):
        raise ValueError(
            f'Модуль скорости {speed} превышает границу {bound}',
        )
    return value
