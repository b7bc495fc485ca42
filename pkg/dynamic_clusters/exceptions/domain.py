"""Модуль исключений вычислительного слоя."""

from dynamic_clusters.exceptions.base import BaseAppException

__all__ = [
    'RUNTIME_EXIT_CODE',
    'DomainException',
    'InvariantBreachException',
    'ClusterException',
    'EstimationException',
]

RUNTIME_EXIT_CODE = 3


class DomainException(BaseAppException):
    """Аргументы вне области определения операции."""

    def __init__(
        self,
        detail: str = 'Аргументы вне области определения',
    ) -> None:
        """Инициализирует исключение области определения.

        Args:
            detail: Сообщение с передаваемой информацией
        """
        super().__init__(
            exit_code=RUNTIME_EXIT_CODE,
            detail=detail,
        )


class InvariantBreachException(BaseAppException):
    """Нарушение инварианта модели во время симуляции."""

    def __init__(
        self,
        detail: str = 'Нарушен инвариант динамики',
    ) -> None:
        """Инициализирует исключение нарушения инварианта.

        Args:
            detail: Сообщение с передаваемой информацией
        """
        super().__init__(
            exit_code=RUNTIME_EXIT_CODE,
            detail=detail,
        )


class ClusterException(BaseAppException):
    """Индукция дерева подкластеров остановилась раньше корня."""

    def __init__(
        self,
        step: int,
        detail: str = 'Множество частиц не является кластером',
    ) -> None:
        """Инициализирует исключение построения дерева.

        Args:
            step: Номер шага, на котором не нашлось слияния
            detail: Сообщение с передаваемой информацией
        """
        self.step = step
        super().__init__(
            exit_code=RUNTIME_EXIT_CODE,
            detail=f'{detail} (шаг {step})',
        )


class EstimationException(BaseAppException):
    """Недостаточно данных для оценки."""

    def __init__(
        self,
        detail: str = 'Недостаточно данных для оценки',
    ) -> None:
        """Инициализирует исключение оценивания.

        Args:
            detail: Сообщение с передаваемой информацией
        """
        super().__init__(
            exit_code=RUNTIME_EXIT_CODE,
            detail=detail,
        )
