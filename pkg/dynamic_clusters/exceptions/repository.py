"""Модуль исключений, связанных с ошибками в слое репозитория."""

from dynamic_clusters.exceptions.base import BaseAppException
from dynamic_clusters.exceptions.domain import RUNTIME_EXIT_CODE

__all__ = [
    'RepositoryException',
]


class RepositoryException(BaseAppException):
    """Класс исключения чтения или записи файлов JSON-lines."""

    def __init__(
        self,
        detail: str = 'Ошибка при работе с репозиторием',
        line_number: int | None = None,
    ) -> None:
        """Инициализирует исключение, возникшее в слое репозитория.

        Args:
            detail: Сообщение с передаваемой информацией
            line_number: Номер строки файла (с единицы), если известен
        """
        self.line_number = line_number
        if line_number is not None:
            detail = f'строка {line_number}: {detail}'
        super().__init__(
            exit_code=RUNTIME_EXIT_CODE,
            detail=detail,
        )
