"""Модуль исключений, связанных с конфигурацией запуска."""

from dynamic_clusters.exceptions.base import BaseAppException

__all__ = [
    'CONFIG_EXIT_CODE',
    'ConfigException',
]

CONFIG_EXIT_CODE = 2


class ConfigException(BaseAppException):
    """Класс исключения для некорректного конфигурационного файла."""

    def __init__(
        self,
        detail: str = 'Некорректная конфигурация',
        key: str | None = None,
    ) -> None:
        """Инициализирует исключение конфигурации.

        Args:
            detail: Сообщение с передаваемой информацией
            key: Ключ конфигурации, вызвавший ошибку
        """
        self.key = key
        if key is not None:
            detail = f'{key}: {detail}'
        super().__init__(
            exit_code=CONFIG_EXIT_CODE,
            detail=detail,
        )
