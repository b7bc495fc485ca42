"""Модуль с базовыми классами исключений."""

__all__ = [
    'BaseAppException',
]


class BaseAppException(Exception):
    """Базовое исключение для всех кастомных исключений."""

    def __init__(self, exit_code: int, detail: str) -> None:
        """Инициализирует базовое исключение.

        Args:
            exit_code: Код завершения процесса для данной ошибки
            detail: Сообщение с передаваемой информацией
        """
        self.exit_code = exit_code
        self.detail = detail
        super().__init__(self.detail)
