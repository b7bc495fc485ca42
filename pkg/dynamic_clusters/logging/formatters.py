"""Форматтер журнала в JSON-строки."""

import json
import logging
from datetime import UTC, datetime
from typing import Any

__all__ = [
    'JsonFormatter',
]


def _jsonable(value: Any) -> Any:  # noqa: ANN401
    # numpy-скаляры и массивы
    if hasattr(value, 'tolist'):
        return value.tolist()
    return str(value)


class JsonFormatter(logging.Formatter):
    """Одна запись журнала на строку JSON.

    Поля: timestamp (UTC), level, source (модуль), message, а также
    context из extra={'context': {...}} и exception при наличии.
    """

    def format(self, record: logging.LogRecord) -> str:
        """Форматирует запись лога в JSON строку.

        Args:
            record: Запись лога

        Returns:
            str: JSON без переводов строк
        """
        payload: dict[str, Any] = {
            'timestamp': datetime.fromtimestamp(
                record.created,
                tz=UTC,
            ).isoformat(),
            'level': record.levelname,
            'source': record.module,
            'message': record.getMessage(),
        }
        context = getattr(record, 'context', None)
        if context:
            payload['context'] = context
        if record.exc_info:
            payload['exception'] = self.formatException(record.exc_info)
        return json.dumps(obj=payload, ensure_ascii=False, default=_jsonable)
