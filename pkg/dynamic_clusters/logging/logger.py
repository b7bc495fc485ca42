"""Модуль логирования."""

import logging
import multiprocessing
import sys
from contextlib import contextmanager
from logging.handlers import QueueHandler, QueueListener
from queue import Queue
from typing import Any, Callable, Iterator

from dynamic_clusters.logging.formatters import JsonFormatter

__all__ = [
    'get_logger',
    'set_level',
    'shutdown_logging',
    'init_worker_logging',
    'forward_worker_logs',
]


_loggers: dict[str, logging.Logger] = {}
_handler: QueueHandler | None = None
_listener: QueueListener | None = None
_level: int = logging.INFO
_in_worker: bool = False


def get_handler() -> logging.Handler:
    """Создает и возвращает обработчик логов.

    Обработчик использует очередь и listener, который пишет в stderr,
    чтобы логи не смешивались с данными на stdout. В дочернем процессе
    пула listener не запускается: очередь читает родитель.

    Returns:
        logging.Handler: Настроенный обработчик логов
    """
    global _handler, _listener

    if _handler is None:
        _handler = QueueHandler(queue=Queue())

    if _listener is None and not _in_worker:
        stream_handler = logging.StreamHandler(stream=sys.stderr)
        stream_handler.setFormatter(fmt=JsonFormatter())
        _listener = QueueListener(_handler.queue, stream_handler)
        _listener.start()

    return _handler


def get_logger(name: str) -> logging.Logger:
    """Создает и возвращает логгер.

    Логирование происходит в отдельном потоке через QueueHandler.

    Args:
        name: str

    Returns:
        logging.Logger: Настроенный логгер
    """
    handler = get_handler()
    if name in _loggers:
        return _loggers[name]

    logger: logging.Logger = logging.getLogger(name=name)
    logger.setLevel(level=_level)
    logger.addHandler(hdlr=handler)
    logger.propagate = False

    _loggers[name] = logger

    return logger


def set_level(level: int | str) -> None:
    """Меняет уровень всех созданных и будущих логгеров пакета.

    Args:
        level: Уровень логирования (число или имя, например 'DEBUG')
    """
    global _level

    get_handler()
    _level = logging.getLevelName(level) if isinstance(level, str) else level
    for logger in _loggers.values():
        logger.setLevel(level=_level)


def shutdown_logging() -> None:
    """Останавливает listener, дописывая все записи из очереди.

    Обработчик очереди остаётся у логгеров; следующий вызов get_handler
    или set_level запускает listener заново.
    """
    global _listener

    if _listener is not None:
        _listener.stop()
    _listener = None


def init_worker_logging(queue: Any, level: int) -> None:  # noqa: ANN401
    """Направляет логи дочернего процесса в очередь родителя.

    Вызывается как initializer пула. Унаследованный при fork обработчик
    пишет в очередь, которую никто не читает, поэтому он заменяется.

    Args:
        queue: Очередь multiprocessing из forward_worker_logs
        level: Уровень логирования родителя
    """
    global _handler, _listener, _level, _in_worker

    stale = _handler
    _in_worker = True
    _listener = None
    _level = level
    _handler = QueueHandler(queue=queue)
    for logger in _loggers.values():
        if stale is not None:
            logger.removeHandler(hdlr=stale)
        logger.addHandler(hdlr=_handler)
        logger.setLevel(level=level)


@contextmanager
def forward_worker_logs() -> Iterator[tuple[Callable[..., None], tuple]]:
    """Пересылает записи дочерних процессов в обработчик родителя.

    Yields:
        tuple: initializer и initargs для multiprocessing.Pool
    """
    queue: Any = multiprocessing.Queue()
    forwarder = QueueListener(queue, get_handler())
    forwarder.start()
    try:
        yield init_worker_logging, (queue, _level)
    finally:
        forwarder.stop()
        queue.close()
        queue.join_thread()
