"""Модуль репозиториев файлов запуска."""

from dynamic_clusters.repository.base import BaseRepositoryClass
from dynamic_clusters.repository.documents import (
    sha256_of,
    write_csv,
    write_document,
    write_documents,
)
from dynamic_clusters.repository.records import (
    EventRepository,
    TrajectoryRepository,
)

__all__ = [
    'BaseRepositoryClass',
    'EventRepository',
    'TrajectoryRepository',
    'sha256_of',
    'write_csv',
    'write_document',
    'write_documents',
]
