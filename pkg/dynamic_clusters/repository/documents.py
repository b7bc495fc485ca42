"""Запись JSON-документов, CSV-таблиц и контрольных сумм."""

import csv
import hashlib
from pathlib import Path
from typing import Iterable, Sequence

from dynamic_clusters.exceptions.repository import RepositoryException
from dynamic_clusters.schemas.base import CustomBaseModel

__all__ = [
    'write_document',
    'write_documents',
    'write_csv',
    'sha256_of',
]


def write_document(path: Path, document: CustomBaseModel) -> None:
    """Записывает один JSON-документ без пустых полей.

    Args:
        path: Путь к файлу
        document: Документ

    Raises:
        RepositoryException: Если файл не записан
    """
    text = document.model_dump_json(by_alias=True, exclude_none=True, indent=2)
    _write_text(path=path, text=f'{text}\n')


def write_documents(
    path: Path,
    documents: Sequence[CustomBaseModel],
) -> None:
    """Записывает массив JSON-документов.

    Args:
        path: Путь к файлу
        documents: Документы в заданном порядке

    Raises:
        RepositoryException: Если файл не записан
    """
    body = ',\n'.join(
        document.model_dump_json(by_alias=True, exclude_none=True)
        for document in documents
    )
    _write_text(path=path, text=f'[\n{body}\n]\n' if body else '[]\n')


def write_csv(
    path: Path,
    header: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> None:
    """Записывает CSV с фиксированным порядком колонок.

    Args:
        path: Путь к файлу
        header: Имена колонок
        rows: Строки таблицы

    Raises:
        RepositoryException: Если файл не записан
    """
    try:
        with path.open(mode='w', encoding='utf-8', newline='') as stream:
            writer = csv.writer(stream, lineterminator='\n')
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        raise RepositoryException(
            detail=f'{path}: файл не записан: {exc}',
        ) from exc


def sha256_of(path: Path) -> str:
    """Контрольная сумма файла.

    Args:
        path: Путь к файлу

    Returns:
        str: SHA-256 в шестнадцатеричном виде
    """
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding='utf-8')
    except OSError as exc:
        raise RepositoryException(
            detail=f'{path}: файл не записан: {exc}',
        ) from exc
