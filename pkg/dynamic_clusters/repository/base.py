"""Модуль базового репозитория файлов JSON-lines."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, Iterable, TypeVar

from pydantic import ValidationError

from dynamic_clusters.exceptions.base import BaseAppException
from dynamic_clusters.exceptions.repository import RepositoryException
from dynamic_clusters.schemas.base import CustomBaseModel

__all__ = [
    'BaseRepositoryClass',
]

DTO = TypeVar('DTO')
Schema = TypeVar('Schema', bound=CustomBaseModel)


class BaseRepositoryClass(Generic[DTO, Schema], ABC):
    """Базовый репозиторий: одна запись схемы на строку файла."""

    schema: type[Schema]

    def __init__(self, path: Path) -> None:
        """Инициализирует экземпляр репозитория.

        Args:
            path: Путь к файлу JSON-lines
        """
        self.__path = path

    @property
    def path(self) -> Path:
        """Путь к файлу.

        Returns:
            Path: Путь к файлу JSON-lines
        """
        return self.__path

    @abstractmethod
    def _schema_to_dto(self, schema: Schema) -> DTO:
        """Производит маппинг записи файла в доменный объект.

        Args:
            schema: Запись файла

        Returns:
            DTO: Доменный объект
        """
        pass

    @abstractmethod
    def _dto_to_schema(self, dto: DTO) -> Schema:
        """Производит маппинг доменного объекта в запись файла.

        Args:
            dto: Доменный объект

        Returns:
            Schema: Запись файла
        """
        pass

    def write_all(self, items: Iterable[DTO]) -> int:
        """Перезаписывает файл записями.

        Args:
            items: Доменные объекты

        Returns:
            int: Число записанных строк

        Raises:
            RepositoryException: Если файл не записан
        """
        count = 0
        try:
            with self.__path.open(mode='w', encoding='utf-8') as stream:
                for item in items:
                    line = self._dto_to_schema(dto=item).to_json_line()
                    stream.write(f'{line}\n')
                    count += 1
        except OSError as exc:
            raise RepositoryException(
                detail=f'{self.__path}: файл не записан: {exc}',
            ) from exc
        return count

    def read_all(self) -> list[DTO]:
        """Читает все записи файла; пустые строки пропускаются.

        Returns:
            list[DTO]: Доменные объекты в порядке строк

        Raises:
            RepositoryException: С номером первой некорректной строки
        """
        items = []
        try:
            with self.__path.open(encoding='utf-8') as stream:
                for line_number, line in enumerate(stream, start=1):
                    if not line.strip():
                        continue
                    items.append(
                        self._parse(line=line, line_number=line_number),
                    )
        except OSError as exc:
            raise RepositoryException(
                detail=f'{self.__path}: файл не прочитан: {exc}',
            ) from exc
        return items

    def _parse(self, line: str, line_number: int) -> DTO:
        """Разбирает одну строку файла.

        Args:
            line: Строка файла
            line_number: Номер строки с единицы

        Returns:
            DTO: Доменный объект

        Raises:
            RepositoryException: Если строка некорректна
        """
        try:
            return self._schema_to_dto(
                schema=self.schema.from_json_line(line=line),
            )
        except ValidationError as exc:
            error = exc.errors()[0]
            location = '.'.join(str(part) for part in error['loc'])
            raise RepositoryException(
                detail=f'{self.__path.name}: {location}: {error["msg"]}',
                line_number=line_number,
            ) from exc
        except BaseAppException as exc:
            raise RepositoryException(
                detail=f'{self.__path.name}: {exc.detail}',
                line_number=line_number,
            ) from exc
