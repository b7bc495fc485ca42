"""Модуль классов, необходимых для запуска тестов репозитория."""

from dataclasses import dataclass

from pydantic import Field

from dynamic_clusters.repository.base import BaseRepositoryClass
from dynamic_clusters.schemas.base import CustomBaseModel


class SampleSchema(CustomBaseModel):
    """Запись тестового файла."""

    name: str = Field(
        alias='name',
        description='Название записи',
        examples=['first'],
    )


@dataclass(frozen=True)
class SampleDTO:
    """Доменный объект тестового файла.

    Args:
        name: Название записи
    """

    name: str


class SampleRepo(BaseRepositoryClass[SampleDTO, SampleSchema]):
    """Тестовый репозиторий с минимальным маппингом."""

    schema = SampleSchema

    def _schema_to_dto(self, schema: SampleSchema) -> SampleDTO:
        return SampleDTO(name=schema.name)

    def _dto_to_schema(self, dto: SampleDTO) -> SampleSchema:
        return SampleSchema(name=dto.name)


class IncompleteRepo(BaseRepositoryClass[SampleDTO, SampleSchema]):
    """Репозиторий без маппинга в запись."""

    schema = SampleSchema

    def _schema_to_dto(self, schema: SampleSchema) -> SampleDTO:
        return SampleDTO(name=schema.name)
