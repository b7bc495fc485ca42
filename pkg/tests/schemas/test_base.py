"""Тесты для родительской схемы и файловых записей."""

import pytest
from hamcrest import assert_that, equal_to, has_entries
from pydantic import Field, ValidationError

from dynamic_clusters.schemas.base import CustomBaseModel
from dynamic_clusters.schemas.records import (
    EventSchema,
    SegmentSchema,
    TrajectorySchema,
)
from dynamic_clusters.schemas.reports import ManifestSchema


class TestCustomBaseModel:
    """Тесты для CustomBaseModel."""

    def test_missing_description(self) -> None:
        """Поле без описания запрещено при объявлении схемы."""
        with pytest.raises(expected_exception=TypeError):

            class _Broken(CustomBaseModel):
                value: int = Field(alias='value', examples=[1])

    def test_two_examples(self) -> None:
        """Поле должно иметь ровно один пример."""
        with pytest.raises(expected_exception=TypeError):

            class _Broken(CustomBaseModel):
                value: int = Field(
                    alias='value',
                    description='Значение',
                    examples=[1, 2],
                )

    @pytest.mark.parametrize(
        argnames='schema',
        argvalues=[SegmentSchema, EventSchema, ManifestSchema],
    )
    def test_generate_example(self, schema: type[CustomBaseModel]) -> None:
        """Примеры полей образуют корректный экземпляр.

        Args:
            schema: Класс схемы
        """
        example = schema.generate_example()
        assert_that(
            actual_or_assertion=isinstance(example, schema),
            matcher=equal_to(obj=True),
        )

    def test_extra_forbidden(self) -> None:
        """Лишние ключи записи отвергаются."""
        with pytest.raises(expected_exception=ValidationError):
            SegmentSchema.from_json_line(
                line='{"t": 0, "x": [0], "v": [0], "a": 1, "extra": 1}',
            )


class TestRecords:
    """Тесты для записей файлов JSON-lines."""

    def test_json_line(self) -> None:
        """Траектория пишется одной строкой по alias."""
        schema = TrajectorySchema(
            particle_id=3,
            segments=[SegmentSchema(t=0.0, x=[1.0, 2.0], v=[0.5, 0.0], a=1)],
        )
        line = schema.to_json_line()
        assert_that(
            actual_or_assertion='\n' in line,
            matcher=equal_to(obj=False),
        )
        assert_that(
            actual_or_assertion=TrajectorySchema.from_json_line(line=line),
            matcher=equal_to(obj=schema),
        )

    def test_non_finite_coordinate(self) -> None:
        """Неконечная координата отвергается."""
        with pytest.raises(expected_exception=ValidationError):
            SegmentSchema(t=0.0, x=[float('nan')], v=[0.0], a=1)

    def test_event_dump(self) -> None:
        """Событие без состояний сериализуется с парой."""
        event = EventSchema(t=4.0, kind='contact-start', pair=(1, 2))
        assert_that(
            actual_or_assertion=event.model_dump(),
            matcher=has_entries({'t': 4.0, 'kind': 'contact-start'}),
        )
