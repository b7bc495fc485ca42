"""Родительская схема файловых записей и отчётов."""

from typing import Any, Final, Type, TypeVar

from pydantic import BaseModel, ConfigDict
from pydantic.fields import FieldInfo

T = TypeVar(
    'T',
    bound='CustomBaseModel',
)

__all__ = [
    'CustomBaseModel',
]

REQUIRED_FIELD_ATTRIBUTES: Final[tuple[str, ...]] = (
    'alias',
    'description',
    'examples',
)


def _field_errors(name: str, info: FieldInfo) -> list[str]:
    errors = [
        f'{name}: отсутствует {attribute}'
        for attribute in REQUIRED_FIELD_ATTRIBUTES
        if getattr(info, attribute, None) is None
    ]
    if info.examples is not None and len(info.examples) != 1:
        errors.append(f'{name}: examples должен содержать ровно одно значение')
    return errors


class CustomBaseModel(BaseModel):
    """Родительская схема для файловых записей и отчётов.

    Каждое поле обязано иметь alias (имя на проводе), description и ровно
    один пример. Сериализация всегда идёт по alias, лишние ключи и
    неконечные числа отвергаются.
    """

    model_config = ConfigDict(
        populate_by_name=True,
        serialize_by_alias=True,
        extra='forbid',
        allow_inf_nan=False,
    )

    @classmethod
    def __pydantic_init_subclass__(
        cls,
        **kwargs: Any,  # noqa: ANN401
    ) -> None:
        """Проверяет документацию полей при объявлении подкласса.

        Args:
            cls
            kwargs: Дополнительные передаваемые именованные аргументы

        Raises:
            TypeError: Если у поля нет alias, description или примера
        """
        super().__pydantic_init_subclass__(**kwargs)
        errors = [
            error
            for name, info in cls.model_fields.items()
            for error in _field_errors(name=name, info=info)
        ]
        if errors:
            raise TypeError(
                f'Схема {cls.__name__} не прошла проверку документации:\n'
                + '\n'.join(errors),
            )

    @classmethod
    def generate_example(cls: Type[T]) -> T:
        """Собирает экземпляр из примеров полей.

        Returns:
            CustomBaseModel
        """
        return cls.model_validate(
            obj={
                info.alias or name: info.examples[0]
                for name, info in cls.model_fields.items()
                if info.examples
            },
        )

    def to_json_line(self) -> str:
        """Сериализует запись в одну строку JSON.

        Returns:
            str: JSON без переводов строк
        """
        return self.model_dump_json(by_alias=True)

    @classmethod
    def from_json_line(cls: Type[T], line: str) -> T:
        """Разбирает одну строку JSON в запись.

        Args:
            line: Строка файла JSON-lines

        Returns:
            CustomBaseModel
        """
        return cls.model_validate_json(json_data=line)
