"""Загрузка настроек из TOML или снимка манифеста."""

import json
import tomllib
from pathlib import Path
from typing import Any, Mapping, Type, TypeVar

from pydantic import ValidationError

from dynamic_clusters.exceptions.config import ConfigException
from dynamic_clusters.logging.logger import get_logger
from dynamic_clusters.settings.estimator import EstimatorSettings
from dynamic_clusters.settings.simulation import SimulationSettings

__all__ = [
    'load_settings',
    'settings_from_mapping',
]

S = TypeVar('S', bound=SimulationSettings)

logger = get_logger(name=__name__)

KEY_ALIASES: dict[str, str] = {
    'L': 'box',
}


def settings_from_mapping(cls: Type[S], data: Mapping[str, Any]) -> S:
    """Валидирует плоский словарь ключей в объект настроек.

    Args:
        cls: Класс настроек
        data: Ключи конфигурационного файла

    Returns:
        S: Проверенные настройки

    Raises:
        ConfigException: С именем первого некорректного ключа
    """
    normalized = {
        KEY_ALIASES.get(key, key): value for key, value in data.items()
    }
    try:
        return cls(**normalized)
    except ValidationError as exc:
        error = exc.errors()[0]
        location = '.'.join(str(part) for part in error['loc'])
        message = error['msg'].removeprefix('Value error, ')
        if not location:
            location, _, message = message.partition(': ')
        raise ConfigException(detail=message, key=location or None) from exc


def load_settings(cls: Type[S], path: Path) -> S:
    """Читает настройки из TOML или из поля config манифеста JSON.

    Один файл обслуживает все подкоманды: ключи оценки (replicas,
    workers и прочие) пропускаются, если их нет у cls. Остальные
    неизвестные ключи отвергаются.

    Args:
        cls: Класс настроек
        path: Путь к файлу

    Returns:
        S: Проверенные настройки

    Raises:
        ConfigException: Если файл нельзя прочитать или разобрать
    """
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ConfigException(detail=f'файл не прочитан: {exc}') from exc
    try:
        if path.suffix == '.json':
            data = json.loads(raw)['config']
        else:
            data = tomllib.loads(raw.decode('utf-8'))
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigException(detail=f'файл не разобран: {exc}') from exc
    if not isinstance(data, dict):
        raise ConfigException(detail='файл не разобран: ожидалась таблица')
    ignored = sorted(
        key
        for key in data
        if key in EstimatorSettings.model_fields
        and key not in cls.model_fields
    )
    if ignored:
        logger.debug(
            msg='Ключи оценки пропущены',
            extra={'context': {'keys': ignored, 'path': str(path)}},
        )
    return settings_from_mapping(
        cls=cls,
        data={key: value for key, value in data.items() if key not in ignored},
    )
