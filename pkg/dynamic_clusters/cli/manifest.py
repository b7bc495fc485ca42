"""Манифест запуска: снимок конфигурации, версия и контрольные суммы."""

from datetime import UTC, datetime
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any, Sequence

from dynamic_clusters.repository.documents import sha256_of, write_document
from dynamic_clusters.schemas.reports import ManifestSchema, OutputFileSchema

__all__ = [
    'MANIFEST_NAME',
    'package_version',
    'RunManifest',
]

MANIFEST_NAME = 'manifest.json'
PACKAGE_NAME = 'dynamic_clusters'
UNKNOWN_VERSION = '0+unknown'


def package_version() -> str:
    """Версия установленного пакета.

    Returns:
        str: Версия или 0+unknown для неустановленного исходника
    """
    try:
        return version(PACKAGE_NAME)
    except PackageNotFoundError:
        return UNKNOWN_VERSION


class RunManifest:
    """Собирает манифест одной подкоманды."""

    def __init__(
        self,
        command: str,
        config: dict[str, Any],
        seed: int | None = None,
        arguments: dict[str, Any] | None = None,
    ) -> None:
        """Фиксирует начало запуска.

        Args:
            command: Подкоманда
            config: Снимок конфигурации
            seed: Зерно запуска
            arguments: Параметры командной строки вне конфигурации
        """
        self.__command = command
        self.__config = config
        self.__seed = seed
        self.__arguments = arguments or {}
        self.__started_at = datetime.now(tz=UTC)

    def finish(self, out_dir: Path, outputs: Sequence[str]) -> ManifestSchema:
        """Считает контрольные суммы и пишет manifest.json.

        Args:
            out_dir: Каталог вывода
            outputs: Имена выходных файлов в каталоге

        Returns:
            ManifestSchema: Записанный манифест
        """
        manifest = ManifestSchema(
            command=self.__command,
            config=self.__config,
            arguments=self.__arguments,
            seed=self.__seed,
            version=package_version(),
            started_at=self.__started_at,
            finished_at=datetime.now(tz=UTC),
            outputs=[
                OutputFileSchema(path=name, sha256=sha256_of(out_dir / name))
                for name in outputs
            ],
        )
        write_document(path=out_dir / MANIFEST_NAME, document=manifest)
        return manifest
