"""Тесты для базового репозитория."""

from pathlib import Path

import pytest
from hamcrest import assert_that, equal_to

from dynamic_clusters.exceptions.repository import RepositoryException
from tests.repository.helpers import IncompleteRepo, SampleDTO, SampleRepo


class TestBaseRepository:
    """Класс тестов базового репозитория."""

    def test_abstract_methods_not_implemented(self, tmp_path: Path) -> None:
        """Репозиторий без маппинга нельзя создать.

        Args:
            tmp_path: Временный каталог
        """
        with pytest.raises(expected_exception=TypeError):
            IncompleteRepo(path=tmp_path / 'sample.jsonl')  # type: ignore

    def test_write_and_read(self, tmp_path: Path) -> None:
        """Записанные объекты читаются в том же порядке.

        Args:
            tmp_path: Временный каталог
        """
        repo = SampleRepo(path=tmp_path / 'sample.jsonl')
        items = [SampleDTO(name='first'), SampleDTO(name='second')]
        assert_that(
            actual_or_assertion=repo.write_all(items=items),
            matcher=equal_to(obj=2),
        )
        assert_that(
            actual_or_assertion=repo.read_all(),
            matcher=equal_to(obj=items),
        )
        assert_that(
            actual_or_assertion=repo.path.read_text(encoding='utf-8'),
            matcher=equal_to(obj='{"name":"first"}\n{"name":"second"}\n'),
        )

    def test_blank_lines_skipped(self, tmp_path: Path) -> None:
        """Пустые строки не считаются записями.

        Args:
            tmp_path: Временный каталог
        """
        path = tmp_path / 'sample.jsonl'
        path.write_text('\n{"name": "only"}\n\n', encoding='utf-8')
        assert_that(
            actual_or_assertion=SampleRepo(path=path).read_all(),
            matcher=equal_to(obj=[SampleDTO(name='only')]),
        )

    @pytest.mark.parametrize(
        argnames='text',
        argvalues=[
            '{"name": "ok"}\n{"name": \n',
            '{"name": "ok"}\n{"title": "wrong"}\n',
        ],
    )
    def test_malformed_line(self, tmp_path: Path, text: str) -> None:
        """Ошибка разбора сообщает номер строки.

        Args:
            tmp_path: Временный каталог
            text: Содержимое файла
        """
        path = tmp_path / 'sample.jsonl'
        path.write_text(text, encoding='utf-8')
        with pytest.raises(expected_exception=RepositoryException) as error:
            SampleRepo(path=path).read_all()
        assert_that(
            actual_or_assertion=(
                error.value.line_number,
                error.value.exit_code,
            ),
            matcher=equal_to(obj=(2, 3)),
        )

    def test_missing_file(self, tmp_path: Path) -> None:
        """Отсутствующий файл даёт ошибку репозитория.

        Args:
            tmp_path: Временный каталог
        """
        with pytest.raises(expected_exception=RepositoryException):
            SampleRepo(path=tmp_path / 'absent.jsonl').read_all()
