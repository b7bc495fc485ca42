"""Тесты для равномерной сетки."""

import numpy as np
import pytest
from hamcrest import assert_that, equal_to

from dynamic_clusters.exceptions.domain import DomainException
from dynamic_clusters.geometry.grid import UniformGrid, all_pairs


class TestAllPairs:
    """Тесты перечисления пар."""

    def test_lexicographic(self) -> None:
        """Пары идут в порядке (0,1), (0,2), (1,2)."""
        assert_that(
            actual_or_assertion=all_pairs(count=3).tolist(),
            matcher=equal_to(obj=[[0, 1], [0, 2], [1, 2]]),
        )

    def test_empty(self) -> None:
        """Одна точка пар не образует."""
        assert_that(
            actual_or_assertion=all_pairs(count=1).shape,
            matcher=equal_to(obj=(0, 2)),
        )


class TestUniformGrid:
    """Тесты сеточного отбора пар."""

    @pytest.mark.parametrize(
        argnames='dimension',
        argvalues=[1, 2, 3],
    )
    def test_candidate_pairs_match_brute_force(
        self,
        dimension: int,
        rng: np.random.Generator,
    ) -> None:
        """Сетка находит ровно пары на расстоянии не больше радиуса.

        Args:
            dimension: Размерность
            rng: Генератор
        """
        points = rng.uniform(0.0, 10.0, size=(80, dimension))
        grid = UniformGrid(points=points, cell_size=1.5)
        pairs = all_pairs(count=len(points))
        gaps = np.linalg.norm(
            points[pairs[:, 0]] - points[pairs[:, 1]],
            axis=1,
        )
        assert_that(
            actual_or_assertion=grid.candidate_pairs(radius=1.5).tolist(),
            matcher=equal_to(obj=pairs[gaps <= 1.5].tolist()),
        )

    def test_within(self) -> None:
        """Соседи точки в пределах радиуса."""
        points = np.array([[0.0, 0.0], [0.5, 0.0], [0.9, 0.9], [3.0, 0.0]])
        grid = UniformGrid(points=points, cell_size=1.0)
        assert_that(
            actual_or_assertion=grid.within(index=0, radius=1.0),
            matcher=equal_to(obj=[1]),
        )

    def test_radius_above_cell(self) -> None:
        """Радиус больше ячейки не поддерживается."""
        grid = UniformGrid(points=np.zeros((2, 2)), cell_size=1.0)
        with pytest.raises(expected_exception=DomainException):
            grid.candidate_pairs(radius=2.0)

    def test_non_positive_cell(self) -> None:
        """Сторона ячейки должна быть положительной."""
        with pytest.raises(expected_exception=DomainException):
            UniformGrid(points=np.zeros((2, 2)), cell_size=0.0)
