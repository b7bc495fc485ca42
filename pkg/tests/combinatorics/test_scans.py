"""Тесты для таблиц максимумов Q и оценки полных деревьев."""

from fractions import Fraction

import pytest
from hamcrest import assert_that, close_to, equal_to

from dynamic_clusters.combinatorics.scans import (
    complete_tree_envelope,
    lemma_bound_scan,
)
from dynamic_clusters.exceptions.domain import DomainException


class TestLemmaBoundScan:
    """Тесты для lemma_bound_scan."""

    def test_small(self) -> None:
        """Максимумы для N ≤ 4."""
        rows = lemma_bound_scan(n_max=4)
        assert_that(
            actual_or_assertion=[
                (row.n, row.shape_count, row.max_q, row.ratio)
                for row in rows
            ],
            matcher=equal_to(
                obj=[
                    (1, 1, 1, Fraction(1)),
                    (2, 1, 1, Fraction(1, 2)),
                    (3, 1, 2, Fraction(1, 3)),
                    (4, 2, 8, Fraction(1, 3)),
                ],
            ),
        )
        assert_that(
            actual_or_assertion=rows[-1].argmax,
            matcher=equal_to(obj='((o,o),(o,o))'),
        )
        assert_that(
            actual_or_assertion=rows[-1].constant,
            matcher=close_to(value=(1 / 3) ** 0.25, delta=1e-12),
        )

    def test_ratio_bounded(self) -> None:
        """max Q / N! не превосходит единицы."""
        assert_that(
            actual_or_assertion=all(
                row.ratio <= 1 for row in lemma_bound_scan(n_max=9)
            ),
            matcher=equal_to(obj=True),
        )

    @pytest.mark.parametrize(argnames='n_max', argvalues=[0, 13])
    def test_out_of_range(self, n_max: int) -> None:
        """n_max вне 1..12 недопустимо.

        Args:
            n_max: Наибольшее N
        """
        with pytest.raises(expected_exception=DomainException):
            lemma_bound_scan(n_max=n_max)


class TestCompleteTreeEnvelope:
    """Тесты для complete_tree_envelope."""

    def test_small_depths(self) -> None:
        """Глубины 1 и 2: Q = 1 и 8."""
        rows = complete_tree_envelope(depths=(1, 2))
        assert_that(
            actual_or_assertion=[(row.n, row.q) for row in rows],
            matcher=equal_to(obj=[(2, 1), (4, 8)]),
        )
        assert_that(
            actual_or_assertion=[row.implied_c for row in rows],
            matcher=equal_to(obj=[-1.0, -1.25]),
        )

    def test_invalid_depth(self) -> None:
        """Глубина должна быть ≥ 1."""
        with pytest.raises(expected_exception=DomainException):
            complete_tree_envelope(depths=(0,))
