"""Тесты для выбора ближайшего скачка."""

import numpy as np
import pytest
from hamcrest import assert_that, close_to, equal_to, is_, none

from dynamic_clusters.dynamics.scheduler import ActivePair, next_jump_candidate
from dynamic_clusters.exceptions.domain import InvariantBreachException


def constant(pair: tuple[int, int], rate: float) -> ActivePair:
    """Пара с постоянной интенсивностью, равной границе."""
    return ActivePair(pair=pair, rate=lambda t: rate, rate_bound=rate)


class TestNextJumpCandidate:
    """Тесты расписания скачков."""

    def test_no_active_pairs(self, rng: np.random.Generator) -> None:
        """Без пар в контакте скачка нет.

        Args:
            rng: Генератор
        """
        assert_that(
            actual_or_assertion=next_jump_candidate(
                active=[],
                now=0.0,
                horizon=1.0,
                rng=rng,
            ),
            matcher=is_(none()),
        )

    def test_zero_bound_does_not_draw(self) -> None:
        """Пары с нулевой границей не расходуют генератор."""
        rng = np.random.default_rng(5)
        untouched = np.random.default_rng(5)
        next_jump_candidate(
            active=[constant(pair=(0, 1), rate=0.0)],
            now=0.0,
            horizon=1.0,
            rng=rng,
        )
        assert_that(
            actual_or_assertion=rng.random(),
            matcher=equal_to(obj=untouched.random()),
        )

    def test_exponential_mean(self, rng: np.random.Generator) -> None:
        """Первый тик экспоненциален со средним 1/λ.

        Args:
            rng: Генератор
        """
        draws = [
            next_jump_candidate(
                active=[constant(pair=(0, 1), rate=2.0)],
                now=0.0,
                horizon=np.inf,
                rng=rng,
            ).t
            for _ in range(10000)
        ]
        assert_that(
            actual_or_assertion=float(np.mean(draws)),
            matcher=close_to(value=0.5, delta=4 * 0.5 / 100),
        )

    def test_competing_pairs(self, rng: np.random.Generator) -> None:
        """Пара с λ₁ срабатывает первой с вероятностью λ₁/(λ₁+λ₂).

        Args:
            rng: Генератор
        """
        trials = 4000
        wins = sum(
            next_jump_candidate(
                active=[
                    constant(pair=(2, 3), rate=3.0),
                    constant(pair=(0, 1), rate=1.0),
                ],
                now=0.0,
                horizon=np.inf,
                rng=rng,
            ).pair
            == (0, 1)
            for _ in range(trials)
        )
        standard_error = np.sqrt(0.25 * 0.75 / trials)
        assert_that(
            actual_or_assertion=wins / trials,
            matcher=close_to(value=0.25, delta=4 * standard_error),
        )

    def test_thinning(self, rng: np.random.Generator) -> None:
        """Прореживание: λ = λ_max/2 удваивает среднее время.

        Args:
            rng: Генератор
        """
        half = ActivePair(pair=(0, 1), rate=lambda t: 1.0, rate_bound=2.0)
        draws = [
            next_jump_candidate(
                active=[half],
                now=0.0,
                horizon=np.inf,
                rng=rng,
            ).t
            for _ in range(10000)
        ]
        assert_that(
            actual_or_assertion=float(np.mean(draws)),
            matcher=close_to(value=1.0, delta=4 * 1.0 / 100),
        )

    def test_horizon_cuts_ticks(self, rng: np.random.Generator) -> None:
        """Тики после горизонта не возвращаются.

        Args:
            rng: Генератор
        """
        found = [
            next_jump_candidate(
                active=[constant(pair=(0, 1), rate=1.0)],
                now=5.0,
                horizon=5.5,
                rng=rng,
            )
            for _ in range(200)
        ]
        assert_that(
            actual_or_assertion=all(
                candidate is None or 5.0 < candidate.t < 5.5
                for candidate in found
            ),
            matcher=equal_to(obj=True),
        )

    def test_rate_above_bound(self, rng: np.random.Generator) -> None:
        """λ > λ_max нарушает инвариант.

        Args:
            rng: Генератор
        """
        broken = ActivePair(pair=(0, 1), rate=lambda t: 5.0, rate_bound=1.0)
        with pytest.raises(expected_exception=InvariantBreachException):
            next_jump_candidate(
                active=[broken],
                now=0.0,
                horizon=np.inf,
                rng=rng,
            )
