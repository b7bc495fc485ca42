"""Тесты для таблицы P_k и интервалов Уилсона."""

import pytest
from hamcrest import (
    assert_that,
    close_to,
    equal_to,
    greater_than,
    less_than,
)

from dynamic_clusters.estimator.table import (
    PkRow,
    PkTable,
    ReplicaOutcome,
    wilson_interval,
)
from dynamic_clusters.exceptions.domain import (
    EstimationException,
    InvariantBreachException,
)


class TestWilsonInterval:
    """Тесты для wilson_interval."""

    def test_half(self) -> None:
        """Интервал для 50 из 100 симметричен относительно 1/2."""
        low, high = wilson_interval(successes=50, trials=100)
        assert_that(
            actual_or_assertion=low,
            matcher=close_to(value=0.40383, delta=1e-4),
        )
        assert_that(
            actual_or_assertion=low + high,
            matcher=close_to(value=1.0, delta=1e-12),
        )

    def test_zero_successes(self) -> None:
        """Без успехов нижняя граница равна нулю, верхняя положительна."""
        low, high = wilson_interval(successes=0, trials=20)
        assert_that(actual_or_assertion=low, matcher=equal_to(obj=0.0))
        assert_that(actual_or_assertion=high, matcher=greater_than(value=0))

    def test_wider_for_higher_confidence(self) -> None:
        """Больший уровень доверия даёт более широкий интервал."""
        narrow = wilson_interval(successes=7, trials=40, confidence=0.9)
        wide = wilson_interval(successes=7, trials=40, confidence=0.99)
        assert_that(
            actual_or_assertion=wide[0],
            matcher=less_than(value=narrow[0]),
        )
        assert_that(
            actual_or_assertion=wide[1],
            matcher=greater_than(value=narrow[1]),
        )

    def test_no_trials(self) -> None:
        """Без испытаний интервал не определён."""
        with pytest.raises(expected_exception=EstimationException):
            wilson_interval(successes=0, trials=0)


class TestPkTable:
    """Тесты для PkTable."""

    def test_from_outcomes(self) -> None:
        """Итоги реплик распределяются по счётчикам."""
        table = PkTable.from_outcomes(
            outcomes=[
                ReplicaOutcome(index=0, size=1, status='recorded'),
                ReplicaOutcome(index=1, size=2, status='recorded'),
                ReplicaOutcome(index=2, size=1, status='recorded'),
                ReplicaOutcome(index=3, size=3, status='discarded'),
                ReplicaOutcome(
                    index=4,
                    size=2,
                    status='initial-contact',
                    subclusters=1,
                ),
            ],
        )
        assert_that(
            actual_or_assertion=(
                table.counts,
                table.replicas,
                table.discarded,
                table.initial_contact,
                table.usable,
            ),
            matcher=equal_to(obj=({1: 2, 2: 1}, 5, 1, {2: 1}, 4)),
        )
        assert_that(
            actual_or_assertion=(table.p_hat(k=1), table.discard_fraction),
            matcher=equal_to(obj=(0.5, 0.2)),
        )

    def test_counting_identity(self) -> None:
        """Счётчики, не дающие в сумме числа реплик, отвергаются."""
        with pytest.raises(expected_exception=InvariantBreachException):
            PkTable(counts={1: 3}, replicas=5, discarded=1)

    def test_merge(self) -> None:
        """Объединение складывает счётчики."""
        first = PkTable(counts={1: 3, 2: 1}, replicas=5, discarded=1)
        second = PkTable(
            counts={2: 2, 4: 1},
            replicas=4,
            initial_contact={3: 1},
        )
        assert_that(
            actual_or_assertion=first.merge(other=second),
            matcher=equal_to(
                obj=PkTable(
                    counts={1: 3, 2: 3, 4: 1},
                    replicas=9,
                    discarded=1,
                    initial_contact={3: 1},
                ),
            ),
        )

    def test_rows(self) -> None:
        """Строки упорядочены по k и содержат оценку."""
        table = PkTable(counts={3: 1, 1: 6, 2: 3}, replicas=10)
        rows = table.rows()
        assert_that(
            actual_or_assertion=[
                (row.k, row.count, row.p_hat) for row in rows
            ],
            matcher=equal_to(obj=[(1, 6, 0.6), (2, 3, 0.3), (3, 1, 0.1)]),
        )
        for row in rows:
            assert_that(
                actual_or_assertion=row.ci_low <= row.p_hat <= row.ci_high,
                matcher=equal_to(obj=True),
            )
        assert_that(
            actual_or_assertion=isinstance(rows[0], PkRow),
            matcher=equal_to(obj=True),
        )

    def test_empty(self) -> None:
        """Без пригодных реплик оценка не определена."""
        table = PkTable(replicas=2, discarded=2)
        with pytest.raises(expected_exception=EstimationException):
            table.rows()
        assert_that(
            actual_or_assertion=table.discard_fraction,
            matcher=equal_to(obj=1.0),
        )

    def test_initial_contact_mass(self) -> None:
        """Сумма P_k и доли начального контакта равна единице."""
        table = PkTable(
            counts={1: 2, 2: 1},
            replicas=5,
            discarded=1,
            initial_contact={2: 1},
        )
        assert_that(
            actual_or_assertion=(
                sum(row.p_hat for row in table.rows()),
                table.initial_contact_fraction,
            ),
            matcher=equal_to(obj=(0.75, 0.25)),
        )

    def test_initial_contact_fraction_empty(self) -> None:
        """Без пригодных реплик доля начального контакта не определена."""
        with pytest.raises(expected_exception=EstimationException):
            _ = PkTable(replicas=1, discarded=1).initial_contact_fraction
