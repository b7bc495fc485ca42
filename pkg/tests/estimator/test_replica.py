"""Тесты для одной реплики оценки."""

from hamcrest import assert_that, equal_to, is_in

from dynamic_clusters.estimator.replica import run_replica, touches_margin
from dynamic_clusters.estimator.sampling import DISTINGUISHED_ID
from dynamic_clusters.settings.estimator import EstimatorSettings
from tests.helpers import straight


class TestTouchesMargin:
    """Тесты для touches_margin."""

    def test_center(self) -> None:
        """Частица в центре не касается зоны."""
        trajectory = straight(
            particle_id=DISTINGUISHED_ID,
            x=(5.0, 5.0),
            v=(1.0, 0.0),
            tau=1.0,
        )
        assert_that(
            actual_or_assertion=touches_margin(
                trajectories=[trajectory],
                box=10.0,
                margin=3.0,
            ),
            matcher=equal_to(obj=False),
        )

    def test_reaches_margin_at_end(self) -> None:
        """Зона достигается в конце участка."""
        trajectory = straight(
            particle_id=1,
            x=(6.5, 5.0),
            v=(1.0, 0.0),
            tau=1.0,
        )
        assert_that(
            actual_or_assertion=touches_margin(
                trajectories=[trajectory],
                box=10.0,
                margin=3.0,
            ),
            matcher=equal_to(obj=True),
        )


class TestRunReplica:
    """Тесты для run_replica."""

    def test_deterministic(
        self,
        estimator_settings: EstimatorSettings,
    ) -> None:
        """Итог реплики зависит только от зерна и номера.

        Args:
            estimator_settings: Настройки оценки
        """
        outcomes = [
            run_replica(config=estimator_settings, index=3) for _ in range(2)
        ]
        assert_that(
            actual_or_assertion=outcomes[0],
            matcher=equal_to(obj=outcomes[1]),
        )
        assert_that(
            actual_or_assertion=outcomes[0].status,
            matcher=is_in(['recorded', 'discarded', 'initial-contact']),
        )

    def test_initial_contact_split(
        self,
        estimator_settings: EstimatorSettings,
    ) -> None:
        """С require_no_initial_contact статус зависит от подкластеров.

        Args:
            estimator_settings: Настройки оценки
        """
        strict = estimator_settings.model_copy(
            update={'require_no_initial_contact': True},
        )
        for index in range(20):
            loose = run_replica(config=estimator_settings, index=index)
            outcome = run_replica(config=strict, index=index)
            expected = loose.status
            if loose.status == 'recorded' and loose.subclusters < loose.size:
                expected = 'initial-contact'
            assert_that(
                actual_or_assertion=(outcome.size, outcome.status),
                matcher=equal_to(obj=(loose.size, expected)),
            )
