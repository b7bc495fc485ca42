"""Тесты для заметаемых объёмов и объёма захвата."""

import math

import numpy as np
import pytest
from hamcrest import (
    assert_that,
    close_to,
    equal_to,
    less_than_or_equal_to,
)

from dynamic_clusters.dynamics.kernels import uniform_ball
from dynamic_clusters.exceptions.domain import DomainException
from dynamic_clusters.geometry.volume import (
    ball_volume,
    capture_volume_bound,
    capture_volume_mc,
    ordered_simplex_volume,
    reachability_radius,
)


class TestBallVolume:
    """Тесты объёма шара."""

    @pytest.mark.parametrize(
        argnames='d, radius, expected',
        argvalues=[
            (0, 3.0, 1.0),
            (1, 1.0, 2.0),
            (2, 1.0, math.pi),
            (3, 2.0, 4 / 3 * math.pi * 8),
        ],
    )
    def test_known_values(
        self,
        d: int,
        radius: float,
        expected: float,
    ) -> None:
        """Объёмы шаров малых размерностей.

        Args:
            d: Размерность
            radius: Радиус
            expected: Ожидаемый объём
        """
        assert_that(
            actual_or_assertion=ball_volume(d=d, radius=radius),
            matcher=close_to(value=expected, delta=1e-12),
        )

    def test_negative_dimension(self) -> None:
        """Отрицательная размерность недопустима."""
        with pytest.raises(expected_exception=DomainException):
            ball_volume(d=-1, radius=1.0)


class TestCaptureVolumeBound:
    """Тесты границы объёма захвата."""

    def test_plane(self) -> None:
        """d=2, r=0.5, v0=1: β = 2·1·2 = 4, добавка π."""
        bound = capture_volume_bound(d=2, r=0.5, v0=1.0, tau=1.0)
        assert_that(
            actual_or_assertion=bound.beta,
            matcher=close_to(value=4.0, delta=1e-12),
        )
        assert_that(
            actual_or_assertion=bound.additive,
            matcher=close_to(value=math.pi, delta=1e-12),
        )

    def test_zero_horizon(self) -> None:
        """При τ = 0 остаётся только начальный шар."""
        bound = capture_volume_bound(d=2, r=0.5, v0=1.0, tau=0.0)
        assert_that(
            actual_or_assertion=bound.total,
            matcher=equal_to(obj=bound.additive),
        )

    def test_line(self) -> None:
        """d=1: сечение имеет меру 1, β = 2·v0."""
        bound = capture_volume_bound(d=1, r=0.5, v0=1.0, tau=1.0)
        assert_that(
            actual_or_assertion=bound.beta,
            matcher=equal_to(obj=2.0),
        )

    def test_invalid(self) -> None:
        """Неположительный радиус недопустим."""
        with pytest.raises(expected_exception=DomainException):
            capture_volume_bound(d=2, r=0.0, v0=1.0, tau=1.0)


class TestCaptureVolumeMc:
    """Тесты Монте-Карло оценки объёма захвата."""

    def test_degenerate_sweep(self, rng: np.random.Generator) -> None:
        """Равные скорости: объём шара радиуса 2r.

        Args:
            rng: Генератор
        """
        estimate = capture_volume_mc(
            v1=np.array([0.3, 0.1]),
            v2=np.array([0.3, 0.1]),
            r=0.5,
            tau=1.0,
            samples=40000,
            rng=rng,
        )
        assert_that(
            actual_or_assertion=estimate.volume,
            matcher=close_to(value=math.pi, delta=3 * estimate.standard_error),
        )

    def test_stadium(self, rng: np.random.Generator) -> None:
        """v1 - v2 = (2, 0): площадь стадиона 4 + π.

        Args:
            rng: Генератор
        """
        estimate = capture_volume_mc(
            v1=np.array([1.0, 0.0]),
            v2=np.array([-1.0, 0.0]),
            r=0.5,
            tau=1.0,
            samples=40000,
            rng=rng,
            v0=1.0,
        )
        assert_that(
            actual_or_assertion=estimate.volume,
            matcher=close_to(
                value=4 + math.pi,
                delta=3 * estimate.standard_error,
            ),
        )

    @pytest.mark.parametrize(argnames='d', argvalues=[2, 3])
    def test_below_bound(self, d: int, rng: np.random.Generator) -> None:
        """Для 1000 пар со скоростями в шаре v0 оценка не выше βτ + добавки.

        Допуск 4 SE на каждую пару.

        Args:
            d: Размерность
            rng: Генератор
        """
        bound = capture_volume_bound(d=d, r=0.5, v0=1.0, tau=1.0)
        velocities = uniform_ball(rng=rng, count=2000, dimension=d, radius=1.0)
        for v1, v2 in zip(velocities[::2], velocities[1::2]):
            estimate = capture_volume_mc(
                v1=v1,
                v2=v2,
                r=0.5,
                tau=1.0,
                samples=2000,
                rng=rng,
                v0=1.0,
            )
            assert_that(
                actual_or_assertion=estimate.volume,
                matcher=less_than_or_equal_to(
                    value=bound.total + 4 * estimate.standard_error,
                ),
            )

    def test_small_sample(self, rng: np.random.Generator) -> None:
        """Менее 1000 точек недостаточно.

        Args:
            rng: Генератор
        """
        with pytest.raises(expected_exception=DomainException):
            capture_volume_mc(
                v1=np.zeros(2),
                v2=np.zeros(2),
                r=0.5,
                tau=1.0,
                samples=10,
                rng=rng,
            )

    def test_speed_above_bound(self, rng: np.random.Generator) -> None:
        """Скорость больше v0 отклоняется.

        Args:
            rng: Генератор
        """
        with pytest.raises(expected_exception=DomainException):
            capture_volume_mc(
                v1=np.array([2.0, 0.0]),
                v2=np.zeros(2),
                r=0.5,
                tau=1.0,
                samples=1000,
                rng=rng,
                v0=1.0,
            )


class TestSweptVolumes:
    """Тесты вспомогательных объёмов."""

    def test_reachability_radius(self) -> None:
        """Радиус достижимости v0·τ + r."""
        assert_that(
            actual_or_assertion=reachability_radius(r=0.5, v0=2.0, tau=3.0),
            matcher=equal_to(obj=6.5),
        )

    def test_ordered_simplex(self) -> None:
        """Упорядоченные моменты: τ^m / m!."""
        assert_that(
            actual_or_assertion=ordered_simplex_volume(m=3, tau=2.0),
            matcher=close_to(value=8 / 6, delta=1e-12),
        )
