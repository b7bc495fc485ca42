"""Таблица оценок P_k с интервалами Уилсона."""

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal

from scipy import stats

from dynamic_clusters.exceptions.domain import (
    EstimationException,
    InvariantBreachException,
)

__all__ = [
    'DEFAULT_CONFIDENCE',
    'ReplicaStatus',
    'ReplicaOutcome',
    'PkRow',
    'PkTable',
    'wilson_interval',
]

DEFAULT_CONFIDENCE = 0.95

ReplicaStatus = Literal['recorded', 'discarded', 'initial-contact']


def wilson_interval(
    successes: int,
    trials: int,
    confidence: float = DEFAULT_CONFIDENCE,
) -> tuple[float, float]:
    """Интервал Уилсона для биномиальной доли.

    Args:
        successes: Число успехов
        trials: Число испытаний
        confidence: Уровень доверия

    Returns:
        tuple[float, float]: Нижняя и верхняя границы

    Raises:
        EstimationException: Если испытаний нет
    """
    if trials <= 0:
        raise EstimationException(detail='Нет испытаний для интервала')
    z = float(stats.norm.ppf(0.5 + confidence / 2))
    p = successes / trials
    denominator = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denominator
    spread = (
        z
        * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials))
        / denominator
    )
    return max(0.0, center - spread), min(1.0, center + spread)


@dataclass(frozen=True)
class ReplicaOutcome:
    """Итог одной реплики.

    Args:
        index: Номер реплики
        size: Размер кластера отмеченной частицы
        status: Учтена, отброшена у границы или имеет начальный контакт
        subclusters: Число начальных подкластеров в кластере
    """

    index: int
    size: int
    status: ReplicaStatus
    subclusters: int = 1


@dataclass(frozen=True)
class PkRow:
    """Строка таблицы.

    Args:
        k: Размер кластера
        count: Число реплик с этим размером
        p_hat: Оценка P_k
        ci_low: Нижняя граница интервала
        ci_high: Верхняя граница интервала
    """

    k: int
    count: int
    p_hat: float
    ci_low: float
    ci_high: float


@dataclass(frozen=True)
class PkTable:
    """Счётчики размеров кластера отмеченной частицы.

    Выполняется тождество recorded + initial_contact + discarded =
    replicas. Оценка P_k равна count_k / usable, где usable = replicas -
    discarded. Реплики с начальным контактом остаются в usable, поэтому
    при require_no_initial_contact P_k оценивает совместную вероятность
    "размер k и нет контакта при t = 0", а сумма P_k по k равна
    1 - initial_contact_fraction.

    Args:
        counts: Размер -> число учтённых реплик
        replicas: Всего реплик
        discarded: Реплики, отброшенные у границы
        initial_contact: Размер -> число реплик с начальным контактом
        confidence: Уровень доверия интервалов
    """

    counts: dict[int, int] = field(default_factory=dict)
    replicas: int = 0
    discarded: int = 0
    initial_contact: dict[int, int] = field(default_factory=dict)
    confidence: float = DEFAULT_CONFIDENCE

    def __post_init__(self) -> None:
        """Проверяет тождество подсчёта.

        Raises:
            InvariantBreachException: Если счётчики не сходятся
        """
        total = self.recorded + self.initial_contact_total + self.discarded
        if total != self.replicas:
            raise InvariantBreachException(
                detail=f'Счётчики реплик не сходятся: {total} != '
                f'{self.replicas}',
            )

    @classmethod
    def from_outcomes(
        cls,
        outcomes: Iterable[ReplicaOutcome],
        confidence: float = DEFAULT_CONFIDENCE,
    ) -> 'PkTable':
        """Сворачивает итоги реплик в порядке их следования.

        Args:
            outcomes: Итоги реплик
            confidence: Уровень доверия интервалов

        Returns:
            PkTable
        """
        table = cls(confidence=confidence)
        for outcome in outcomes:
            table = table.add(outcome=outcome)
        return table

    def add(self, outcome: ReplicaOutcome) -> 'PkTable':
        """Таблица с учётом ещё одной реплики.

        Args:
            outcome: Итог реплики

        Returns:
            PkTable
        """
        counts = dict(self.counts)
        initial = dict(self.initial_contact)
        discarded = self.discarded
        if outcome.status == 'discarded':
            discarded += 1
        elif outcome.status == 'initial-contact':
            initial[outcome.size] = initial.get(outcome.size, 0) + 1
        else:
            counts[outcome.size] = counts.get(outcome.size, 0) + 1
        return PkTable(
            counts=counts,
            replicas=self.replicas + 1,
            discarded=discarded,
            initial_contact=initial,
            confidence=self.confidence,
        )

    def merge(self, other: 'PkTable') -> 'PkTable':
        """Объединяет две таблицы.

        Args:
            other: Другая таблица

        Returns:
            PkTable
        """
        counts = dict(self.counts)
        for k, count in other.counts.items():
            counts[k] = counts.get(k, 0) + count
        initial = dict(self.initial_contact)
        for k, count in other.initial_contact.items():
            initial[k] = initial.get(k, 0) + count
        return PkTable(
            counts=counts,
            replicas=self.replicas + other.replicas,
            discarded=self.discarded + other.discarded,
            initial_contact=initial,
            confidence=self.confidence,
        )

    @property
    def recorded(self) -> int:
        """Учтённые реплики.

        Returns:
            int
        """
        return sum(self.counts.values())

    @property
    def initial_contact_total(self) -> int:
        """Реплики с начальным контактом в кластере.

        Returns:
            int
        """
        return sum(self.initial_contact.values())

    @property
    def usable(self) -> int:
        """Реплики, не отброшенные у границы.

        Returns:
            int
        """
        return self.replicas - self.discarded

    @property
    def initial_contact_fraction(self) -> float:
        """Доля пригодных реплик с начальным контактом.

        Returns:
            float

        Raises:
            EstimationException: Если пригодных реплик нет
        """
        if self.usable == 0:
            raise EstimationException(detail='Нет пригодных реплик')
        return self.initial_contact_total / self.usable

    @property
    def discard_fraction(self) -> float:
        """Доля отброшенных реплик.

        Returns:
            float
        """
        if self.replicas == 0:
            return 0.0
        return self.discarded / self.replicas

    def count(self, k: int) -> int:
        """Число учтённых реплик размера k.

        Args:
            k: Размер кластера

        Returns:
            int
        """
        return self.counts.get(k, 0)

    def p_hat(self, k: int) -> float:
        """Оценка P_k.

        Args:
            k: Размер кластера

        Returns:
            float

        Raises:
            EstimationException: Если пригодных реплик нет
        """
        if self.usable == 0:
            raise EstimationException(detail='Нет пригодных реплик')
        return self.count(k=k) / self.usable

    def rows(self) -> list[PkRow]:
        """Строки таблицы по возрастанию k.

        Returns:
            list[PkRow]

        Raises:
            EstimationException: Если пригодных реплик нет
        """
        if self.usable == 0:
            raise EstimationException(detail='Нет пригодных реплик')
        rows = []
        for k in sorted(self.counts):
            low, high = wilson_interval(
                successes=self.counts[k],
                trials=self.usable,
                confidence=self.confidence,
            )
            rows.append(
                PkRow(
                    k=k,
                    count=self.counts[k],
                    p_hat=self.p_hat(k=k),
                    ci_low=low,
                    ci_high=high,
                ),
            )
        return rows
