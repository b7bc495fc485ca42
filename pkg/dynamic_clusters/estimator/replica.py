"""Одна реплика оценки: симуляция, кластер отмеченной частицы, граница."""

from typing import Sequence

import numpy as np

from dynamic_clusters.clustering.graph import cluster_containing
from dynamic_clusters.clustering.partition import initial_subclusters
from dynamic_clusters.dynamics.kernels import build_kernel
from dynamic_clusters.dynamics.models import Trajectory
from dynamic_clusters.dynamics.simulator import simulate_replica
from dynamic_clusters.estimator.sampling import (
    DISTINGUISHED_ID,
    replica_rng,
    sample_initial_configuration,
)
from dynamic_clusters.estimator.table import ReplicaOutcome
from dynamic_clusters.settings.estimator import EstimatorSettings

__all__ = [
    'touches_margin',
    'run_replica',
]


def touches_margin(
    trajectories: Sequence[Trajectory],
    box: float,
    margin: float,
) -> bool:
    """Подходит ли какая-либо траектория к граням куба ближе margin.

    Движение на участке линейно, поэтому экстремумы координат достигаются
    в концах участков.

    Args:
        trajectories: Траектории частиц кластера
        box: Сторона куба
        margin: Ширина пограничной зоны

    Returns:
        bool: True, если кластер заходит в пограничную зону
    """
    for trajectory in trajectories:
        for segment in trajectory.segments():
            ends = np.vstack(
                (segment.x0, segment.position(t=segment.t1)),
            )
            if np.any(ends < margin) or np.any(ends > box - margin):
                return True
    return False


def run_replica(config: EstimatorSettings, index: int) -> ReplicaOutcome:
    """Прогоняет реплику index и классифицирует её итог.

    Args:
        config: Настройки оценки
        index: Номер реплики

    Returns:
        ReplicaOutcome
    """
    rng = replica_rng(seed=config.seed, index=index)
    initial = sample_initial_configuration(config=config, rng=rng)
    result = simulate_replica(
        config=config,
        initial=initial,
        seed=rng,
        kernel=build_kernel(settings=config),
        record_events=False,
    )
    members = cluster_containing(
        trajectories=result.trajectories,
        particle_id=DISTINGUISHED_ID,
        r=config.r,
        tau=config.tau,
        threshold=config.contact_threshold,
    )
    by_id = {
        trajectory.particle_id: trajectory
        for trajectory in result.trajectories
    }
    cluster = [by_id[member] for member in members]
    if touches_margin(
        trajectories=cluster,
        box=config.box,
        margin=config.analysis_margin,
    ):
        return ReplicaOutcome(
            index=index,
            size=len(members),
            status='discarded',
        )
    subclusters = initial_subclusters(
        states=[trajectory.state_at(t=0.0) for trajectory in cluster],
        r=config.r,
        threshold=config.contact_threshold,
    )
    if config.require_no_initial_contact and not subclusters.all_singletons:
        return ReplicaOutcome(
            index=index,
            size=len(members),
            status='initial-contact',
            subclusters=len(subclusters.blocks),
        )
    return ReplicaOutcome(
        index=index,
        size=len(members),
        status='recorded',
        subclusters=len(subclusters.blocks),
    )
