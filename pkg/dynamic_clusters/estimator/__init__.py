"""Монте-Карло оценка распределения размеров динамических кластеров."""

from dynamic_clusters.estimator.estimate import estimate_pk, pair_capture_bound
from dynamic_clusters.estimator.fit import GeometricFit, fit_geometric_ratio
from dynamic_clusters.estimator.replica import run_replica, touches_margin
from dynamic_clusters.estimator.sampling import (
    DISTINGUISHED_ID,
    replica_rng,
    sample_initial_configuration,
)
from dynamic_clusters.estimator.scan import AlphaScanRow, alpha_scan
from dynamic_clusters.estimator.table import (
    PkRow,
    PkTable,
    ReplicaOutcome,
    wilson_interval,
)

__all__ = [
    'DISTINGUISHED_ID',
    'AlphaScanRow',
    'GeometricFit',
    'PkRow',
    'PkTable',
    'ReplicaOutcome',
    'alpha_scan',
    'estimate_pk',
    'fit_geometric_ratio',
    'pair_capture_bound',
    'replica_rng',
    'run_replica',
    'sample_initial_configuration',
    'touches_margin',
    'wilson_interval',
]
