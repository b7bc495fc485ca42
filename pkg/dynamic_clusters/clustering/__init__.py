"""Граф взаимодействий, динамические кластеры и начальные подкластеры."""

from dynamic_clusters.clustering.graph import (
    Edge,
    InteractionGraph,
    build_interaction_graph,
    cluster_containing,
    first_contact,
)
from dynamic_clusters.clustering.partition import (
    ClusterPartition,
    InitialSubclusters,
    connected_components,
    initial_subclusters,
)
from dynamic_clusters.clustering.union_find import UnionFind

__all__ = [
    'ClusterPartition',
    'Edge',
    'InitialSubclusters',
    'InteractionGraph',
    'UnionFind',
    'build_interaction_graph',
    'cluster_containing',
    'connected_components',
    'first_contact',
    'initial_subclusters',
]
