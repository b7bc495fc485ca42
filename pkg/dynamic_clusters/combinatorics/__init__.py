"""Точная комбинаторика деревьев подкластеров."""

from dynamic_clusters.combinatorics.counting import (
    entropy,
    enumerate_linear_extensions,
    interleavings,
    is_linear_extension,
    linear_extensions,
    normalized_ratio,
    pair_factor,
    q_recurrence_bound,
    q_value,
    r_orderings,
)
from dynamic_clusters.combinatorics.scans import (
    EnvelopeRow,
    LemmaScanRow,
    complete_tree_envelope,
    lemma_bound_scan,
)
from dynamic_clusters.combinatorics.shapes import (
    MAX_ENUMERATION_LEAVES,
    TreeShape,
    enumerate_shapes,
)

__all__ = [
    'MAX_ENUMERATION_LEAVES',
    'EnvelopeRow',
    'LemmaScanRow',
    'TreeShape',
    'complete_tree_envelope',
    'entropy',
    'enumerate_linear_extensions',
    'enumerate_shapes',
    'interleavings',
    'is_linear_extension',
    'lemma_bound_scan',
    'linear_extensions',
    'normalized_ratio',
    'pair_factor',
    'q_recurrence_bound',
    'q_value',
    'r_orderings',
]
