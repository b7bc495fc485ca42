"""Дерево подкластеров и его комбинаторная структура."""

from dynamic_clusters.cluster_tree.induction import (
    build_cluster_tree,
    build_cluster_tree_with_initial,
)
from dynamic_clusters.cluster_tree.models import (
    TIE_TOLERANCE,
    ClusterTree,
    LeafNode,
    MergeNode,
    TreeNode,
)
from dynamic_clusters.cluster_tree.structure import (
    CombStructure,
    extract_comb_structure,
)

__all__ = [
    'TIE_TOLERANCE',
    'ClusterTree',
    'CombStructure',
    'LeafNode',
    'MergeNode',
    'TreeNode',
    'build_cluster_tree',
    'build_cluster_tree_with_initial',
    'extract_comb_structure',
]
