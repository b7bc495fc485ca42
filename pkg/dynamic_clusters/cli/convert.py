"""Преобразование графов и деревьев в документы вывода."""

from dynamic_clusters.cluster_tree.models import (
    ClusterTree,
    LeafNode,
    TreeNode,
)
from dynamic_clusters.clustering.graph import InteractionGraph
from dynamic_clusters.clustering.partition import ClusterPartition
from dynamic_clusters.schemas.records import (
    ClustersSchema,
    EdgeSchema,
    TreeNodeSchema,
    TreeSchema,
)

__all__ = [
    'clusters_document',
    'tree_document',
]


def clusters_document(
    graph: InteractionGraph,
    partition: ClusterPartition,
) -> ClustersSchema:
    """Документ clusters.json.

    Args:
        graph: Граф взаимодействий
        partition: Динамические кластеры

    Returns:
        ClustersSchema
    """
    return ClustersSchema(
        vertices=sorted(graph.vertices),
        edges=[
            EdgeSchema(i=edge.i, j=edge.j, s=edge.s) for edge in graph.edges
        ],
        components={
            cluster: list(members)
            for cluster, members in partition.clusters().items()
        },
    )


def _node(node: TreeNode) -> TreeNodeSchema:
    if isinstance(node, LeafNode):
        return TreeNodeSchema(members=list(node.members))
    return TreeNodeSchema(
        t=node.t,
        i=node.i,
        j=node.j,
        left=_node(node=node.left),
        right=_node(node=node.right),
    )


def tree_document(tree: ClusterTree, initial: bool) -> TreeSchema:
    """Документ дерева одного кластера.

    Args:
        tree: Дерево подкластеров
        initial: Листья являются начальными подкластерами

    Returns:
        TreeSchema
    """
    return TreeSchema(
        cluster=tree.root.min_id,
        variant='initial' if initial else 'particles',
        times=list(tree.times),
        newick=tree.to_newick(),
        root=_node(node=tree.root),
    )
