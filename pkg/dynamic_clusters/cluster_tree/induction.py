"""Индуктивное построение дерева подкластеров по моментам контактов.

На каждом шаге берётся самый ранний первый контакт пары частиц из разных
максимальных подкластеров, и эти подкластеры сливаются. Поскольку первый
контакт пары не позже любого её контакта, это ровно порядок Краскала на
рёбрах графа взаимодействий.
"""

from typing import Sequence

from dynamic_clusters.cluster_tree.models import (
    TIE_TOLERANCE,
    ClusterTree,
    LeafNode,
    MergeNode,
    TreeNode,
)
from dynamic_clusters.clustering.graph import Edge, build_interaction_graph
from dynamic_clusters.clustering.partition import initial_subclusters
from dynamic_clusters.clustering.union_find import UnionFind
from dynamic_clusters.dynamics.models import Trajectory
from dynamic_clusters.exceptions.domain import (
    ClusterException,
    DomainException,
)
from dynamic_clusters.logging.logger import get_logger

__all__ = [
    'build_cluster_tree',
    'build_cluster_tree_with_initial',
]

logger = get_logger(name=__name__)


def _next_cross_edge(
    edges: Sequence[Edge],
    start: int,
    union_find: UnionFind,
) -> tuple[int, int] | None:
    """Ближайшее ребро между разными подкластерами.

    Среди рёбер в пределах TIE_TOLERANCE от самого раннего выбирается
    лексикографически меньшая пара.

    Args:
        edges: Рёбра по возрастанию (s, i, j)
        start: Индекс, до которого все рёбра внутренние
        union_find: Текущие максимальные подкластеры

    Returns:
        tuple[int, int] | None: Индексы первого и выбранного ребра
    """
    first: int | None = None
    best = start
    for index in range(start, len(edges)):
        edge = edges[index]
        if union_find.find(edge.i) == union_find.find(edge.j):
            continue
        if first is None:
            first = best = index
            continue
        if edge.s > edges[first].s + TIE_TOLERANCE:
            break
        if (edge.i, edge.j) < (edges[best].i, edges[best].j):
            best = index
    if first is None:
        return None
    return first, best


def _induce(
    blocks: Sequence[tuple[int, ...]],
    edges: Sequence[Edge],
) -> ClusterTree:
    """Сливает блоки по рёбрам в порядке моментов контакта.

    Args:
        blocks: Листья дерева
        edges: Рёбра графа взаимодействий

    Returns:
        ClusterTree

    Raises:
        ClusterException: Если слияния закончились раньше корня
    """
    leaves = tuple(LeafNode(members=tuple(sorted(block))) for block in blocks)
    leaves = tuple(sorted(leaves, key=lambda leaf: leaf.min_id))
    union_find = UnionFind(
        elements=[member for leaf in leaves for member in leaf.members],
    )
    for leaf in leaves:
        for member in leaf.members[1:]:
            union_find.union(leaf.min_id, member)
    nodes: dict[object, TreeNode] = {
        union_find.find(leaf.min_id): leaf for leaf in leaves
    }
    ordered = sorted(edges, key=lambda edge: (edge.s, edge.i, edge.j))
    merges: list[MergeNode] = []
    start = 0
    while len(merges) < len(leaves) - 1:
        found = _next_cross_edge(
            edges=ordered,
            start=start,
            union_find=union_find,
        )
        if found is None:
            raise ClusterException(step=len(merges) + 1)
        start, chosen = found
        edge = ordered[chosen]
        first = nodes.pop(union_find.find(edge.i))
        second = nodes.pop(union_find.find(edge.j))
        i, j = edge.i, edge.j
        if second.min_id < first.min_id:
            first, second = second, first
            i, j = j, i
        merge = MergeNode(t=edge.s, i=i, j=j, left=first, right=second)
        union_find.union(edge.i, edge.j)
        nodes[union_find.find(edge.i)] = merge
        merges.append(merge)
    root = merges[-1] if merges else leaves[0]
    tree = ClusterTree(leaves=leaves, merges=tuple(merges), root=root)
    logger.debug(
        msg='Дерево подкластеров построено',
        extra={'context': {'tree': tree.to_newick()}},
    )
    return tree


def _check_trajectories(trajectories: Sequence[Trajectory]) -> None:
    if not trajectories:
        raise DomainException(detail='Кластер не содержит частиц')


def build_cluster_tree(
    trajectories: Sequence[Trajectory],
    r: float,
    tau: float,
    threshold: float | None = None,
) -> ClusterTree:
    """Дерево подкластеров одного динамического кластера.

    Листья дерева частицы.

    Args:
        trajectories: Траектории частиц кластера
        r: Радиус трубки
        tau: Горизонт времени
        threshold: Порог контакта; по умолчанию 2r

    Returns:
        ClusterTree: N листьев и N-1 слияние

    Raises:
        ClusterException: Если частицы не образуют один кластер
    """
    _check_trajectories(trajectories=trajectories)
    graph = build_interaction_graph(
        trajectories=trajectories,
        r=r,
        tau=tau,
        threshold=threshold,
    )
    return _induce(
        blocks=[(vertex,) for vertex in sorted(graph.vertices)],
        edges=graph.edges,
    )


def build_cluster_tree_with_initial(
    trajectories: Sequence[Trajectory],
    r: float,
    tau: float,
    threshold: float | None = None,
) -> ClusterTree:
    """Дерево над начальными подкластерами.

    Листья дерева компоненты графа близости в момент 0, слияния считаются
    только между ними.

    Args:
        trajectories: Траектории частиц кластера
        r: Радиус трубки
        tau: Горизонт времени
        threshold: Порог контакта; по умолчанию 2r

    Returns:
        ClusterTree: M листьев и M-1 слияние

    Raises:
        ClusterException: Если частицы не образуют один кластер
    """
    _check_trajectories(trajectories=trajectories)
    subclusters = initial_subclusters(
        states=[trajectory.state_at(t=0.0) for trajectory in trajectories],
        r=r,
        threshold=threshold,
    )
    graph = build_interaction_graph(
        trajectories=trajectories,
        r=r,
        tau=tau,
        threshold=threshold,
    )
    return _induce(blocks=subclusters.blocks, edges=graph.edges)
