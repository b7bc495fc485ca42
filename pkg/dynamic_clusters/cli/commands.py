"""Подкоманды: каждая читает вход, пишет файлы и манифест."""

import argparse
import time
from pathlib import Path
from typing import Any, Type, TypeVar

from dynamic_clusters.cli.convert import clusters_document, tree_document
from dynamic_clusters.cli.manifest import MANIFEST_NAME, RunManifest
from dynamic_clusters.cluster_tree.induction import (
    build_cluster_tree,
    build_cluster_tree_with_initial,
)
from dynamic_clusters.clustering.graph import build_interaction_graph
from dynamic_clusters.clustering.partition import (
    connected_components,
    initial_subclusters,
)
from dynamic_clusters.combinatorics.counting import (
    linear_extensions,
    normalized_ratio,
    pair_factor,
    q_recurrence_bound,
    q_value,
)
from dynamic_clusters.combinatorics.scans import (
    complete_tree_envelope,
    lemma_bound_scan,
)
from dynamic_clusters.combinatorics.shapes import enumerate_shapes
from dynamic_clusters.dynamics.kernels import build_kernel
from dynamic_clusters.dynamics.simulator import simulate_replica
from dynamic_clusters.estimator.estimate import estimate_pk, pair_capture_bound
from dynamic_clusters.estimator.fit import GeometricFit, fit_geometric_ratio
from dynamic_clusters.estimator.sampling import (
    replica_rng,
    sample_initial_configuration,
)
from dynamic_clusters.estimator.scan import alpha_scan
from dynamic_clusters.estimator.table import PkTable
from dynamic_clusters.exceptions.config import ConfigException
from dynamic_clusters.exceptions.domain import EstimationException
from dynamic_clusters.geometry.volume import ball_volume, reachability_radius
from dynamic_clusters.logging.logger import get_logger
from dynamic_clusters.repository.documents import (
    write_csv,
    write_document,
    write_documents,
)
from dynamic_clusters.repository.records import (
    EventRepository,
    TrajectoryRepository,
)
from dynamic_clusters.schemas.reports import EstimateSummarySchema
from dynamic_clusters.settings.estimator import EstimatorSettings
from dynamic_clusters.settings.loader import (
    load_settings,
    settings_from_mapping,
)
from dynamic_clusters.settings.simulation import SimulationSettings

__all__ = [
    'ENVELOPE_DEPTHS',
    'cmd_simulate',
    'cmd_clusters',
    'cmd_tree',
    'cmd_estimate_pk',
    'cmd_combinatorics',
    'cmd_alpha_scan',
]

logger = get_logger(name=__name__)

S = TypeVar('S', bound=SimulationSettings)

ENVELOPE_DEPTHS = (1, 2, 3, 4, 5, 6)


def _settings(
    cls: Type[S],
    path: Path | None,
    **overrides: Any,  # noqa: ANN401
) -> S:
    """Загружает настройки и применяет переопределения флагов.

    Args:
        cls: Класс настроек
        path: Путь к конфигурации
        overrides: Значения флагов; None означает отсутствие флага

    Returns:
        S: Проверенные настройки

    Raises:
        ConfigException: Если путь не задан или настройки некорректны
    """
    if path is None:
        raise ConfigException(
            detail='не задан файл конфигурации',
            key='config',
        )
    settings = load_settings(cls=cls, path=path)
    updates = {
        key: value for key, value in overrides.items() if value is not None
    }
    if not updates:
        return settings
    return settings_from_mapping(
        cls=cls,
        data={**settings.model_dump(), **updates},
    )


def _out_dir(args: argparse.Namespace) -> Path:
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_simulate(args: argparse.Namespace) -> int:
    """Симулирует одну реплику и пишет траектории и события.

    Args:
        args: Разобранные аргументы

    Returns:
        int: Код завершения
    """
    config = _settings(
        cls=SimulationSettings,
        path=args.config,
        seed=args.seed,
    )
    manifest = RunManifest(
        command='simulate',
        config=config.model_dump(mode='json'),
        seed=config.seed,
    )
    rng = replica_rng(seed=config.seed, index=0)
    initial = sample_initial_configuration(config=config, rng=rng)
    result = simulate_replica(
        config=config,
        initial=initial,
        seed=rng,
        kernel=build_kernel(settings=config),
    )
    out = _out_dir(args=args)
    TrajectoryRepository(
        path=out / 'trajectories.jsonl',
        horizon=config.tau,
    ).write_all(items=result.trajectories)
    EventRepository(path=out / 'events.jsonl').write_all(
        items=result.events.events,
    )
    manifest.finish(
        out_dir=out,
        outputs=['trajectories.jsonl', 'events.jsonl'],
    )
    logger.info(
        msg='Симуляция записана',
        extra={
            'context': {
                'particles': len(result.trajectories),
                'events': len(result.events),
                'out': str(out),
            },
        },
    )
    return 0


def _read_trajectories(
    args: argparse.Namespace,
) -> tuple[SimulationSettings, list]:
    config_path = args.config or args.input.parent / MANIFEST_NAME
    config = _settings(cls=SimulationSettings, path=config_path)
    trajectories = TrajectoryRepository(
        path=args.input,
        horizon=config.tau,
    ).read_all()
    return config, trajectories


def cmd_clusters(args: argparse.Namespace) -> int:
    """Строит граф взаимодействий и динамические кластеры.

    Args:
        args: Разобранные аргументы

    Returns:
        int: Код завершения
    """
    config, trajectories = _read_trajectories(args=args)
    manifest = RunManifest(
        command='clusters',
        config=config.model_dump(mode='json'),
        seed=config.seed,
        arguments={'input': str(args.input)},
    )
    graph = build_interaction_graph(
        trajectories=trajectories,
        r=config.r,
        tau=config.tau,
        threshold=config.contact_threshold,
    )
    partition = connected_components(graph=graph)
    out = _out_dir(args=args)
    write_document(
        path=out / 'clusters.json',
        document=clusters_document(graph=graph, partition=partition),
    )
    manifest.finish(out_dir=out, outputs=['clusters.json'])
    return 0


def cmd_tree(args: argparse.Namespace) -> int:
    """Строит деревья подкластеров для всех кластеров.

    Кластер с начальными контактами получает дерево над начальными
    подкластерами.

    Args:
        args: Разобранные аргументы

    Returns:
        int: Код завершения
    """
    config, trajectories = _read_trajectories(args=args)
    manifest = RunManifest(
        command='tree',
        config=config.model_dump(mode='json'),
        seed=config.seed,
        arguments={'input': str(args.input)},
    )
    graph = build_interaction_graph(
        trajectories=trajectories,
        r=config.r,
        tau=config.tau,
        threshold=config.contact_threshold,
    )
    by_id = {trajectory.particle_id: trajectory for trajectory in trajectories}
    documents = []
    for members in connected_components(graph=graph).clusters().values():
        cluster = [by_id[member] for member in members]
        initial = not initial_subclusters(
            states=[trajectory.state_at(t=0.0) for trajectory in cluster],
            r=config.r,
            threshold=config.contact_threshold,
        ).all_singletons
        build = (
            build_cluster_tree_with_initial if initial else build_cluster_tree
        )
        tree = build(
            trajectories=cluster,
            r=config.r,
            tau=config.tau,
            threshold=config.contact_threshold,
        )
        documents.append(tree_document(tree=tree, initial=initial))
    out = _out_dir(args=args)
    write_documents(path=out / 'trees.json', documents=documents)
    manifest.finish(out_dir=out, outputs=['trees.json'])
    return 0


def _fit_or_none(
    config: EstimatorSettings,
    table: PkTable,
) -> GeometricFit | None:
    try:
        return fit_geometric_ratio(
            table=table,
            k_min=config.k_min,
            bootstrap=config.bootstrap,
            confidence=config.confidence,
            seed=config.seed,
        )
    except EstimationException as exc:
        logger.warning(
            msg='Подгонка отношения пропущена',
            extra={'context': {'reason': exc.detail}},
        )
        return None


def _summary(
    config: EstimatorSettings,
    table: PkTable,
    fit: GeometricFit | None,
    runtime: float,
) -> EstimateSummarySchema:
    radius = reachability_radius(r=config.r, v0=config.v0, tau=config.tau)
    return EstimateSummarySchema(
        replicas=table.replicas,
        usable=table.usable,
        discarded=table.discarded,
        discard_fraction=table.discard_fraction,
        initial_contact=table.initial_contact_total,
        ratio=fit.ratio if fit else None,
        ratio_interval=fit.interval if fit else None,
        fit_ks=list(fit.ks) if fit else [],
        density=config.density,
        reachability_radius=radius,
        reachability_count=config.density
        * ball_volume(d=config.d, radius=radius),
        pair_capture_bound=pair_capture_bound(config=config),
        partner_fraction=1 - table.p_hat(k=1),
        runtime_seconds=round(runtime, 3),
    )


def cmd_estimate_pk(args: argparse.Namespace) -> int:
    """Оценивает P_k и пишет таблицу и сводку.

    Args:
        args: Разобранные аргументы

    Returns:
        int: Код завершения
    """
    config = _settings(
        cls=EstimatorSettings,
        path=args.config,
        seed=args.seed,
        workers=args.workers,
    )
    manifest = RunManifest(
        command='estimate-pk',
        config=config.model_dump(mode='json'),
        seed=config.seed,
    )
    started = time.perf_counter()
    table = estimate_pk(config=config)
    fit = _fit_or_none(config=config, table=table)
    runtime = time.perf_counter() - started
    out = _out_dir(args=args)
    write_csv(
        path=out / 'pk.csv',
        header=('k', 'count', 'p_hat', 'ci_lo', 'ci_hi'),
        rows=(
            (row.k, row.count, row.p_hat, row.ci_low, row.ci_high)
            for row in table.rows()
        ),
    )
    write_document(
        path=out / 'summary.json',
        document=_summary(
            config=config,
            table=table,
            fit=fit,
            runtime=runtime,
        ),
    )
    manifest.finish(out_dir=out, outputs=['pk.csv', 'summary.json'])
    return 0


def _shape_rows(nmax: int) -> list[tuple[object, ...]]:
    rows: list[tuple[object, ...]] = []
    for n in range(1, nmax + 1):
        for shape in enumerate_shapes(leaves=n):
            bound: object = ''
            ratio: object = ''
            if not shape.is_leaf:
                left, _ = shape.children()
                bound = q_recurrence_bound(shape=shape)
                ratio = normalized_ratio(k=left.leaves, n=n)
            rows.append(
                (
                    n,
                    shape.signature(),
                    linear_extensions(shape=shape),
                    pair_factor(shape=shape),
                    q_value(shape=shape),
                    bound,
                    ratio,
                ),
            )
    return rows


def cmd_combinatorics(args: argparse.Namespace) -> int:
    """Пишет таблицы форм, максимумов Q и оценки полных деревьев.

    Args:
        args: Разобранные аргументы

    Returns:
        int: Код завершения
    """
    manifest = RunManifest(
        command='combinatorics',
        config={},
        arguments={'nmax': args.nmax},
    )
    out = _out_dir(args=args)
    write_csv(
        path=out / 'combinatorics.csv',
        header=('N', 'shape', 'B', 'D', 'Q', 'bound', 'ratio'),
        rows=_shape_rows(nmax=args.nmax),
    )
    write_csv(
        path=out / 'lemma_scan.csv',
        header=('N', 'shapes', 'max_Q', 'argmax', 'ratio', 'C_N'),
        rows=(
            (
                row.n,
                row.shape_count,
                row.max_q,
                row.argmax,
                row.ratio,
                row.constant,
            )
            for row in lemma_bound_scan(n_max=args.nmax)
        ),
    )
    write_csv(
        path=out / 'envelope.csv',
        header=('depth', 'N', 'Q', 'log2_Q', 'c'),
        rows=(
            (row.depth, row.n, row.q, row.log2_q, row.implied_c)
            for row in complete_tree_envelope(depths=ENVELOPE_DEPTHS)
        ),
    )
    manifest.finish(
        out_dir=out,
        outputs=['combinatorics.csv', 'lemma_scan.csv', 'envelope.csv'],
    )
    return 0


def cmd_alpha_scan(args: argparse.Namespace) -> int:
    """Оценки и подгонки по сетке α и размерам куба.

    Args:
        args: Разобранные аргументы

    Returns:
        int: Код завершения
    """
    config = _settings(
        cls=EstimatorSettings,
        path=args.config,
        seed=args.seed,
        workers=args.workers,
    )
    manifest = RunManifest(
        command='alpha-scan',
        config=config.model_dump(mode='json'),
        seed=config.seed,
        arguments={'alphas': args.alphas, 'boxes': args.boxes},
    )
    rows = alpha_scan(base=config, alphas=args.alphas, boxes=args.boxes)
    k_max = max((max(row.table.counts, default=1) for row in rows), default=1)
    out = _out_dir(args=args)
    write_csv(
        path=out / 'alpha_scan.csv',
        header=(
            'box',
            'alpha',
            'ratio',
            'ratio_lo',
            'ratio_hi',
            *(f'p_{k}' for k in range(1, k_max + 1)),
        ),
        rows=(
            (
                row.box,
                row.alpha,
                row.fit.ratio,
                *row.fit.interval,
                *(row.table.p_hat(k=k) for k in range(1, k_max + 1)),
            )
            for row in rows
        ),
    )
    manifest.finish(out_dir=out, outputs=['alpha_scan.csv'])
    return 0
