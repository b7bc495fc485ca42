"""Точка входа командной строки dynamic-clusters."""

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from dynamic_clusters.cli.commands import (
    cmd_alpha_scan,
    cmd_clusters,
    cmd_combinatorics,
    cmd_estimate_pk,
    cmd_simulate,
    cmd_tree,
)
from dynamic_clusters.exceptions.base import BaseAppException
from dynamic_clusters.logging.logger import (
    get_logger,
    set_level,
    shutdown_logging,
)

__all__ = [
    'COMMANDS',
    'build_parser',
    'main',
]

logger = get_logger(name=__name__)

COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    'simulate': cmd_simulate,
    'clusters': cmd_clusters,
    'tree': cmd_tree,
    'estimate-pk': cmd_estimate_pk,
    'combinatorics': cmd_combinatorics,
    'alpha-scan': cmd_alpha_scan,
}


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f'ожидалось целое >= 1: {value}')
    return number


def build_parser() -> argparse.ArgumentParser:
    """Собирает парсер с подкомандами.

    Returns:
        argparse.ArgumentParser: Парсер аргументов
    """
    parser = argparse.ArgumentParser(
        prog='dynamic-clusters',
        description='Динамические кластеры частиц и оценка P_k.',
    )
    parser.add_argument(
        '--log-level',
        default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='Уровень журнала в stderr',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--out',
        type=Path,
        required=True,
        help='Каталог вывода',
    )

    simulate = subparsers.add_parser(
        'simulate',
        parents=[common],
        help='Симуляция одной реплики',
    )
    simulate.add_argument('--config', type=Path, required=True)
    simulate.add_argument('--seed', type=int, default=None)

    for name, description in (
        ('clusters', 'Граф взаимодействий и кластеры'),
        ('tree', 'Деревья подкластеров'),
    ):
        command = subparsers.add_parser(
            name,
            parents=[common],
            help=description,
        )
        command.add_argument(
            '--input',
            type=Path,
            required=True,
            help='Файл trajectories.jsonl',
        )
        command.add_argument(
            '--config',
            type=Path,
            default=None,
            help='Конфигурация; по умолчанию manifest.json рядом с входом',
        )

    estimate = subparsers.add_parser(
        'estimate-pk',
        parents=[common],
        help='Оценка P_k методом Монте-Карло',
    )
    alpha_scan = subparsers.add_parser(
        'alpha-scan',
        parents=[common],
        help='Оценки по сетке α',
    )
    for command in (estimate, alpha_scan):
        command.add_argument('--config', type=Path, required=True)
        command.add_argument('--seed', type=int, default=None)
        command.add_argument('--workers', type=_positive_int, default=None)
    alpha_scan.add_argument('--alphas', type=float, nargs='+', required=True)
    alpha_scan.add_argument('--boxes', type=float, nargs='+', default=None)

    combinatorics = subparsers.add_parser(
        'combinatorics',
        parents=[common],
        help='Точные таблицы по формам деревьев',
    )
    combinatorics.add_argument('--nmax', type=_positive_int, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Разбирает аргументы и выполняет подкоманду.

    Args:
        argv: Аргументы без имени программы

    Returns:
        int: Код завершения
    """
    args = build_parser().parse_args(args=argv)
    set_level(level=args.log_level)
    try:
        return COMMANDS[args.command](args)
    except BaseAppException as exc:
        logger.error(
            msg='Команда завершилась с ошибкой',
            extra={
                'context': {
                    'command': args.command,
                    'exit_code': exc.exit_code,
                    'detail': exc.detail,
                },
            },
        )
        print(f'dynamic-clusters: ошибка: {exc.detail}', file=sys.stderr)
        return exc.exit_code
    finally:
        shutdown_logging()


if __name__ == '__main__':
    sys.exit(main())
