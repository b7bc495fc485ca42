"""Фикстуры для тестов dynamic_clusters."""

from pathlib import Path

import numpy as np
import pytest

from dynamic_clusters.dynamics.models import Trajectory
from dynamic_clusters.repository.records import TrajectoryRepository
from dynamic_clusters.settings.estimator import EstimatorSettings
from dynamic_clusters.settings.simulation import SimulationSettings
from tests.helpers import straight

CONFIG_TEXT = '''
d = 2
L = 12.0
tau = 1.0
r = 0.5
v0 = 1.0
alpha = 0.1
replicas = 40
seed = 7
'''


@pytest.fixture(scope='function')
def rng() -> np.random.Generator:
    """Фикстура генератора с фиксированным зерном."""
    return np.random.default_rng(20240601)


@pytest.fixture(scope='function')
def simulation_settings() -> SimulationSettings:
    """Фикстура небольших настроек симуляции."""
    return SimulationSettings(
        d=2,
        box=20.0,
        tau=1.0,
        r=0.5,
        v0=1.0,
        alpha=0.1,
        seed=3,
    )


@pytest.fixture(scope='function')
def estimator_settings() -> EstimatorSettings:
    """Фикстура настроек оценки на несколько десятков реплик."""
    return EstimatorSettings(
        d=2,
        box=12.0,
        tau=1.0,
        r=0.5,
        v0=1.0,
        alpha=0.1,
        replicas=40,
        seed=7,
        bootstrap=0,
    )


@pytest.fixture(scope='function')
def head_on_pair() -> list[Trajectory]:
    """Встречная пара: контакт при пороге 2 на [4, 6]."""
    return [
        straight(particle_id=1, x=(0.0, 0.0), v=(1.0, 0.0), tau=10.0),
        straight(particle_id=2, x=(10.0, 0.0), v=(-1.0, 0.0), tau=10.0),
    ]


@pytest.fixture(scope='function')
def config_file(tmp_path: Path) -> Path:
    """Фикстура конфигурационного файла TOML."""
    path = tmp_path / 'config.toml'
    path.write_text(CONFIG_TEXT, encoding='utf-8')
    return path


@pytest.fixture(scope='function')
def simulation_config(tmp_path: Path) -> Path:
    """Фикстура конфигурации симуляции без ключей оценки."""
    path = tmp_path / 'simulation.toml'
    path.write_text(
        '\n'.join(
            line
            for line in CONFIG_TEXT.splitlines()
            if not line.startswith('replicas')
        ),
        encoding='utf-8',
    )
    return path


@pytest.fixture(scope='function')
def head_on_input(tmp_path: Path, head_on_pair: list[Trajectory]) -> Path:
    """Фикстура trajectories.jsonl со встречной парой и конфигурацией."""
    directory = tmp_path / 'head_on'
    directory.mkdir()
    (directory / 'config.toml').write_text(
        'd = 2\nL = 20.0\ntau = 10.0\nr = 1.0\nv0 = 1.0\nalpha = 0.1\n',
        encoding='utf-8',
    )
    path = directory / 'trajectories.jsonl'
    TrajectoryRepository(path=path, horizon=10.0).write_all(
        items=head_on_pair,
    )
    return path
