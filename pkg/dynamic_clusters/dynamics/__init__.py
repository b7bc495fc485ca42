"""Динамика частиц: свободный пролёт и скачки типов и скоростей."""

from dynamic_clusters.dynamics.initial import sample_initial_states
from dynamic_clusters.dynamics.kernels import (
    ConstantRateKernel,
    JumpKernel,
    build_kernel,
    uniform_ball,
)
from dynamic_clusters.dynamics.models import (
    Event,
    EventKind,
    EventLog,
    ParticleState,
    Trajectory,
    TrajectoryRecord,
)
from dynamic_clusters.dynamics.scheduler import (
    ActivePair,
    JumpCandidate,
    next_jump_candidate,
)
from dynamic_clusters.dynamics.simulator import (
    SimulationResult,
    candidate_pairs,
    contact_intervals,
    simulate_replica,
)

__all__ = [
    'ActivePair',
    'ConstantRateKernel',
    'Event',
    'EventKind',
    'EventLog',
    'JumpCandidate',
    'JumpKernel',
    'ParticleState',
    'SimulationResult',
    'Trajectory',
    'TrajectoryRecord',
    'build_kernel',
    'candidate_pairs',
    'contact_intervals',
    'next_jump_candidate',
    'sample_initial_states',
    'simulate_replica',
    'uniform_ball',
]
