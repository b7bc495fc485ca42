"""Геометрия линейного движения: контакты и заметаемые объёмы."""

from dynamic_clusters.geometry.contact import (
    MotionSegment,
    contact_interval,
    contact_roots,
    first_contact_time,
    min_distance_on_interval,
)
from dynamic_clusters.geometry.grid import UniformGrid, all_pairs
from dynamic_clusters.geometry.vectors import Vector, as_vector, norm
from dynamic_clusters.geometry.volume import (
    CaptureVolumeBound,
    CaptureVolumeEstimate,
    ball_volume,
    capture_volume_bound,
    capture_volume_mc,
    ordered_simplex_volume,
    reachability_radius,
)

__all__ = [
    'CaptureVolumeBound',
    'CaptureVolumeEstimate',
    'MotionSegment',
    'UniformGrid',
    'Vector',
    'all_pairs',
    'as_vector',
    'ball_volume',
    'capture_volume_bound',
    'capture_volume_mc',
    'contact_interval',
    'contact_roots',
    'first_contact_time',
    'min_distance_on_interval',
    'norm',
    'ordered_simplex_volume',
    'reachability_radius',
]
