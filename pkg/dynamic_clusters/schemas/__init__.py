"""Схемы файловых записей и отчётов."""

from dynamic_clusters.schemas.base import CustomBaseModel
from dynamic_clusters.schemas.records import (
    ClustersSchema,
    EdgeSchema,
    EventSchema,
    ParticleStateSchema,
    SegmentSchema,
    TrajectorySchema,
    TreeNodeSchema,
    TreeSchema,
)
from dynamic_clusters.schemas.reports import (
    EstimateSummarySchema,
    ManifestSchema,
    OutputFileSchema,
)

__all__ = [
    'ClustersSchema',
    'CustomBaseModel',
    'EdgeSchema',
    'EstimateSummarySchema',
    'EventSchema',
    'ManifestSchema',
    'OutputFileSchema',
    'ParticleStateSchema',
    'SegmentSchema',
    'TrajectorySchema',
    'TreeNodeSchema',
    'TreeSchema',
]
