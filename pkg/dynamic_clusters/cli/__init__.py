"""Командная строка: подкоманды, манифест запуска, документы вывода."""

from dynamic_clusters.cli.commands import (
    ENVELOPE_DEPTHS,
    cmd_alpha_scan,
    cmd_clusters,
    cmd_combinatorics,
    cmd_estimate_pk,
    cmd_simulate,
    cmd_tree,
)
from dynamic_clusters.cli.convert import clusters_document, tree_document
from dynamic_clusters.cli.manifest import (
    MANIFEST_NAME,
    RunManifest,
    package_version,
)

__all__ = [
    'ENVELOPE_DEPTHS',
    'MANIFEST_NAME',
    'RunManifest',
    'clusters_document',
    'cmd_alpha_scan',
    'cmd_clusters',
    'cmd_combinatorics',
    'cmd_estimate_pk',
    'cmd_simulate',
    'cmd_tree',
    'package_version',
    'tree_document',
]
