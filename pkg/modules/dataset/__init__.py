"""
Embedded field tables: ingestion, export, verification harness, statistics
"""

from .models import COLUMNS, FieldRecord, VerificationCheck, VerificationReport
from .loader import EMBEDDED_DATASET, export_dataset, load_dataset, parse_dataset
from .annotations import PolyaAnnotation, annotations_by_radicand, polya_annotations
from .prototypes import prototype_candidates, prototype_key
from .verifier import (
    ROW_CHECKS,
    annotation_checks,
    conductor_sweep_checks,
    gamma_epsilon_notes,
    verify_dataset,
)
from .statistics import (
    CATALOG_COLUMNS,
    FREQUENCY_COLUMNS,
    catalog,
    frequency_table,
    range_counts,
    type_frequencies,
)

__all__ = [
    'COLUMNS',
    'FieldRecord',
    'VerificationCheck',
    'VerificationReport',
    'EMBEDDED_DATASET',
    'export_dataset',
    'load_dataset',
    'parse_dataset',
    'PolyaAnnotation',
    'annotations_by_radicand',
    'polya_annotations',
    'prototype_candidates',
    'prototype_key',
    'ROW_CHECKS',
    'annotation_checks',
    'conductor_sweep_checks',
    'gamma_epsilon_notes',
    'verify_dataset',
    'CATALOG_COLUMNS',
    'FREQUENCY_COLUMNS',
    'catalog',
    'frequency_table',
    'range_counts',
    'type_frequencies'
]
