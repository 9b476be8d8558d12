"""
Metric
======

Finite metric spaces as validated, immutable distance matrices.
"""
from ..utils import getLogger

logger = getLogger(__name__)

from ._distance_matrix import (
    DistanceMatrix,
    ValidationReport,
    build_matrix,
    restrict,
    validate_entries,
    worst_triangle_excess,
)
from ._io import load_matrix, save_matrix, read_matrix_entries
