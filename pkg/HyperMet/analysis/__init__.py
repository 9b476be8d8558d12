"""
Analysis
========

Exhaustive four-point analysis of finite metric spaces and the
rearrangement inequality used to bound the strong hyperbolicity rate.
"""
from ..utils import getLogger

logger = getLogger(__name__)

from ._quadruple_scan import PAIRINGS, QuadrupleWitness, scan_quadruples
from ._four_point import (
    LOG2,
    GromovResult,
    PtolemaicResult,
    StrongResult,
    gromov_delta,
    is_strongly_feasible,
    max_strong_epsilon,
    ptolemaic_defect,
    quadruple_ptolemaic_defect,
    strong_defect,
    strong_to_gromov,
)
from ._rearrangement import (
    CASES,
    SYMMETRIES,
    equality_case,
    equality_flags,
    four_product_bound,
    is_equality,
    rearrangement_sides,
    shest_sides,
)
