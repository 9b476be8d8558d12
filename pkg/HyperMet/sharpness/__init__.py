"""
Sharpness
=========

The four point family x+-, y+- near a boundary geodesic pq, swept over a
decreasing grid of angles, showing that the rho metric needs the Gromov
parameter log 2 and no smaller.
"""
from ..utils import getLogger

logger = getLogger(__name__)

from ._construction import (
    POINT_NAMES,
    Configuration,
    build_configuration,
    check_theta,
    eta,
)
from ._config import SharpnessConfig, default_extra_boundary, geometric_grid
from ._sweep import (
    SWEEP_COLUMNS,
    BoundCheck,
    MaximizerReport,
    SweepRow,
    sweep,
    sweep_frame,
    sweep_points_frame,
    verify_bounds,
    verify_maximizer_claim,
)
from ._fitting import (
    FittedBounds,
    defect_gap,
    euclidean_lambda_oracle,
    fit_bound_constants,
    fit_order,
    residual_orders,
)
