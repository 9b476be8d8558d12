"""
Domain
======

Sampled domains of a model space, the supremal boundary inversion lambda
and the metric rho = log(1 + lambda) on the interior samples.
"""
from ..utils import getLogger

logger = getLogger(__name__)

from ._domain_sample import DomainSample
from ._inversion import (
    RhoMatrix,
    boundary_separation,
    lambda_matrix,
    lambda_sup,
    rho,
    rho_matrix,
    sp_matrix,
    sp_metric,
    zx_prior_bound,
)
from ._io import load_domain_sample, read_points, write_points
