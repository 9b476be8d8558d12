"""
HyperMet API
============

Four-point analysis of finite metric spaces and the boundary-inversion metric
on sampled domains of model Ptolemaic spaces.
"""

import logging

__all__ = [
    "DistanceMatrix",
    "build_matrix",
    "restrict",
    "gromov_delta",
    "ptolemaic_defect",
    "strong_defect",
    "max_strong_epsilon",
    "rho_matrix",
    "sweep",
]
from .version import __version__

ch = logging.StreamHandler()
formatter = logging.Formatter(
    "%(levelname)s: %(asctime)s: %(filename)s:%(lineno)d -- %(message)s"
)
ch.setFormatter(formatter)
ch.setLevel(logging.WARNING)
loggers = {}
from .utils import log_to_console, log_to_file, getLogger
from .metric import DistanceMatrix, build_matrix, restrict
from .analysis import gromov_delta, ptolemaic_defect, strong_defect, max_strong_epsilon
from .domain import rho_matrix
from .sharpness import sweep

logger = getLogger(__name__)
logger.info("Imported HyperMet")
