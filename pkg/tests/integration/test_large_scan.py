import numpy as np

from HyperMet.analysis import gromov_delta, ptolemaic_defect, strong_defect
from HyperMet.datasets import random_domain_sample
from HyperMet.domain import rho_matrix
from HyperMet.geometry import Euclidean


def test_parallel_scan_matches_serial():
    rng = np.random.default_rng(21)
    m = rho_matrix(random_domain_sample(Euclidean(2), 120, 8, rng))
    assert gromov_delta(m, threads=1) == gromov_delta(m, threads=4)
    assert ptolemaic_defect(m, threads=1) == ptolemaic_defect(m, threads=4)
    serial = strong_defect(m, 1.0, threads=1)
    assert serial == strong_defect(m, 1.0, threads=4)
    assert serial.feasible
