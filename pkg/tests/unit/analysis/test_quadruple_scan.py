from HyperMet.analysis import (
    PAIRINGS,
    gromov_delta,
    ptolemaic_defect,
    scan_quadruples,
    strong_defect,
)
from HyperMet.analysis._quadruple_scan import gromov_kernel
from HyperMet.metric import build_matrix
from itertools import combinations
import numpy as np


def _brute_force_delta(d):
    best = 0.0
    for x, y, z, t in combinations(range(d.shape[0]), 4):
        sums = sorted(
            [d[x, y] + d[z, t], d[x, z] + d[y, t], d[x, t] + d[y, z]], reverse=True
        )
        best = max(best, 0.5 * (sums[0] - sums[1]))
    return best


def _random_matrix(rng, n):
    x = rng.standard_normal((n, 2))
    d = np.abs(x[:, None, 0] - x[None, :, 0]) + np.abs(x[:, None, 1] - x[None, :, 1])
    return build_matrix([f"v{i}" for i in range(n)], d)


def test_matches_brute_force(rng):
    m = _random_matrix(rng, 10)
    assert abs(gromov_delta(m, threads=1).delta_min - _brute_force_delta(m.d)) < 1e-12


def test_witness_is_ordered(rng):
    m = _random_matrix(rng, 8)
    witness = gromov_delta(m, threads=1).witness
    x, y, z, t = witness.indices
    assert x < y < z < t
    assert witness.pairing in range(len(PAIRINGS))


def test_ties_keep_smallest_quadruple():
    # every quadruple of a uniform metric has the same defect
    n = 7
    d = np.ones((n, n)) - np.eye(n)
    witness = scan_quadruples(d, gromov_kernel, threads=1)
    assert witness.indices == (0, 1, 2, 3)
    assert witness.pairing == 0


def test_parallel_equals_serial(rng):
    m = _random_matrix(rng, 30)
    for threads in (2, 4):
        assert gromov_delta(m, threads=threads) == gromov_delta(m, threads=1)
        assert ptolemaic_defect(m, threads=threads) == ptolemaic_defect(m, threads=1)
        assert strong_defect(m, 1.0, threads=threads) == strong_defect(m, 1.0, threads=1)


def test_small_blocks_equal_one_block(rng, monkeypatch):
    from HyperMet.analysis import _quadruple_scan

    m = _random_matrix(rng, 12)
    expected = gromov_delta(m, threads=1)
    monkeypatch.setattr(_quadruple_scan, "BLOCK_SIZE", 5)
    assert gromov_delta(m, threads=1) == expected
    assert gromov_delta(m, threads=3) == expected


def test_witness_labels(square):
    witness = gromov_delta(square, threads=1).witness
    assert witness.labelled(square.labels) == square.labels
