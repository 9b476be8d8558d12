from HyperMet.analysis import (
    LOG2,
    gromov_delta,
    is_strongly_feasible,
    max_strong_epsilon,
    ptolemaic_defect,
    quadruple_ptolemaic_defect,
    strong_defect,
    strong_to_gromov,
)
from HyperMet.metric import build_matrix
from HyperMet.utils.exceptions import BracketDoesNotStraddle, NonPositiveEpsilon
import math
import numpy as np
import pytest


def _random_matrix(rng, n):
    x = rng.standard_normal((n, 3))
    d = np.linalg.norm(x[:, None, :] - x[None, :, :], axis=-1)
    return build_matrix([f"v{i}" for i in range(n)], d)


def test_line(line):
    assert ptolemaic_defect(line, threads=1).defect == 0.0
    assert gromov_delta(line, threads=1).delta_min == 0.0
    assert max_strong_epsilon(line, threads=1) == math.inf


def test_great_circle(great_circle):
    result = ptolemaic_defect(great_circle, threads=1)
    assert abs(result.defect - 0.5 * math.pi ** 2) < 1e-9
    # the diagonals g0 g2 and g1 g3 pair up
    assert result.witness.indices == (0, 1, 2, 3)
    assert result.witness.pairing == 1


def test_square(square):
    assert abs(ptolemaic_defect(square, threads=1).defect) < 1e-12
    assert abs(gromov_delta(square, threads=1).delta_min - (math.sqrt(2) - 1)) < 1e-12
    epsilon = max_strong_epsilon(square, threads=1)
    assert abs(epsilon - LOG2 / (math.sqrt(2) - 1)) < 1e-8


@pytest.mark.parametrize("s", [1e-3, 1e3, 1e7, 1e12])
def test_rate_scales_inversely(square, s):
    epsilon = max_strong_epsilon(square.scaled(s), threads=1)
    assert epsilon == pytest.approx(LOG2 / (s * (math.sqrt(2) - 1)), rel=1e-8)


def test_fewer_than_four_points(square):
    m = square.restrict([0, 1, 2])
    assert gromov_delta(m).delta_min == 0.0
    assert gromov_delta(m).witness is None
    assert ptolemaic_defect(m).defect == -math.inf
    assert strong_defect(m, 1.0).feasible


def test_strong_defect_line(line):
    result = strong_defect(line, 1.0, threads=1)
    assert abs(result.max_defect - (1.0 - 1.0 - math.exp(-1.0))) < 1e-12
    assert result.feasible


def test_strong_defect_small_rate(random_matrix):
    result = strong_defect(random_matrix, 1e-9, threads=1)
    assert abs(result.max_defect + 1.0) < 1e-6


def test_boundary_case_four_cycle(four_cycle):
    result = strong_defect(four_cycle, LOG2, threads=1)
    assert abs(result.max_defect) < 1e-15
    assert abs(max_strong_epsilon(four_cycle, threads=1) - LOG2) < 1e-9


def test_non_positive_epsilon(square):
    with pytest.raises(NonPositiveEpsilon):
        strong_defect(square, 0.0)
    with pytest.raises(NonPositiveEpsilon):
        strong_to_gromov(-1.0)


def test_strong_to_gromov():
    assert strong_to_gromov(1.0) == LOG2
    assert abs(strong_to_gromov(2.0) - 0.5 * LOG2) < 1e-15
    assert abs(strong_to_gromov(2.0 * LOG2) - 0.5) < 1e-15


def test_bracket_must_straddle(square):
    with pytest.raises(BracketDoesNotStraddle):
        max_strong_epsilon(square, eps_lo=1e-3, eps_hi=1.0, threads=1)
    with pytest.raises(BracketDoesNotStraddle):
        max_strong_epsilon(square, eps_lo=2.0, eps_hi=3.0, threads=1)


def test_feasibility_is_monotone(rng):
    for _ in range(5):
        m = _random_matrix(rng, 7)
        epsilon = max_strong_epsilon(m, threads=1)
        assert is_strongly_feasible(m, 0.5 * epsilon, threads=1)
        assert is_strongly_feasible(m, epsilon - 1e-8, threads=1)
        assert not is_strongly_feasible(m, epsilon + 1e-8, threads=1)


def test_conversion(rng):
    for _ in range(10):
        m = _random_matrix(rng, 6)
        delta = gromov_delta(m, threads=1).delta_min
        for epsilon in (0.5, 1.0, 2.0, 4.0):
            if is_strongly_feasible(m, epsilon, threads=1):
                assert delta <= strong_to_gromov(epsilon) + 1e-9


def test_relabel_and_scale(rng):
    m = _random_matrix(rng, 8)
    order = rng.permutation(m.size)
    shuffled = m.permuted(order)
    assert abs(gromov_delta(shuffled).delta_min - gromov_delta(m).delta_min) < 1e-12
    assert abs(ptolemaic_defect(shuffled).defect - ptolemaic_defect(m).defect) < 1e-12
    s = 3.5
    scaled = m.scaled(s)
    assert abs(gromov_delta(scaled).delta_min - s * gromov_delta(m).delta_min) < 1e-12
    for epsilon in (0.5, 1.0, 3.0):
        assert is_strongly_feasible(m, epsilon) == is_strongly_feasible(scaled, epsilon / s)


def test_quadruple_ptolemaic_defect_batches():
    values = quadruple_ptolemaic_defect([1.0, 1.0], [1.0, 1.0], [2.0, 1.0], [2.0, 1.0], [3.0, 1.0], [1.0, 1.0])
    # products 1, 4, 3 then 1, 1, 1
    assert values[0] == 0.0
    assert values[1] == -1.0
