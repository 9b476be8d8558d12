import math

import numpy as np
import pytest

from HyperMet.analysis import LOG2
from HyperMet.geometry import Euclidean, Hyperbolic2
from HyperMet.sharpness import (
    SharpnessConfig,
    defect_gap,
    euclidean_lambda_oracle,
    fit_order,
    geometric_grid,
    residual_orders,
    sweep,
    verify_maximizer_claim,
)


@pytest.fixture(scope="module")
def euclidean_rows():
    grid = sorted(set(geometric_grid(0.5, 21)) | {1e-3}, reverse=True)
    return sweep(SharpnessConfig(Euclidean(2), 1.0, grid), threads=1)


def test_defect_approaches_log2(euclidean_rows):
    last = euclidean_rows[-1]
    assert last.theta == pytest.approx(0.5 * 2.0 ** -20)
    assert LOG2 - last.defect_delta < 1e-6
    assert all(row.defect_delta < LOG2 for row in euclidean_rows)
    assert np.all(np.diff([row.defect_delta for row in euclidean_rows]) > 0)


def test_lambdas_follow_the_closed_form(euclidean_rows):
    for row in euclidean_rows:
        oracle = euclidean_lambda_oracle(row.theta)
        for key, value in oracle.items():
            assert row.lambdas[key] == pytest.approx(value, rel=1e-9)
        expected = LOG2 - math.log1p(math.tan(0.5 * row.theta))
        assert row.defect_delta == pytest.approx(expected, abs=1e-9)


def test_strong_rate_limit(euclidean_rows):
    row = next(row for row in euclidean_rows if row.theta == 1e-3)
    assert 1.0 - 1e-9 <= row.epsilon_max <= 1.01
    assert all(row.epsilon_max >= 1.0 - 1e-9 for row in euclidean_rows)


def test_diagonal_pairing_is_largest(euclidean_rows):
    near = [row for row in euclidean_rows if row.theta <= 0.1]
    assert len(near) > 10
    # pairing 0 is x_minus x_plus | y_minus y_plus
    assert all(row.gromov_pairing == 0 for row in near)


def test_gap_is_first_order(euclidean_rows):
    thetas = np.array([row.theta for row in euclidean_rows])
    assert fit_order(thetas, defect_gap(euclidean_rows)) == pytest.approx(1.0, abs=0.1)


def test_residual_orders(euclidean_rows):
    orders = residual_orders(euclidean_rows)
    assert orders["rii"] >= 0.8
    assert orders["sv1"] >= 1.8
    assert orders["sv2"] >= 1.8


@pytest.mark.parametrize("space", [Euclidean(2), Hyperbolic2(1.0)], ids=str)
def test_maximizer_claim_near_the_geodesic(space):
    config = SharpnessConfig.default(space, 1.0, 0.1, 12)
    rows = sweep(config, threads=1)
    for row in rows:
        assert row.maximizer.ok
        assert row.maximizer.margin > 0
        assert verify_maximizer_claim(config, row) == row.maximizer
        assert row.defect_delta <= LOG2 + 1e-9
        assert row.gromov_pairing == 0


def test_hyperbolic_limit():
    rows = sweep(SharpnessConfig.default(Hyperbolic2(1.0), 1.0, 0.5, 16), threads=1)
    assert LOG2 - rows[-1].defect_delta < 1e-3
    assert all(row.epsilon_max >= 1.0 - 1e-9 for row in rows)
