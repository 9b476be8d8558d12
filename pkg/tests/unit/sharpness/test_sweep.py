from HyperMet.analysis import LOG2
from HyperMet.geometry import Euclidean, Hyperbolic2
from HyperMet.sharpness import (
    SWEEP_COLUMNS,
    SharpnessConfig,
    euclidean_lambda_oracle,
    sweep,
    sweep_frame,
    sweep_points_frame,
    verify_bounds,
    verify_maximizer_claim,
)
from HyperMet.utils import HyperMetJSONEncoder
import json
import math
import numpy as np
import pytest


@pytest.fixture
def euclidean_rows():
    config = SharpnessConfig(Euclidean(2), 1.0, [0.5, 0.1, 0.05, 1e-3])
    return sweep(config, threads=1)


def test_lambdas_match_closed_form(euclidean_rows):
    for row in euclidean_rows:
        oracle = euclidean_lambda_oracle(row.theta)
        for key, value in oracle.items():
            assert row.lambdas[key] == pytest.approx(value, rel=1e-10)


def test_defect_below_log2(euclidean_rows):
    for row in euclidean_rows:
        assert row.defect_delta < LOG2
        expected = LOG2 - math.log1p(math.tan(0.5 * row.theta))
        assert row.defect_delta == pytest.approx(expected, abs=1e-10)
        assert row.ratio > 0


def test_limit_at_small_theta(euclidean_rows):
    last = euclidean_rows[-1]
    assert last.theta == 1e-3
    assert abs(last.ratio - 1.0) < 1e-2
    assert abs(last.defect_delta - LOG2) < 1e-2
    assert 1.0 - 1e-9 <= last.epsilon_max <= 1.01


def test_epsilon_max_at_least_one(euclidean_rows):
    for row in euclidean_rows:
        assert row.epsilon_max >= 1.0 - 1e-9


def test_residuals_closed_form(euclidean_rows):
    for row in euclidean_rows:
        theta = row.theta
        # d(x+, y+) = 2 cos theta exactly, d(x-, y+) = 2
        assert abs(row.distances["xp_yp"] - 2.0 * math.cos(theta)) < 1e-14
        assert abs(row.distances["xm_yp"] - 2.0) < 1e-14
        assert row.residuals["sv1"] == pytest.approx(2.0 * (1.0 - math.cos(theta)), abs=1e-14)
        expected = 2.0 * math.sin(0.5 * theta) * (1.0 - math.cos(0.5 * theta))
        assert row.residuals["sv2"] == pytest.approx(expected, abs=1e-14)
        assert row.residuals["rii"] == pytest.approx(2.0 - 2.0 * math.cos(0.5 * theta), abs=1e-14)
        assert row.residuals["fc"] <= 1e-15


def test_verify_bounds(euclidean_rows):
    row = euclidean_rows[-1]
    checks = verify_bounds(row, 1.0, 1.0)
    assert set(checks) == {"rii", "sv1", "sv2", "fc"}
    assert all(check.ok for check in checks.values())
    failing = verify_bounds(euclidean_rows[0], 1e-6, 1e-6)
    assert not failing["sv1"].ok


def test_maximizer_claim_vacuous(euclidean_rows):
    config = SharpnessConfig(Euclidean(2), 1.0, [0.5, 0.1, 0.05, 1e-3])
    for row in euclidean_rows:
        report = verify_maximizer_claim(config, row)
        assert report.ok
        assert report.worst is None
        assert row.maximizer_ok


def test_maximizer_claim_with_extra_point():
    config = SharpnessConfig(Euclidean(2), 1.0, [0.05], [[11.0, 0.0]], 10.0)
    (row,) = sweep(config, threads=1)
    report = verify_maximizer_claim(config, row)
    assert report.ok
    assert report.margin > 0
    assert report.five_sixths_margin > 0
    assert report.one_ninth_margin > 0
    assert report.eta_bound_ok


def test_hyperbolic_rows_stay_below_log2():
    config = SharpnessConfig.default(Hyperbolic2(1.0), theta_max=0.5, steps=6)
    rows = sweep(config, threads=1)
    assert len(rows) == 6
    for row in rows:
        assert row.defect_delta <= LOG2 + 1e-9
        assert row.epsilon_max >= 1.0 - 1e-9
        assert row.residuals["fc"] < 1e-12


def test_parallel_sweep_equals_serial():
    config = SharpnessConfig(Euclidean(2), 1.0, [0.4, 0.2, 0.1, 0.05])
    serial = sweep_frame(sweep(config, threads=1))
    parallel = sweep_frame(sweep(config, threads=3))
    assert serial.equals(parallel)


def test_frames(euclidean_rows):
    frame = sweep_frame(euclidean_rows)
    assert list(frame.columns) == SWEEP_COLUMNS
    assert len(frame) == 4
    points = sweep_points_frame(euclidean_rows)
    assert len(points) == 4 * 8
    assert list(points.columns) == ["theta", "point", "x1", "x2"]


def test_row_serialises(euclidean_rows):
    payload = json.loads(json.dumps(euclidean_rows[0], cls=HyperMetJSONEncoder))
    assert payload["theta"] == 0.5
    assert payload["maximizer"]["ok"] is True
    assert payload["maximizer"]["margin"] == "inf"
