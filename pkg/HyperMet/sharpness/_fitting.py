import math
from typing import List, NamedTuple

import numpy as np

from ..utils import getLogger

logger = getLogger(__name__)


class FittedBounds(NamedTuple):
    sigma: float
    tau_sv1: float
    tau_sv2: float

    @property
    def tau(self):
        return max(self.tau_sv1, self.tau_sv2)


def _tail(rows, name, theta_tail, floor):
    thetas = np.array([row.theta for row in rows])
    residuals = np.array([row.residuals[name] for row in rows])
    scale = max((row.r for row in rows), default=1.0)
    keep = (thetas <= theta_tail) & (residuals > floor * scale)
    return thetas[keep], residuals[keep]


def _through_origin(x, y):
    """Least squares slope of y = c x"""
    if x.size == 0:
        return math.nan
    return float(np.dot(x, y) / np.dot(x, x))


def fit_bound_constants(rows, theta_tail=0.1, floor=1e-10) -> FittedBounds:
    """Fit sigma in |d - 2r| <= sigma theta and tau in the second order bounds

    Least squares through the origin on the rows with theta <= theta_tail
    whose residual is above floor * r, below which rounding dominates.

    Returns
    -------
    FittedBounds
        nan where no row qualifies
    """
    thetas, residuals = _tail(rows, "rii", theta_tail, floor)
    sigma = _through_origin(thetas, residuals)
    thetas, residuals = _tail(rows, "sv1", theta_tail, floor)
    tau_sv1 = _through_origin(thetas ** 2, residuals)
    thetas, residuals = _tail(rows, "sv2", theta_tail, floor)
    tau_sv2 = _through_origin(thetas ** 2, residuals)
    logger.info(f"Fitted sigma {sigma}, tau {tau_sv1} (sv1) {tau_sv2} (sv2)")
    return FittedBounds(sigma, tau_sv1, tau_sv2)


def fit_order(thetas, residuals) -> float:
    """Slope of log(residual) against log(theta), the empirical order of a residual"""
    thetas = np.asarray(thetas, dtype=float)
    residuals = np.asarray(residuals, dtype=float)
    keep = (thetas > 0) & (residuals > 0)
    if np.count_nonzero(keep) < 2:
        return math.nan
    slope, _ = np.polyfit(np.log(thetas[keep]), np.log(residuals[keep]), 1)
    return float(slope)


def residual_orders(rows, theta_tail=0.1, floor=1e-10):
    """fit_order of each bound residual over the grid tail"""
    orders = {}
    for name in ("rii", "sv1", "sv2"):
        thetas, residuals = _tail(rows, name, theta_tail, floor)
        orders[name] = fit_order(thetas, residuals)
    return orders


def euclidean_lambda_oracle(theta, r=1.0):
    """Closed-form lambda values of the Euclidean family with boundary {p, q}

    Returns
    -------
    dict
        'xx' and 'yy': cot(theta / 2) / r, 'pp' and 'mm': cot(theta) / r,
        'pm' and 'mp': 1 / (r sin(theta))
    """
    half = 1.0 / (r * math.tan(0.5 * theta))
    same = 1.0 / (r * math.tan(theta))
    cross = 1.0 / (r * math.sin(theta))
    return {"xx": half, "yy": half, "pp": same, "mm": same, "pm": cross, "mp": cross}


def defect_gap(rows: List) -> np.ndarray:
    """log 2 - defect_delta for every row"""
    return np.array([math.log(2.0) - row.defect_delta for row in rows])
