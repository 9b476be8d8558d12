import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional

import pandas as pd
from tqdm.auto import tqdm

from ..analysis import gromov_delta, max_strong_epsilon
from ..domain import DomainSample, lambda_matrix, rho_matrix
from ..utils import getLogger, HyperMetConfig
from ._config import SharpnessConfig
from ._construction import POINT_NAMES, Configuration, build_configuration, eta

logger = getLogger(__name__)

QUADRUPLE_LABELS = ("x_minus", "x_plus", "y_minus", "y_plus")

SWEEP_COLUMNS = [
    "theta",
    "lambda_xx",
    "lambda_yy",
    "lambda_xy_pp",
    "lambda_xy_pm",
    "ratio",
    "defect_delta",
    "epsilon_max",
    "rii_resid",
    "sv1_resid",
    "sv2_resid",
    "fc_resid",
    "maximizer_ok",
]


@dataclass(frozen=True)
class MaximizerReport:
    """Whether p or q realise every boundary maximum, with the margins of the supporting inequalities

    Margins are relative: positive means the inequality holds.
    """

    ok: bool
    margin: float
    worst: Optional[tuple]
    five_sixths_margin: float
    one_ninth_margin: float
    eta: float
    eta_bound_ok: bool

    def __tojson__(self):
        return {
            "ok": self.ok,
            "margin": self.margin,
            "worst": list(self.worst) if self.worst is not None else None,
            "five_sixths_margin": self.five_sixths_margin,
            "one_ninth_margin": self.one_ninth_margin,
            "eta": self.eta,
            "eta_bound_ok": self.eta_bound_ok,
        }


class BoundCheck(NamedTuple):
    residual: float
    limit: float
    ok: bool


@dataclass
class SweepRow:
    """One angle of the sharpness sweep"""

    theta: float
    r: float
    points: Configuration
    distances: Dict[str, float]
    lambdas: Dict[str, float]
    ratio: float
    defect_delta: float
    epsilon_max: float
    gromov_pairing: int
    residuals: Dict[str, float]
    maximizer: MaximizerReport

    @property
    def lambda_xx(self):
        return self.lambdas["xx"]

    @property
    def lambda_yy(self):
        return self.lambdas["yy"]

    @property
    def lambda_xy_pp(self):
        return self.lambdas["pp"]

    @property
    def lambda_xy_pm(self):
        return self.lambdas["pm"]

    @property
    def maximizer_ok(self):
        return self.maximizer.ok

    def record(self):
        """The row as the flat mapping written to the sweep table"""
        return {
            "theta": self.theta,
            "lambda_xx": self.lambda_xx,
            "lambda_yy": self.lambda_yy,
            "lambda_xy_pp": self.lambda_xy_pp,
            "lambda_xy_pm": self.lambda_xy_pm,
            "ratio": self.ratio,
            "defect_delta": self.defect_delta,
            "epsilon_max": self.epsilon_max,
            "rii_resid": self.residuals["rii"],
            "sv1_resid": self.residuals["sv1"],
            "sv2_resid": self.residuals["sv2"],
            "fc_resid": self.residuals["fc"],
            "maximizer_ok": self.maximizer_ok,
        }

    def __tojson__(self):
        payload = self.record()
        payload["lambdas"] = self.lambdas
        payload["distances"] = self.distances
        payload["gromov_pairing"] = self.gromov_pairing
        payload["maximizer"] = self.maximizer
        return payload


def _distances(space, c: Configuration):
    d = space.distance
    return {
        "xm_xp": d(c.x_minus, c.x_plus),
        "ym_yp": d(c.y_minus, c.y_plus),
        "xm_ym": d(c.x_minus, c.y_minus),
        "xp_yp": d(c.x_plus, c.y_plus),
        "xm_yp": d(c.x_minus, c.y_plus),
        "xp_ym": d(c.x_plus, c.y_minus),
        "xm_p": d(c.x_minus, c.p),
        "xp_p": d(c.x_plus, c.p),
        "ym_q": d(c.y_minus, c.q),
        "yp_q": d(c.y_plus, c.q),
        "xm_q": d(c.x_minus, c.q),
        "xp_q": d(c.x_plus, c.q),
        "ym_p": d(c.y_minus, c.p),
        "yp_p": d(c.y_plus, c.p),
    }


def _residuals(d, r, theta):
    two_r = 2.0 * r
    chord = two_r * math.cos(theta)
    half = r * math.sin(theta)
    return {
        "rii": max(abs(d[k] - two_r) for k in ("xm_q", "xp_q", "ym_p", "yp_p")),
        "sv1": max(abs(d[k] - chord) for k in ("xm_ym", "xp_yp", "xm_yp", "xp_ym")),
        "sv2": max(abs(d[k] - half) for k in ("xm_p", "xp_p", "ym_q", "yp_q")),
        "fc": max(abs(d[k] - 2.0 * half) for k in ("xm_xp", "ym_yp")),
    }


def verify_bounds(row: SweepRow, sigma_hat: float, tau_hat: float) -> Dict[str, BoundCheck]:
    """Compare the residuals of a row with sigma_hat theta and tau_hat theta**2

    Parameters
    ----------
    row : SweepRow
    sigma_hat : float
        constant of the first order bound on d(x+-, q) and d(y+-, p)
    tau_hat : float
        constant of the second order bounds

    Returns
    -------
    dict
        'rii', 'sv1', 'sv2' and 'fc' to BoundCheck; the fc limit is the
        floating point level 1e-12 * 2r
    """
    theta = row.theta
    limits = {
        "rii": sigma_hat * theta,
        "sv1": tau_hat * theta ** 2,
        "sv2": tau_hat * theta ** 2,
        "fc": 1e-12 * 2.0 * row.r,
    }
    return {
        name: BoundCheck(row.residuals[name], limit, row.residuals[name] <= limit)
        for name, limit in limits.items()
    }


def verify_maximizer_claim(config: SharpnessConfig, row: SweepRow) -> MaximizerReport:
    """Check that p or q realise lambda for every pair of x+-, y+-

    For each extra boundary point w the report also carries the smallest
    relative margin of

        d(x, p) d(y, p) < 5/6 d(x, w) d(y, w)      x in x+-, y in y+-
        d(x-, p) d(x+, p) < 1/9 d(x-, w) d(x+, w)
        d(y-, q) d(y+, q) < 1/9 d(y-, w) d(y+, w)

    With no extra boundary point the claim is vacuous.
    """
    return _claim(config, row.points)


def _claim(config: SharpnessConfig, c: Configuration) -> MaximizerReport:
    space = config.space
    e = eta(space, c)
    eta_ok = e < min(0.5 * config.r, config.R / 3.0)
    if config.extra_boundary.shape[0] == 0:
        return MaximizerReport(True, math.inf, None, math.inf, math.inf, e, eta_ok)
    named = dict(zip(QUADRUPLE_LABELS, c.quadruple))
    to_p = {k: space.distance(v, c.p) for k, v in named.items()}
    to_q = {k: space.distance(v, c.q) for k, v in named.items()}
    margin = math.inf
    worst = None
    five_sixths = math.inf
    one_ninth = math.inf
    for index, w in enumerate(config.extra_boundary):
        to_w = {k: space.distance(v, w) for k, v in named.items()}
        for a, b in combinations(QUADRUPLE_LABELS, 2):
            at_pq = max(1.0 / (to_p[a] * to_p[b]), 1.0 / (to_q[a] * to_q[b]))
            at_w = 1.0 / (to_w[a] * to_w[b])
            # the common factor d(a, b) cancels
            m = (at_pq - at_w) / at_pq
            if m < margin:
                margin = m
                worst = (a, b, f"w{index}")
        for a in ("x_minus", "x_plus"):
            for b in ("y_minus", "y_plus"):
                rhs = 5.0 / 6.0 * to_w[a] * to_w[b]
                five_sixths = min(five_sixths, (rhs - to_p[a] * to_p[b]) / rhs)
        rhs = to_w["x_minus"] * to_w["x_plus"] / 9.0
        one_ninth = min(one_ninth, (rhs - to_p["x_minus"] * to_p["x_plus"]) / rhs)
        rhs = to_w["y_minus"] * to_w["y_plus"] / 9.0
        one_ninth = min(one_ninth, (rhs - to_q["y_minus"] * to_q["y_plus"]) / rhs)
    return MaximizerReport(margin >= 0.0, margin, worst, five_sixths, one_ninth, e, eta_ok)


def _row(config: SharpnessConfig, theta: float) -> SweepRow:
    space = config.space
    c = build_configuration(space, config.r, theta)
    sample = DomainSample(
        space, c.quadruple, config.boundary, QUADRUPLE_LABELS, config.boundary_labels
    )
    lam = lambda_matrix(sample)
    lambdas = {
        "xx": float(lam[0, 1]),
        "yy": float(lam[2, 3]),
        "mm": float(lam[0, 2]),
        "pp": float(lam[1, 3]),
        "mp": float(lam[0, 3]),
        "pm": float(lam[1, 2]),
    }
    diagonal = (1.0 + lambdas["xx"]) * (1.0 + lambdas["yy"])
    cross = max(
        (1.0 + lambdas["mm"]) * (1.0 + lambdas["pp"]),
        (1.0 + lambdas["mp"]) * (1.0 + lambdas["pm"]),
    )
    ratio = 4.0 * cross / diagonal
    defect_delta = 0.5 * math.log(diagonal / cross)
    rho = rho_matrix(sample)
    epsilon_max = max_strong_epsilon(rho, threads=1)
    gromov = gromov_delta(rho, threads=1)
    distances = _distances(space, c)
    row = SweepRow(
        theta=theta,
        r=config.r,
        points=c,
        distances=distances,
        lambdas=lambdas,
        ratio=ratio,
        defect_delta=defect_delta,
        epsilon_max=epsilon_max,
        gromov_pairing=gromov.witness.pairing,
        residuals=_residuals(distances, config.r, theta),
        maximizer=_claim(config, c),
    )
    logger.debug(
        f"theta {theta}: ratio {ratio}, defect {defect_delta}, epsilon_max {epsilon_max}"
    )
    return row


def sweep(config: SharpnessConfig, progressbar=False, threads=None) -> List[SweepRow]:
    """Evaluate the sharpness family at every angle of the grid

    Parameters
    ----------
    config : SharpnessConfig
    progressbar : bool, optional
        show a tqdm progress bar, by default False
    threads : int, optional
        angles evaluated concurrently, by default HyperMetConfig.threads()

    Returns
    -------
    list of SweepRow
        in grid order
    """
    if threads is None:
        threads = HyperMetConfig.threads()
    logger.info(f"Sweeping {len(config.theta_grid)} angles for {config}")
    with tqdm(total=len(config.theta_grid), disable=not progressbar) as pbar:

        def evaluate(theta):
            row = _row(config, theta)
            pbar.update(1)
            return row

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                rows = list(executor.map(evaluate, config.theta_grid))
        else:
            rows = [evaluate(theta) for theta in config.theta_grid]
    return rows


def sweep_frame(rows: List[SweepRow]) -> pd.DataFrame:
    """The sweep table, one row per angle"""
    return pd.DataFrame([row.record() for row in rows], columns=SWEEP_COLUMNS)


def sweep_points_frame(rows: List[SweepRow]) -> pd.DataFrame:
    """Coordinates of every constructed point, one line per angle and point"""
    records = []
    for row in rows:
        for name, point in zip(POINT_NAMES, row.points):
            record = {"theta": row.theta, "point": name}
            record.update({f"x{i + 1}": float(v) for i, v in enumerate(point)})
            records.append(record)
    return pd.DataFrame(records)
