"""
Four-point conditions: Ptolemaic defect, Gromov parameter and strong
hyperbolicity of a finite metric space.
"""
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from ..metric import DistanceMatrix
from ..utils import getLogger, HyperMetConfig
from ..utils.exceptions import BracketDoesNotStraddle, NonPositiveEpsilon
from ._quadruple_scan import (
    QuadrupleWitness,
    gromov_kernel,
    ptolemaic_kernel,
    scan_quadruples,
    strong_kernel,
)

logger = getLogger(__name__)

LOG2 = math.log(2.0)


class PtolemaicResult(NamedTuple):
    defect: float
    witness: Optional[QuadrupleWitness]

    def __tojson__(self):
        return {"defect": self.defect, "witness": self.witness}


@dataclass(frozen=True)
class GromovResult:
    """Least Gromov parameter of a finite metric space"""

    delta_min: float
    witness: Optional[QuadrupleWitness]

    def __tojson__(self):
        return {"delta_min": self.delta_min, "witness": self.witness}


@dataclass(frozen=True)
class StrongResult:
    """Worst strong-hyperbolicity defect at a fixed rate epsilon

    max_defect <= 0 iff every quadruple satisfies the exponential inequality.
    """

    epsilon: float
    max_defect: float
    witness: Optional[QuadrupleWitness]

    @property
    def feasible(self):
        return self.max_defect <= 0.0

    def __tojson__(self):
        return {
            "epsilon": self.epsilon,
            "max_defect": self.max_defect,
            "feasible": self.feasible,
            "witness": self.witness,
        }


def _check_epsilon(epsilon):
    if not epsilon > 0 or not math.isfinite(epsilon):
        raise NonPositiveEpsilon(f"epsilon must be positive and finite, got {epsilon}")


def ptolemaic_defect(m: DistanceMatrix, threads=None) -> PtolemaicResult:
    """Largest Ptolemaic defect over all quadruples

    For each quadruple the defect is the largest pairing product minus the
    sum of the other two; the space is Ptolemaic iff the maximum is <= 0.

    Parameters
    ----------
    m : DistanceMatrix
    threads : int, optional

    Returns
    -------
    PtolemaicResult
        (-inf, None) for fewer than four points
    """
    witness = scan_quadruples(m.d, ptolemaic_kernel, threads)
    if witness is None:
        return PtolemaicResult(-math.inf, None)
    return PtolemaicResult(witness.defect, witness)


def gromov_delta(m: DistanceMatrix, threads=None) -> GromovResult:
    """Least delta satisfying the four-point Gromov condition

    delta_min is half the largest gap between the largest and the second
    largest pairing sum over all quadruples.

    Parameters
    ----------
    m : DistanceMatrix
    threads : int, optional

    Returns
    -------
    GromovResult
    """
    witness = scan_quadruples(m.d, gromov_kernel, threads)
    if witness is None:
        return GromovResult(0.0, None)
    return GromovResult(witness.defect, witness)


def strong_defect(m: DistanceMatrix, epsilon: float, threads=None) -> StrongResult:
    """Strong hyperbolicity defect at rate epsilon

    With halved pairing sums a >= b >= c the defect of a quadruple is
    1 - exp(epsilon (b - a)) - exp(epsilon (c - a)), which is <= 0 iff
    exp(epsilon a) <= exp(epsilon b) + exp(epsilon c).

    Parameters
    ----------
    m : DistanceMatrix
    epsilon : float
        positive rate
    threads : int, optional

    Returns
    -------
    StrongResult
    """
    _check_epsilon(epsilon)
    witness = scan_quadruples(m.d, strong_kernel(epsilon), threads)
    if witness is None:
        return StrongResult(epsilon, -math.inf, None)
    return StrongResult(epsilon, witness.defect, witness)


def is_strongly_feasible(m: DistanceMatrix, epsilon: float, threads=None) -> bool:
    return strong_defect(m, epsilon, threads).feasible


def max_strong_epsilon(
    m: DistanceMatrix, eps_lo=None, eps_hi=None, tol=None, threads=None
) -> float:
    """Supremum of the rates epsilon at which m is strongly hyperbolic

    The feasible rates form an interval (0, eps*] because
    e -> log(exp(e b) + exp(e c)) / e is nonincreasing, so eps* is found by
    bisection. Each quadruple with halved sums a > b is infeasible above
    log 2 / (a - b), which bounds eps* by log 2 / delta_min.

    Parameters
    ----------
    m : DistanceMatrix
    eps_lo : float, optional
        feasible lower end, by default 1e-6 / max(1, diameter)
    eps_hi : float, optional
        infeasible upper end, by default max(64 / diameter, 2 log 2 / delta_min)
    tol : float, optional
        absolute bisection tolerance on epsilon, by default
        1e-10 / max(1, diameter), so scaling m by s scales the result by 1 / s
    threads : int, optional

    Returns
    -------
    float
        the largest feasible rate found, math.inf when no quadruple has its
        largest pairing sum strictly above the second
    """
    if eps_lo is not None:
        _check_epsilon(eps_lo)
    if m.size < 4:
        return math.inf
    # rates scale as 1 / distance
    unit = max(1.0, m.diameter)
    if tol is None:
        tol = HyperMetConfig.bisection_tol / unit
    if eps_lo is None:
        eps_lo = HyperMetConfig.eps_lo / unit
    gromov = gromov_delta(m, threads)
    if 2.0 * gromov.delta_min <= m.tol_rel * m.scale:
        logger.info("Largest pairing sum never exceeds the second, rate is unbounded")
        return math.inf
    if eps_hi is None:
        eps_hi = max(
            HyperMetConfig.eps_hi_scale / m.diameter, 2.0 * LOG2 / gromov.delta_min
        )
    if not eps_lo < eps_hi:
        raise BracketDoesNotStraddle(f"Need eps_lo < eps_hi, got {eps_lo}, {eps_hi}")

    def feasible(epsilon):
        return strong_defect(m, epsilon, threads).feasible

    if not feasible(eps_lo):
        raise BracketDoesNotStraddle(f"Lower end {eps_lo} is already infeasible")
    if feasible(eps_hi):
        raise BracketDoesNotStraddle(
            f"Upper end {eps_hi} is feasible, the bracket does not contain the threshold"
        )
    lo, hi = eps_lo, eps_hi
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
        iterations += 1
    logger.info(f"Strong rate threshold {lo} after {iterations} bisection steps")
    return lo


def strong_to_gromov(epsilon: float) -> float:
    """Gromov parameter implied by strong hyperbolicity at rate epsilon: log 2 / epsilon"""
    _check_epsilon(epsilon)
    return LOG2 / epsilon


def quadruple_ptolemaic_defect(d_xy, d_zt, d_xz, d_yt, d_xt, d_yz):
    """Vectorised Ptolemaic defect for batches of quadruples given their six distances"""
    values, _ = ptolemaic_kernel(
        *(np.asarray(v, dtype=float) for v in (d_xy, d_zt, d_xz, d_yt, d_xt, d_yz))
    )
    return values
