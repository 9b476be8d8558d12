"""
Supremal inversion over a boundary sample and the metric it induces

    lambda(x, y) = max over boundary p of d(x, y) / (d(x, p) d(y, p))
    rho(x, y)    = log(1 + lambda(x, y))

together with the single point sphericalization s_p and the older prior
bound on the hyperbolicity constant of rho.
"""
import math
from typing import Callable, Optional, Sequence, Union

import numpy as np

from ..geometry import ModelSpace
from ..metric import DistanceMatrix, build_matrix
from ..utils import getLogger
from ..utils.exceptions import EmptyBoundary, NonPositiveR, PointOnBoundary
from ._domain_sample import DomainSample

logger = getLogger(__name__)

Oracle = Union[ModelSpace, Callable]


def _oracle(dist: Oracle) -> Callable:
    if isinstance(dist, ModelSpace):
        return dist.distance
    return dist


def lambda_sup(x, y, boundary, dist: Oracle) -> float:
    """Supremal inversion of the pair (x, y) over a finite boundary sample

    Parameters
    ----------
    x, y : point
    boundary : list of points
    dist : ModelSpace or callable
        ambient distance oracle dist(a, b)

    Returns
    -------
    float
        0 when x and y coincide

    Raises
    ------
    EmptyBoundary
    PointOnBoundary
        x or y is at distance zero from a boundary point
    """
    dist = _oracle(dist)
    if len(boundary) == 0:
        raise EmptyBoundary("lambda needs at least one boundary point")
    d_xy = float(dist(x, y))
    best = 0.0
    for p in boundary:
        d_xp = float(dist(x, p))
        d_yp = float(dist(y, p))
        if d_xp <= 0 or d_yp <= 0:
            raise PointOnBoundary("Point at distance zero from the boundary")
        best = max(best, d_xy / (d_xp * d_yp))
    return best


def rho(x, y, boundary, dist: Oracle) -> float:
    """log(1 + lambda(x, y)), evaluated with log1p"""
    return math.log1p(lambda_sup(x, y, boundary, dist))


def _lambda_array(d_ii, d_ib):
    n = d_ii.shape[0]
    lam = np.zeros((n, n))
    for i in range(n):
        # one row at a time keeps memory at n * k
        lam[i] = np.max(d_ii[i][:, None] / (d_ib[i][None, :] * d_ib), axis=1)
    return lam


def _subset(sample, boundary_subset):
    if boundary_subset is None:
        boundary_subset = range(sample.n_boundary)
    boundary_subset = [int(k) for k in boundary_subset]
    if len(boundary_subset) == 0:
        raise EmptyBoundary("rho needs at least one boundary point")
    return boundary_subset


def lambda_matrix(sample: DomainSample, boundary_subset=None) -> np.ndarray:
    """lambda for every pair of interior points, maximised over the boundary subset"""
    boundary_subset = _subset(sample, boundary_subset)
    return _lambda_array(
        sample.interior_distances, sample.boundary_distances[:, boundary_subset]
    )


class RhoMatrix(DistanceMatrix):
    """
    The rho metric on the interior points of a DomainSample.

    Besides the validated distances the matrix keeps its provenance: the
    sample and the indices of the boundary points used in the maximum.
    """

    def __init__(self, matrix: DistanceMatrix, sample: DomainSample, boundary_subset):
        super().__init__(matrix.labels, matrix.d, matrix.tol_rel)
        self.sample = sample
        self.boundary_subset = tuple(int(k) for k in boundary_subset)

    @property
    def boundary(self):
        return self.sample.boundary[list(self.boundary_subset)]

    @property
    def boundary_labels(self):
        return [self.sample.boundary_labels[k] for k in self.boundary_subset]

    def lambda_values(self):
        return np.expm1(self.d)

    def recompute(self, i, j):
        """Entry (i, j) from scratch through lambda_sup and the space's distance"""
        return rho(
            self.sample.interior[i], self.sample.interior[j], self.boundary, self.sample.space
        )

    def verify(self, tol=1e-12):
        """Largest deviation between stored entries and their recomputation

        Raises
        ------
        AssertionError
            a deviation beyond tol * max(1, entry)
        """
        worst = 0.0
        for i in range(self.size):
            for j in range(i + 1, self.size):
                stored = self.d[i, j]
                deviation = abs(stored - self.recompute(i, j))
                if deviation > tol * max(1.0, stored):
                    raise AssertionError(
                        f"rho({self.labels[i]}, {self.labels[j]}) differs from its recomputation by {deviation}"
                    )
                worst = max(worst, deviation)
        return worst

    def __str__(self):
        return f"RhoMatrix({self.size} points over {len(self.boundary_subset)} boundary points of {self.sample.space})"

    def __tojson__(self):
        payload = super().__tojson__()
        payload["space"] = str(self.sample.space)
        payload["boundary_labels"] = self.boundary_labels
        return payload


def rho_matrix(
    sample: DomainSample, boundary_subset: Optional[Sequence[int]] = None, tol_rel=None
) -> RhoMatrix:
    """The rho metric on every pair of interior points

    Parameters
    ----------
    sample : DomainSample
    boundary_subset : list of int, optional
        indices of the boundary points entering the maximum, by default all
    tol_rel : float, optional
        triangle tolerance for the validation of the result

    Returns
    -------
    RhoMatrix
        validated; a TriangleViolation here is a defect of the construction
    """
    boundary_subset = _subset(sample, boundary_subset)
    lam = lambda_matrix(sample, boundary_subset)
    logger.info(
        f"rho matrix over {sample.n_interior} points and {len(boundary_subset)} boundary points"
    )
    matrix = build_matrix(sample.interior_labels, np.log1p(lam), tol_rel)
    return RhoMatrix(matrix, sample, boundary_subset)


def sp_metric(x, y, p, dist: Oracle) -> float:
    """log(1 + s_p(x, y)) with s_p(x, y) = d(x, y) / ((1 + d(x, p)) (1 + d(y, p)))"""
    dist = _oracle(dist)
    s = float(dist(x, y)) / ((1.0 + float(dist(x, p))) * (1.0 + float(dist(y, p))))
    return math.log1p(s)


def sp_matrix(points, p, space: ModelSpace, labels=None, tol_rel=None) -> DistanceMatrix:
    """The log(1 + s_p) metric on a list of points as a validated DistanceMatrix"""
    points = space.check_point(np.atleast_2d(points))
    if labels is None:
        labels = [f"x{i}" for i in range(points.shape[0])]
    d = space.pairwise(points)
    to_p = space.pairwise(points, np.atleast_2d(p))[:, 0]
    s = d / ((1.0 + to_p)[:, None] * (1.0 + to_p)[None, :])
    return build_matrix(labels, np.log1p(s), tol_rel)


def zx_prior_bound(R: float) -> float:
    """Earlier hyperbolicity constant of rho, 1/2 log max{2 + 20/R, 392}

    Parameters
    ----------
    R : float
        least distance between distinct boundary points

    Returns
    -------
    float
        always at least 1/2 log 392, above log 2
    """
    if not R > 0:
        raise NonPositiveR(f"R must be positive, got {R}")
    return 0.5 * math.log(max(2.0 + 20.0 / R, 392.0))


def boundary_separation(sample: DomainSample) -> float:
    """Least distance between two distinct boundary points, inf for a single point"""
    if sample.n_boundary < 2:
        return math.inf
    d = sample.space.pairwise(sample.boundary)
    return float(np.min(d[np.triu_indices(sample.n_boundary, k=1)]))
