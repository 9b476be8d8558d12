from typing import Optional, Sequence

import numpy as np

from ..geometry import ModelSpace
from ..utils import getLogger
from ..utils.exceptions import (
    DuplicateLabel,
    DuplicatePoint,
    EmptyBoundary,
    HyperMetValueError,
    PointOnBoundary,
)

logger = getLogger(__name__)


def _as_points(x, dim):
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return x.reshape(0, dim)
    return np.atleast_2d(x)


class DomainSample:
    """
    A sampled domain (U, boundary of U) inside a model space.

    The ambient distances between the samples are computed once, on
    construction, and reused by every inversion built on the sample.
    """

    def __init__(
        self,
        space: ModelSpace,
        interior,
        boundary,
        interior_labels: Optional[Sequence[str]] = None,
        boundary_labels: Optional[Sequence[str]] = None,
    ):
        """Validated interior and boundary samples

        Parameters
        ----------
        space : ModelSpace
            ambient geometry
        interior : np.array((n, dim))
            points of U
        boundary : np.array((k, dim))
            points of the boundary of U, at least one
        interior_labels : list of str, optional
            by default x0, x1, ...
        boundary_labels : list of str, optional
            by default p0, p1, ...

        Raises
        ------
        EmptyBoundary
            no boundary point
        PointOnBoundary
            an interior point is at distance zero from a boundary point
        DuplicatePoint
            two interior points or two boundary points coincide
        """
        self.space = space
        interior = _as_points(interior, space.dim)
        boundary = _as_points(boundary, space.dim)
        if boundary.shape[0] == 0:
            logger.error("Domain sample without boundary points")
            raise EmptyBoundary("The boundary sample must contain at least one point")
        self.interior = np.array(space.check_point(interior))
        self.boundary = np.array(space.check_point(boundary))
        self.interior.setflags(write=False)
        self.boundary.setflags(write=False)
        if interior_labels is None:
            interior_labels = [f"x{i}" for i in range(self.interior.shape[0])]
        if boundary_labels is None:
            boundary_labels = [f"p{i}" for i in range(self.boundary.shape[0])]
        self.interior_labels = tuple(str(label) for label in interior_labels)
        self.boundary_labels = tuple(str(label) for label in boundary_labels)
        if len(self.interior_labels) != self.interior.shape[0]:
            raise HyperMetValueError(
                f"{len(self.interior_labels)} labels for {self.interior.shape[0]} interior points"
            )
        if len(self.boundary_labels) != self.boundary.shape[0]:
            raise HyperMetValueError(
                f"{len(self.boundary_labels)} labels for {self.boundary.shape[0]} boundary points"
            )
        if len(set(self.interior_labels)) != len(self.interior_labels):
            raise DuplicateLabel("Interior labels must be distinct")

        self.interior_distances = space.pairwise(self.interior)
        self.boundary_distances = space.pairwise(self.interior, self.boundary)
        self.interior_distances.setflags(write=False)
        self.boundary_distances.setflags(write=False)

        on_boundary = np.argwhere(self.boundary_distances <= 0)
        if on_boundary.shape[0] > 0:
            i, k = on_boundary[0]
            label = self.interior_labels[i]
            logger.error(f"Interior point {label} lies on boundary point {self.boundary_labels[k]}")
            raise PointOnBoundary(
                f"Interior point {label} coincides with boundary point {self.boundary_labels[k]}",
                label=label,
            )
        n = self.interior.shape[0]
        coincident = np.argwhere(np.triu(self.interior_distances <= 0, k=1))
        if coincident.shape[0] > 0:
            i, j = coincident[0]
            label = self.interior_labels[j]
            logger.error(f"Interior points {self.interior_labels[i]} and {label} coincide")
            raise DuplicatePoint(
                f"Interior point {label} duplicates {self.interior_labels[i]}", label=label
            )
        repeated = np.argwhere(np.triu(space.pairwise(self.boundary) <= 0, k=1))
        if repeated.shape[0] > 0:
            k, j = repeated[0]
            label = self.boundary_labels[j]
            logger.error(f"Boundary points {self.boundary_labels[k]} and {label} coincide")
            raise DuplicatePoint(
                f"Boundary point {label} duplicates {self.boundary_labels[k]}", label=label
            )
        logger.info(f"Domain sample in {space}: {n} interior, {self.boundary.shape[0]} boundary points")

    @property
    def n_interior(self):
        return self.interior.shape[0]

    @property
    def n_boundary(self):
        return self.boundary.shape[0]

    def __str__(self):
        return f"DomainSample({self.space}, {self.n_interior} interior, {self.n_boundary} boundary)"

    def __repr__(self):
        return self.__str__()

    def with_boundary(self, extra, labels=None):
        """Same interior with more boundary points appended"""
        extra = _as_points(extra, self.space.dim)
        if labels is None:
            labels = [f"p{self.n_boundary + i}" for i in range(extra.shape[0])]
        return DomainSample(
            self.space,
            self.interior,
            np.vstack([self.boundary, extra]),
            self.interior_labels,
            list(self.boundary_labels) + list(labels),
        )

    def __tojson__(self):
        return {
            "space": str(self.space),
            "interior_labels": list(self.interior_labels),
            "interior": self.interior,
            "boundary_labels": list(self.boundary_labels),
            "boundary": self.boundary,
        }
