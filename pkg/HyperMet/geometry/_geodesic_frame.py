from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..utils import getLogger
from ..utils.exceptions import HyperMetTypeError, ParameterOutOfRange

logger = getLogger(__name__)


@dataclass(frozen=True)
class GeodesicFrame:
    """Unit speed geodesic on [-r, r] with a parallel unit normal field

    The geodesic is stored by its midpoint gamma(0) and unit tangent there.
    In the two dimensional models (and along a coordinate plane of
    Euclidean n-space) the geodesic lies in a totally geodesic plane whose
    normal direction is constant in ambient coordinates, so the parallel
    normal is the same vector for every parameter.
    """

    space: object
    midpoint: np.ndarray
    tangent: np.ndarray
    normal: Optional[np.ndarray]
    r: float

    @property
    def start(self):
        return self.point(-self.r)

    @property
    def end(self):
        return self.point(self.r)

    def point(self, t):
        """gamma(t); t may leave [-r, r], the geodesic extends"""
        point, _ = self.space._geodesic(self.midpoint, self.tangent, float(t))
        return self.space.project(point)

    def velocity(self, t):
        """gamma'(t)"""
        _, velocity = self.space._geodesic(self.midpoint, self.tangent, float(t))
        return velocity

    def _check_parameter(self, t):
        if not abs(t) <= self.r * (1.0 + 1e-12):
            raise ParameterOutOfRange(f"Parameter {t} outside [-{self.r}, {self.r}]")

    def parallel_normal(self, t):
        """Parallel transport of the unit normal to gamma(t)

        Parameters
        ----------
        t : float
            parameter in [-r, r]

        Returns
        -------
        np.array
            unit vector orthogonal to gamma'(t)
        """
        self._check_parameter(t)
        if self.normal is None:
            raise HyperMetTypeError(f"{self.space} has no normal direction")
        return self.normal.copy()

    def normal_geodesic_point(self, t, s):
        """exp at gamma(t) along s times the parallel normal"""
        return self.space.exp_map(self.point(t), self.parallel_normal(t), s)
