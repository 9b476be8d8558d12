import numpy as np
from scipy.spatial.distance import cdist

from ..utils import getLogger
from ..utils.exceptions import ConfigurationError
from . import SpaceType
from ._geodesic_frame import GeodesicFrame
from ._model_space import ModelSpace

logger = getLogger(__name__)


class Euclidean(ModelSpace):
    """Euclidean n-space, points are n reals"""

    def __init__(self, dim: int = 2):
        if int(dim) != dim or dim < 1:
            raise ConfigurationError(f"Euclidean dimension must be a positive integer, got {dim}")
        super().__init__(int(dim))
        self.type = SpaceType.EUCLIDEAN

    def __str__(self):
        return f"euclidean:{self.dim}"

    def _distance(self, a, b):
        return np.linalg.norm(a - b, axis=-1)

    def pairwise(self, a, b=None):
        a = self.check_point(np.atleast_2d(a))
        b = a if b is None else self.check_point(np.atleast_2d(b))
        return cdist(a, b)

    def _geodesic(self, p, v, s):
        return p + s * v, v

    def _direction(self, p, q):
        diff = q - p
        return diff / np.linalg.norm(diff)

    def _normal(self, p, u):
        if self.dim == 1:
            return None
        if self.dim == 2:
            return np.array([-u[1], u[0]])
        # first coordinate axis not parallel to u, made orthogonal to it
        for axis in np.eye(self.dim):
            w = axis - np.dot(axis, u) * u
            norm = np.linalg.norm(w)
            if norm > 0.5:
                return w / norm
        raise AssertionError("unreachable for a unit tangent")

    def canonical_frame(self, r):
        origin = np.zeros(self.dim)
        tangent = np.eye(self.dim)[0]
        return GeodesicFrame(self, origin, tangent, self._normal(origin, tangent), float(r))

    def random_points(self, n, rng, radius=1.0):
        return rng.uniform(-radius, radius, size=(n, self.dim))

    def random_direction(self, p, rng):
        v = rng.standard_normal(self.dim)
        return v / np.linalg.norm(v)
