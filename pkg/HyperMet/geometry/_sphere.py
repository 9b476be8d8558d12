import numpy as np

from ..utils import getLogger
from ..utils.exceptions import AntipodalPoints
from . import SpaceType
from ._geodesic_frame import GeodesicFrame
from ._model_space import ModelSpace

logger = getLogger(__name__)


class Sphere2(ModelSpace):
    """Unit sphere in R^3, the non-Ptolemaic control geometry"""

    def __init__(self):
        super().__init__(3)
        self.type = SpaceType.SPHERE

    def __str__(self):
        return "sphere"

    def _constraint_residual(self, x):
        return np.sum(x * x, axis=-1) - 1.0

    def project(self, x):
        x = np.asarray(x, dtype=float)
        return x / np.linalg.norm(x, axis=-1)[..., None]

    def tangent_residual(self, p, v):
        return np.sum(np.asarray(p) * np.asarray(v), axis=-1)

    def _distance(self, a, b):
        cross = np.linalg.norm(np.cross(a, b), axis=-1)
        return np.arctan2(cross, np.sum(a * b, axis=-1))

    def _geodesic(self, p, v, s):
        return np.cos(s) * p + np.sin(s) * v, -np.sin(s) * p + np.cos(s) * v

    def _direction(self, p, q):
        v = q - np.dot(p, q) * p
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise AntipodalPoints("Antipodal points have no unique minimal geodesic")
        return v / norm

    def _normal(self, p, u):
        return np.cross(p, u)

    def canonical_frame(self, r):
        p = np.array([1.0, 0.0, 0.0])
        u = np.array([0.0, 1.0, 0.0])
        return GeodesicFrame(self, p, u, self._normal(p, u), float(r))

    def random_points(self, n, rng, radius=1.0):
        x = rng.standard_normal((n, 3))
        return self.project(x)

    def random_direction(self, p, rng):
        w = rng.standard_normal(3)
        v = w - np.dot(p, w) * p
        return v / np.linalg.norm(v)
