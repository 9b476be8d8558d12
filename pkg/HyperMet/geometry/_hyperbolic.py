"""
Hyperbolic plane of curvature -kappa in the hyperboloid model.

Points are (x0, x1, x2) with <x, x>_L = -1/kappa and x0 > 0, where
<a, b>_L = -a0 b0 + a1 b1 + a2 b2.
"""
import math

import numpy as np

from ..utils import getLogger, HyperMetConfig
from ..utils.exceptions import ConfigurationError, ConstraintViolation
from . import SpaceType
from ._geodesic_frame import GeodesicFrame
from ._model_space import ModelSpace

logger = getLogger(__name__)

# diag(-1, 1, 1)
J = np.array([-1.0, 1.0, 1.0])


def minkowski(a, b):
    """Lorentzian pairing, broadcast over leading axes"""
    a = np.asarray(a)
    b = np.asarray(b)
    return a[..., 1] * b[..., 1] + a[..., 2] * b[..., 2] - a[..., 0] * b[..., 0]


class Hyperbolic2(ModelSpace):
    def __init__(self, kappa: float = 1.0):
        """Hyperbolic plane

        Parameters
        ----------
        kappa : float
            positive, the sectional curvature is -kappa
        """
        if not kappa > 0 or not math.isfinite(kappa):
            raise ConfigurationError(f"kappa must be positive and finite, got {kappa}")
        super().__init__(3)
        self.type = SpaceType.HYPERBOLIC
        self.kappa = float(kappa)
        self.sqrt_kappa = math.sqrt(self.kappa)

    def __str__(self):
        return f"hyperbolic:{self.kappa!r}"

    @property
    def basepoint(self):
        return np.array([1.0 / self.sqrt_kappa, 0.0, 0.0])

    def lift(self, xy):
        """Point of the upper sheet above plane coordinates (x1, x2)"""
        xy = np.asarray(xy, dtype=float)
        x0 = np.sqrt(1.0 / self.kappa + np.sum(xy * xy, axis=-1))
        return np.concatenate([x0[..., None], xy], axis=-1)

    def to_plane(self, x):
        return np.asarray(x, dtype=float)[..., 1:]

    def _constraint_residual(self, x):
        # relative to the size of the terms that cancel in <x, x>_L
        residual = (self.kappa * minkowski(x, x) + 1.0) / np.maximum(
            1.0, self.kappa * x[..., 0] ** 2
        )
        return np.where(x[..., 0] > 0, residual, np.inf)

    def project(self, x):
        x = np.asarray(x, dtype=float)
        return x / np.sqrt(-self.kappa * minkowski(x, x))[..., None]

    def inner(self, p, u, v):
        return minkowski(u, v)

    def tangent_residual(self, p, v):
        return self.sqrt_kappa * minkowski(p, v)

    def _distance(self, a, b):
        cosh = -self.kappa * minkowski(a, b)
        floor = 1.0 - HyperMetConfig.clamp_tol * np.maximum(
            1.0, self.kappa * a[..., 0] * b[..., 0]
        )
        if np.any(cosh < floor):
            logger.error(f"Minkowski pairing {np.min(cosh)} below 1 on {self}")
            raise ConstraintViolation("Minkowski pairing of two points is below 1")
        diff = a - b
        # chord form of arccosh(-kappa <a, b>), exact as the points merge
        chord = np.sqrt(np.maximum(minkowski(diff, diff), 0.0))
        return (2.0 / self.sqrt_kappa) * np.arcsinh(0.5 * self.sqrt_kappa * chord)

    def _geodesic(self, p, v, s):
        k = self.sqrt_kappa
        point = np.cosh(k * s) * p + (np.sinh(k * s) / k) * v
        velocity = k * np.sinh(k * s) * p + np.cosh(k * s) * v
        return point, velocity

    def _direction(self, p, q):
        v = q + self.kappa * minkowski(p, q) * p
        return v / np.sqrt(minkowski(v, v))

    def _normal(self, p, u):
        n = J * np.cross(p, u)
        return n / np.sqrt(minkowski(n, n))

    def canonical_frame(self, r):
        o = self.basepoint
        e = np.array([0.0, 1.0, 0.0])
        return GeodesicFrame(self, o, e, self._normal(o, e), float(r))

    def random_points(self, n, rng, radius=1.0):
        return self.lift(rng.uniform(-radius, radius, size=(n, 2)))

    def random_direction(self, p, rng):
        w = rng.standard_normal(3)
        v = w + self.kappa * minkowski(p, w) * p
        return v / np.sqrt(minkowski(v, v))
