import numpy as np

from ..utils import getLogger, HyperMetConfig
from ..utils.exceptions import (
    CoincidentPoints,
    ConfigurationError,
    ConstraintViolation,
    NonUnitDirection,
)
from . import SpaceType
from ._geodesic_frame import GeodesicFrame

logger = getLogger(__name__)


def _unwrap(value):
    if np.ndim(value) == 0:
        return float(value)
    return value


class ModelSpace:
    """
    Base class for the closed-form ambient geometries.
    """

    def __init__(self, dim: int):
        """Model space, this is a virtual class and should not be used
        directly. Inherit from it to add a geometry with closed-form
        distance, exponential map and transport.

        Parameters
        ----------
        dim : int
            number of coordinates of a point
        """
        self.dim = dim
        self.type = SpaceType.BASE

    def __str__(self):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.__str__()})"

    def __eq__(self, other):
        return isinstance(other, ModelSpace) and str(self) == str(other)

    def __hash__(self):
        return hash(str(self))

    def __tojson__(self):
        return str(self)

    @property
    def ptolemaic(self) -> bool:
        """True for the nonpositively curved models"""
        return self.type != SpaceType.SPHERE

    @classmethod
    def from_string(cls, text: str):
        """Parse 'euclidean:n', 'hyperbolic:kappa' or 'sphere'

        Parameters
        ----------
        text : str
            the name of the geometry, optionally followed by its parameter

        Returns
        -------
        ModelSpace
        """
        from ._euclidean import Euclidean
        from ._hyperbolic import Hyperbolic2
        from ._sphere import Sphere2

        name, _, arg = str(text).strip().lower().partition(":")
        try:
            if name == "euclidean":
                return Euclidean(int(arg) if arg else 2)
            if name == "hyperbolic":
                return Hyperbolic2(float(arg) if arg else 1.0)
            if name == "sphere" and not arg:
                return Sphere2()
        except ValueError as e:
            raise ConfigurationError(f"Cannot parse model space {text!r}: {e}")
        raise ConfigurationError(
            f"Unknown model space {text!r}, expected euclidean:n, hyperbolic:kappa or sphere"
        )

    # points
    def _constraint_residual(self, x):
        """Signed constraint error of each point, scaled to be compared with constraint_tol"""
        return np.zeros(x.shape[:-1])

    def check_point(self, x):
        """Validate coordinates of one or many points

        Parameters
        ----------
        x : np.array((..., dim))

        Returns
        -------
        np.array
            the points as float64

        Raises
        ------
        ConstraintViolation
            wrong number of coordinates or the point is off the model
        """
        x = np.asarray(x, dtype=float)
        if x.ndim == 0 or x.shape[-1] != self.dim:
            raise ConstraintViolation(
                f"{self} points have {self.dim} coordinates, got shape {x.shape}"
            )
        if not np.all(np.isfinite(x)):
            raise ConstraintViolation(f"Non finite coordinates for a point of {self}")
        residual = self._constraint_residual(x)
        if np.any(np.abs(residual) > HyperMetConfig.constraint_tol):
            worst = float(np.max(np.abs(residual)))
            logger.error(f"Point off {self} by {worst}")
            raise ConstraintViolation(f"Point does not lie on {self}, residual {worst}")
        return x

    def project(self, x):
        """Nearest point of the model to ambient coordinates x, used to absorb rounding"""
        return np.asarray(x, dtype=float)

    # tangent vectors
    def inner(self, p, u, v):
        """Riemannian inner product of tangent vectors u, v at p"""
        return np.sum(np.asarray(u) * np.asarray(v), axis=-1)

    def tangent_residual(self, p, v):
        """Component of v normal to the model at p"""
        return np.zeros(np.shape(v)[:-1])

    def check_tangent(self, p, v):
        v = np.asarray(v, dtype=float)
        if v.shape[-1] != self.dim:
            raise NonUnitDirection(f"Tangent vectors of {self} have {self.dim} coordinates")
        tol = HyperMetConfig.tangent_tol
        scale = np.maximum(1.0, np.linalg.norm(p, axis=-1))
        if np.any(np.abs(self.tangent_residual(p, v)) > tol * scale):
            raise ConstraintViolation(f"Direction is not tangent to {self} at the point")
        if np.any(np.abs(self.inner(p, v, v) - 1.0) > tol):
            raise NonUnitDirection("Direction must have unit length")
        return v

    # geometry
    def _distance(self, a, b):
        raise NotImplementedError

    def distance(self, a, b):
        """Geodesic distance, broadcast over leading axes

        Parameters
        ----------
        a, b : np.array((..., dim))

        Returns
        -------
        float or np.array
        """
        return _unwrap(self._distance(self.check_point(a), self.check_point(b)))

    def pairwise(self, a, b=None):
        """Matrix of distances between the rows of a and the rows of b

        Parameters
        ----------
        a : np.array((n, dim))
        b : np.array((m, dim)), optional
            by default a

        Returns
        -------
        np.array((n, m))
        """
        a = self.check_point(np.atleast_2d(a))
        b = a if b is None else self.check_point(np.atleast_2d(b))
        return self._distance(a[:, None, :], b[None, :, :])

    def _geodesic(self, p, v, s):
        """Point and velocity at arclength s from p with unit direction v"""
        raise NotImplementedError

    def exp_map(self, p, v, s):
        """Point at arclength s along the geodesic leaving p with unit direction v

        Parameters
        ----------
        p : np.array(dim)
        v : np.array(dim)
            unit tangent vector at p
        s : float

        Returns
        -------
        np.array(dim)
        """
        p = self.check_point(p)
        v = self.check_tangent(p, v)
        point, _ = self._geodesic(p, v, float(s))
        return self.check_point(self.project(point))

    def _direction(self, p, q):
        """Unit tangent at p pointing to q"""
        raise NotImplementedError

    def _normal(self, p, u):
        """Unit normal to u at p with counterclockwise orientation"""
        raise NotImplementedError

    def geodesic_between(self, p, q) -> GeodesicFrame:
        """Unit speed geodesic gamma with gamma(-r) = p and gamma(r) = q

        r is half the distance from p to q and the frame carries the parallel
        unit normal, oriented counterclockwise from the tangent.

        Raises
        ------
        CoincidentPoints
        """
        p = self.check_point(p)
        q = self.check_point(q)
        length = self.distance(p, q)
        if length == 0.0:
            raise CoincidentPoints(f"No geodesic frame between coincident points of {self}")
        r = 0.5 * length
        v = self._direction(p, q)
        midpoint, tangent = self._geodesic(p, v, r)
        midpoint = self.project(midpoint)
        return GeodesicFrame(self, midpoint, tangent, self._normal(midpoint, tangent), r)

    def canonical_frame(self, r: float) -> GeodesicFrame:
        """Frame of length 2r through the basepoint along the first coordinate direction"""
        raise NotImplementedError

    def random_points(self, n: int, rng: np.random.Generator, radius: float = 1.0):
        raise NotImplementedError

    def random_direction(self, p, rng: np.random.Generator):
        raise NotImplementedError
