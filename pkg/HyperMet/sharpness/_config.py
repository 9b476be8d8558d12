import math
from typing import Optional, Sequence

import numpy as np

from ..geometry import ModelSpace, SpaceType
from ..utils import getLogger, HyperMetConfig
from ..utils.exceptions import ConfigurationError
from ._construction import build_configuration, eta

logger = getLogger(__name__)


def geometric_grid(theta_max: float = None, steps: int = None):
    """theta_k = theta_max * 2**-k for k = 0 .. steps - 1"""
    if theta_max is None:
        theta_max = HyperMetConfig.theta_max
    if steps is None:
        steps = HyperMetConfig.theta_steps
    return [theta_max * 2.0 ** (-k) for k in range(int(steps))]


def default_extra_boundary(space: ModelSpace, r: float, R: float, theta_max: float):
    """One boundary point w on gamma extended past q, at distance max{R, 6 eta} from q

    eta is taken at the largest angle of the grid, where it is largest.
    """
    e = eta(space, build_configuration(space, r, theta_max))
    frame = space.canonical_frame(r)
    w = frame.point(r + max(R, 6.0 * e))
    return np.atleast_2d(w)


class SharpnessConfig:
    """
    Parameters of a sharpness sweep.

    The geodesic pq is the canonical one of the space, through its basepoint
    along the first coordinate direction, with p = gamma(-r) and q = gamma(r).
    """

    def __init__(
        self,
        space: ModelSpace,
        r: float = 1.0,
        theta_grid: Optional[Sequence[float]] = None,
        extra_boundary=None,
        R: Optional[float] = None,
    ):
        """
        Parameters
        ----------
        space : ModelSpace
            Euclidean(2) or Hyperbolic2
        r : float, optional
            half the length of pq, by default 1
        theta_grid : list of float, optional
            strictly decreasing angles in (0, pi/2), by default the geometric grid
        extra_boundary : np.array((k, dim)), optional
            boundary points besides p and q, each at distance >= 2r from p
            and >= R from q; by default none
        R : float, optional
            separation of the extra boundary from q, by default 10 r

        Raises
        ------
        ConfigurationError
        """
        planar = space.type == SpaceType.HYPERBOLIC or (
            space.type == SpaceType.EUCLIDEAN and space.dim == 2
        )
        if not planar:
            raise ConfigurationError(
                f"Sharpness sweeps run in the Euclidean or hyperbolic plane, not {space}"
            )
        if not r > 0 or not math.isfinite(r):
            raise ConfigurationError(f"r must be positive and finite, got {r}")
        if R is None:
            R = 10.0 * r
        if not R > 0 or not math.isfinite(R):
            raise ConfigurationError(f"R must be positive and finite, got {R}")
        if theta_grid is None:
            theta_grid = geometric_grid()
        theta_grid = [float(theta) for theta in theta_grid]
        if len(theta_grid) == 0:
            raise ConfigurationError("theta grid is empty")
        for theta in theta_grid:
            if not 0.0 < theta < 0.5 * math.pi:
                logger.error(f"theta {theta} outside (0, pi/2)")
                raise ConfigurationError(f"theta must lie in (0, pi/2), got {theta}")
        if any(b >= a for a, b in zip(theta_grid, theta_grid[1:])):
            raise ConfigurationError("theta grid must be strictly decreasing")
        self.space = space
        self.r = float(r)
        self.R = float(R)
        self.theta_grid = tuple(theta_grid)
        frame = space.canonical_frame(self.r)
        self.p = frame.start
        self.q = frame.end
        if extra_boundary is None:
            extra_boundary = np.zeros((0, space.dim))
        extra_boundary = np.asarray(extra_boundary, dtype=float)
        if extra_boundary.size == 0:
            extra_boundary = extra_boundary.reshape(0, space.dim)
        extra_boundary = space.check_point(np.atleast_2d(extra_boundary))
        for w in extra_boundary:
            to_p = space.distance(self.p, w)
            to_q = space.distance(self.q, w)
            # relative slack for points placed exactly at the limits
            if to_p < 2.0 * self.r * (1.0 - 1e-12):
                logger.error(f"Extra boundary point at distance {to_p} from p")
                raise ConfigurationError(
                    f"Extra boundary point at distance {to_p} from p, need at least {2.0 * self.r}"
                )
            if to_q < self.R * (1.0 - 1e-12):
                logger.error(f"Extra boundary point at distance {to_q} from q")
                raise ConfigurationError(
                    f"Extra boundary point at distance {to_q} from q, need at least {self.R}"
                )
        self.extra_boundary = extra_boundary

    @classmethod
    def default(
        cls,
        space: ModelSpace,
        r: float = 1.0,
        theta_max: float = None,
        steps: int = None,
        R: float = None,
        extra: bool = True,
    ):
        """Geometric grid and, when extra is set, the default extra boundary point"""
        theta_grid = geometric_grid(theta_max, steps)
        if R is None:
            R = 10.0 * r
        extra_boundary = None
        if extra:
            # validate the grid before placing w
            cls(space, r, theta_grid, None, R)
            extra_boundary = default_extra_boundary(space, r, R, theta_grid[0])
        return cls(space, r, theta_grid, extra_boundary, R)

    @property
    def boundary(self):
        """p, q and the extra boundary points"""
        return np.vstack([self.p, self.q, self.extra_boundary])

    @property
    def boundary_labels(self):
        return ["p", "q"] + [f"w{i}" for i in range(self.extra_boundary.shape[0])]

    def __str__(self):
        return (
            f"SharpnessConfig({self.space}, r={self.r}, R={self.R}, "
            f"{len(self.theta_grid)} angles, {self.extra_boundary.shape[0]} extra boundary points)"
        )

    def __repr__(self):
        return self.__str__()

    def __tojson__(self):
        return {
            "space": str(self.space),
            "r": self.r,
            "R": self.R,
            "theta_grid": list(self.theta_grid),
            "extra_boundary": self.extra_boundary,
        }
