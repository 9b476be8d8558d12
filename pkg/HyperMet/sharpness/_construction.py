"""
The four point family x+-, y+- built from a geodesic pq of length 2r, its
parallel unit normal F and an angle theta:

    x0 = gamma(-r cos theta),  x+- = exp_x0(+- r sin theta F)
    y0 = gamma( r cos theta),  y+- = exp_y0(+- r sin theta F)
"""
import math
from typing import NamedTuple

import numpy as np

from ..geometry import ModelSpace
from ..utils import getLogger
from ..utils.exceptions import ParameterOutOfRange

logger = getLogger(__name__)

POINT_NAMES = ("x_minus", "x_plus", "x0", "y_minus", "y_plus", "y0", "p", "q")


class Configuration(NamedTuple):
    x_minus: np.ndarray
    x_plus: np.ndarray
    x0: np.ndarray
    y_minus: np.ndarray
    y_plus: np.ndarray
    y0: np.ndarray
    p: np.ndarray
    q: np.ndarray

    @property
    def quadruple(self):
        """x-, x+, y-, y+ in the row order used by the sweep"""
        return np.vstack([self.x_minus, self.x_plus, self.y_minus, self.y_plus])


def check_theta(theta):
    if not 0.0 < theta < 0.5 * math.pi:
        raise ParameterOutOfRange(f"theta must lie in (0, pi/2), got {theta}")


def build_configuration(space: ModelSpace, r: float, theta: float) -> Configuration:
    """Points of the sharpness family on the canonical geodesic of the space

    Parameters
    ----------
    space : ModelSpace
        Euclidean plane or hyperbolic plane
    r : float
        half of d(p, q)
    theta : float
        angle in (0, pi/2)

    Returns
    -------
    Configuration
    """
    check_theta(theta)
    frame = space.canonical_frame(r)
    offset = r * math.sin(theta)
    t = r * math.cos(theta)
    x0 = frame.point(-t)
    y0 = frame.point(t)
    x_minus = space.exp_map(x0, frame.parallel_normal(-t), -offset)
    x_plus = space.exp_map(x0, frame.parallel_normal(-t), offset)
    y_minus = space.exp_map(y0, frame.parallel_normal(t), -offset)
    y_plus = space.exp_map(y0, frame.parallel_normal(t), offset)
    return Configuration(
        x_minus, x_plus, x0, y_minus, y_plus, y0, frame.start, frame.end
    )


def eta(space: ModelSpace, configuration: Configuration) -> float:
    """max{d(x+-, p), d(y+-, q)}"""
    c = configuration
    return float(
        max(
            space.distance(c.x_minus, c.p),
            space.distance(c.x_plus, c.p),
            space.distance(c.y_minus, c.q),
            space.distance(c.y_plus, c.q),
        )
    )
