"""
Geometry
========

Closed-form model spaces: Euclidean n-space, the hyperbolic plane in the
hyperboloid model and the round sphere.
"""
from enum import IntEnum

from ..utils import getLogger

logger = getLogger(__name__)


class SpaceType(IntEnum):
    """
    Enum for the model geometries
    """

    BASE = 0
    EUCLIDEAN = 1
    HYPERBOLIC = 2
    SPHERE = 3


from ._geodesic_frame import GeodesicFrame
from ._model_space import ModelSpace
from ._euclidean import Euclidean
from ._hyperbolic import Hyperbolic2, minkowski
from ._sphere import Sphere2
