from HyperMet.analysis import ptolemaic_defect, quadruple_ptolemaic_defect
from HyperMet.datasets import load_great_circle
from HyperMet.geometry import Euclidean, Hyperbolic2
import math
import numpy as np


def _batch_defect(space, rng, n):
    x, y, z, t = (space.random_points(n, rng, 2.0) for _ in range(4))
    d = space.distance
    values = quadruple_ptolemaic_defect(d(x, y), d(z, t), d(x, z), d(y, t), d(x, t), d(y, z))
    scale = np.maximum.reduce([d(x, y), d(z, t), d(x, z), d(y, t), d(x, t), d(y, z)])
    return values, scale


def test_euclidean_quadruples_are_ptolemaic(rng):
    for dim in (2, 3):
        values, scale = _batch_defect(Euclidean(dim), rng, 10000)
        assert np.all(values <= 1e-9 * scale ** 2)


def test_hyperbolic_quadruples_are_ptolemaic(rng):
    values, scale = _batch_defect(Hyperbolic2(1.0), rng, 10000)
    assert np.all(values <= 1e-9 * scale ** 2)


def test_sphere_great_circle_is_not():
    m, points = load_great_circle()
    assert abs(ptolemaic_defect(m).defect - 0.5 * math.pi ** 2) < 1e-9
