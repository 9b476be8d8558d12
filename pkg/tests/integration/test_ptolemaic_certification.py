import numpy as np

from HyperMet.analysis import quadruple_ptolemaic_defect


def test_model_spaces_are_ptolemaic(ptolemaic_space, rng):
    n = 100_000
    x, y, z, t = (ptolemaic_space.random_points(n, rng, 2.0) for _ in range(4))
    d = ptolemaic_space.distance
    sides = [d(x, y), d(z, t), d(x, z), d(y, t), d(x, t), d(y, z)]
    values = quadruple_ptolemaic_defect(*sides)
    scale = np.maximum.reduce(sides)
    assert values.shape == (n,)
    assert np.all(values <= 1e-9 * scale ** 2)


def test_sphere_is_not_ptolemaic(rng):
    from HyperMet.geometry import Sphere2

    sphere = Sphere2()
    n = 20_000
    x, y, z, t = (sphere.random_points(n, rng) for _ in range(4))
    d = sphere.distance
    values = quadruple_ptolemaic_defect(d(x, y), d(z, t), d(x, z), d(y, t), d(x, t), d(y, z))
    assert np.max(values) > 0.1
