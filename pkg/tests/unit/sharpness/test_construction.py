from HyperMet.geometry import Euclidean, Hyperbolic2
from HyperMet.sharpness import POINT_NAMES, build_configuration, check_theta, eta
from HyperMet.utils.exceptions import ParameterOutOfRange
import math
import numpy as np
import pytest


@pytest.mark.parametrize("theta", [0.5, 0.1, 1e-3])
def test_euclidean_points(theta):
    c = build_configuration(Euclidean(2), 1.0, theta)
    cos, sin = math.cos(theta), math.sin(theta)
    assert np.allclose(c.p, [-1.0, 0.0])
    assert np.allclose(c.q, [1.0, 0.0])
    assert np.allclose(c.x_minus, [-cos, -sin], atol=1e-15)
    assert np.allclose(c.x_plus, [-cos, sin], atol=1e-15)
    assert np.allclose(c.y_minus, [cos, -sin], atol=1e-15)
    assert np.allclose(c.y_plus, [cos, sin], atol=1e-15)
    assert np.allclose(c.x0, [-cos, 0.0], atol=1e-15)
    assert np.allclose(c.y0, [cos, 0.0], atol=1e-15)
    assert len(c) == len(POINT_NAMES)


def test_points_lie_on_the_model(planar_space):
    c = build_configuration(planar_space, 1.0, 0.2)
    for point in c:
        planar_space.check_point(point)


@pytest.mark.parametrize("kappa", [0.5, 1.0, 2.0])
def test_hyperbolic_chord(kappa):
    h = Hyperbolic2(kappa)
    for theta in (0.5, 0.05, 1e-4):
        c = build_configuration(h, 1.0, theta)
        assert abs(h.distance(c.x_minus, c.x_plus) - 2.0 * math.sin(theta)) < 1e-12
        assert abs(h.distance(c.x0, c.p) - (1.0 - math.cos(theta))) < 1e-12


def test_points_approach_the_endpoints(planar_space):
    previous = math.inf
    for theta in (0.4, 0.1, 0.025):
        e = eta(planar_space, build_configuration(planar_space, 1.0, theta))
        assert e < previous
        assert e < 2.0 * theta
        previous = e


@pytest.mark.parametrize("theta", [0.0, -0.1, 0.5 * math.pi, 2.0])
def test_theta_range(theta):
    with pytest.raises(ParameterOutOfRange):
        check_theta(theta)
    with pytest.raises(ParameterOutOfRange):
        build_configuration(Euclidean(2), 1.0, theta)
