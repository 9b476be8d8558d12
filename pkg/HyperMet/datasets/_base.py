from os.path import dirname, join
from pathlib import Path

import numpy as np

from ..domain import DomainSample, load_domain_sample
from ..geometry import Euclidean, ModelSpace, Sphere2
from ..metric import build_matrix, load_matrix, read_matrix_entries


def _data(name):
    return join(dirname(__file__), Path("data") / name)


def load_line():
    """Points 0, 1, 2, 3 of the real line

    Returns
    -------
    DistanceMatrix
        Ptolemaic with equality and 0-hyperbolic
    """
    return load_matrix(_data("line.csv"))


def load_unit_square():
    """Vertices of the unit square in cyclic order

    Returns
    -------
    DistanceMatrix
        sides 1, diagonals sqrt(2)
    """
    return load_matrix(_data("unit_square.csv"))


def load_triangle_violation():
    """Three points with d(t0, t2) = 3 > d(t0, t1) + d(t1, t2)

    Returns
    -------
    tuple
        labels and raw entries, build_matrix rejects them
    """
    return read_matrix_entries(_data("triangle_violation.csv"))


def load_great_circle():
    """Four equally spaced points on a great circle of the unit sphere

    Returns
    -------
    tuple
        DistanceMatrix with Ptolemaic defect pi**2 / 2, and the points
    """
    space = Sphere2()
    angles = 0.5 * np.pi * np.arange(4)
    points = np.stack([np.cos(angles), np.sin(angles), np.zeros(4)], axis=1)
    # cos(pi/2) is not exactly zero, snap to the exact circle points
    points = np.round(points)
    return build_matrix([f"g{i}" for i in range(4)], space.pairwise(points)), points


def load_inversion_example():
    """Two interior points (0, 1), (0, -1) and boundary {(-1, 0), (1, 0)} in the plane

    Returns
    -------
    DomainSample
        lambda of the interior pair is 1
    """
    return load_domain_sample(
        Euclidean(2), _data("inversion_interior.csv"), _data("inversion_boundary.csv")
    )


def random_domain_sample(
    space: ModelSpace,
    n_interior: int,
    n_boundary: int,
    rng: np.random.Generator,
    radius: float = 1.0,
) -> DomainSample:
    """Interior and boundary points drawn independently from the same region

    Parameters
    ----------
    space : ModelSpace
    n_interior : int
    n_boundary : int
    rng : np.random.Generator
    radius : float, optional
        half width of the coordinate box for Euclidean and hyperbolic samples

    Returns
    -------
    DomainSample
    """
    interior = space.random_points(n_interior, rng, radius)
    boundary = space.random_points(n_boundary, rng, radius)
    return DomainSample(space, interior, boundary)


def random_annulus_sample(
    rng: np.random.Generator,
    n_interior: int = 20,
    n_boundary: int = 5,
    inner: float = 1.0,
    outer: float = 2.0,
) -> DomainSample:
    """Planar annulus inner < |x| < outer with boundary samples on both circles"""
    space = Euclidean(2)
    radii = np.sqrt(rng.uniform(inner ** 2, outer ** 2, n_interior))
    angles = rng.uniform(0.0, 2.0 * np.pi, n_interior)
    interior = radii[:, None] * np.stack([np.cos(angles), np.sin(angles)], axis=1)
    which = rng.integers(0, 2, n_boundary)
    radii = np.where(which == 0, inner, outer)
    angles = rng.uniform(0.0, 2.0 * np.pi, n_boundary)
    boundary = radii[:, None] * np.stack([np.cos(angles), np.sin(angles)], axis=1)
    return DomainSample(space, interior, boundary)
