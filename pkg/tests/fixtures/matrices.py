import numpy as np
import pytest

from HyperMet.datasets import load_great_circle, load_line, load_unit_square
from HyperMet.metric import build_matrix


@pytest.fixture
def line():
    return load_line()


@pytest.fixture
def square():
    return load_unit_square()


@pytest.fixture
def great_circle():
    m, _ = load_great_circle()
    return m


@pytest.fixture
def four_cycle():
    """Unit four-cycle, halved pairing sums 2, 1, 1"""
    d = np.array(
        [
            [0.0, 2.0, 1.0, 1.0],
            [2.0, 0.0, 1.0, 1.0],
            [1.0, 1.0, 0.0, 2.0],
            [1.0, 1.0, 2.0, 0.0],
        ]
    )
    return build_matrix(["a", "b", "c", "d"], d)


def random_euclidean_matrix(rng, n, dim=3):
    x = rng.standard_normal((n, dim))
    d = np.linalg.norm(x[:, None, :] - x[None, :, :], axis=-1)
    return build_matrix([f"v{i}" for i in range(n)], d)


@pytest.fixture
def random_matrix(rng):
    return random_euclidean_matrix(rng, 9)
