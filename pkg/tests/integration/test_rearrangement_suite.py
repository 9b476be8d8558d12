import itertools

import numpy as np
import pytest

from HyperMet.analysis import equality_flags, is_equality, rearrangement_sides, shest_sides
from HyperMet.datasets import random_domain_sample
from HyperMet.domain import lambda_matrix
from HyperMet.geometry import Euclidean, Hyperbolic2


def test_million_samples():
    rng = np.random.default_rng(11)
    values = rng.exponential(1.0, size=(1_000_000, 4))
    values *= rng.uniform(1e-3, 1e3, size=(1_000_000, 1))
    lhs, rhs = rearrangement_sides(*values.T)
    s = values.max(axis=1)
    assert np.all(lhs <= rhs + 1e-12 * s ** 2)


def test_samples_with_zeros_and_ties():
    rng = np.random.default_rng(12)
    values = rng.exponential(1.0, size=(200_000, 4))
    values[rng.random(values.shape) < 0.15] = 0.0
    ties = rng.random(values.shape[0]) < 0.2
    values[ties, 2] = values[ties, 1]
    lhs, rhs = rearrangement_sides(*values.T)
    s = np.maximum(values.max(axis=1), 1.0)
    assert np.all(lhs <= rhs + 1e-12 * s ** 2)


def _constructed(case, rng, n):
    a, b, c, d = rng.exponential(1.0, size=(4, n))
    if case == "i":
        a = np.zeros(n)
        d = np.abs(b - c) + rng.exponential(1.0, n)
    elif case == "ii":
        b = np.zeros(n)
        c = np.abs(a - d) + rng.exponential(1.0, n)
    else:
        d = a.copy()
        c = b.copy()
    return a, b, c, d


@pytest.mark.parametrize("case, column", [("i", 0), ("ii", 1), ("iii", 2)])
def test_constructed_equality_cases(case, column):
    rng = np.random.default_rng(13 + column)
    a, b, c, d = _constructed(case, rng, 10_000)
    assert np.all(is_equality(a, b, c, d))
    assert np.all(equality_flags(a, b, c, d)[:, column])


def test_generic_samples_are_strict():
    rng = np.random.default_rng(17)
    values = rng.uniform(0.5, 2.0, size=(100_000, 4))
    # keep clear of the case iii diagonal
    values[:, 3] = values[:, 0] + rng.choice([-1.0, 1.0], 100_000) * rng.uniform(0.1, 0.4, 100_000)
    flags = equality_flags(*values.T)
    assert not flags.any()
    assert not np.any(is_equality(*values.T))


def test_inversion_chain(rng):
    lam = rng.exponential(1.0, size=(6, 100_000))
    lhs, min_bound, rearranged = shest_sides(*lam)
    assert np.all(min_bound <= rearranged * (1.0 + 1e-12))


@pytest.mark.parametrize("space", [Euclidean(2), Euclidean(3), Hyperbolic2(1.0)], ids=str)
def test_inversion_chain_on_sampled_domains(space, rng):
    sample = random_domain_sample(space, 7, 4, rng)
    lam = lambda_matrix(sample)
    x, y, z, t = np.array(list(itertools.permutations(range(sample.n_interior), 4))).T
    lhs, min_bound, rearranged = shest_sides(
        lam[x, y], lam[z, t], lam[x, z], lam[y, t], lam[y, z], lam[x, t]
    )
    assert lhs.shape == (840,)
    assert np.all(lhs < min_bound)
    assert np.all(min_bound <= rearranged * (1.0 + 1e-12))
    assert np.all(lhs < rearranged)
