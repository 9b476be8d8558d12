"""
Exhaustive scan over unordered quadruples of a distance matrix.

Quadruples are visited as x < y < z < t. Work is cut into blocks that share
the first index x; each block reports its own maximum and the blocks are
merged in lexicographic order, so the result does not depend on the number
of worker threads.
"""
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations
from typing import Callable, NamedTuple, Optional, Tuple

import numpy as np

from ..utils import getLogger, HyperMetConfig

logger = getLogger(__name__)

# pairing index -> the two pairs it joins, for (x, y, z, t)
PAIRINGS = ("xy|zt", "xz|yt", "xt|yz")
BLOCK_SIZE = 1 << 20


class QuadrupleWitness(NamedTuple):
    """The quadruple attaining a scan maximum

    indices are (x, y, z, t) with x < y < z < t; pairing selects which of
    xy|zt, xz|yt, xt|yz is the left-hand side of the inequality.
    """

    indices: Tuple[int, int, int, int]
    pairing: int
    defect: float

    def labelled(self, labels):
        return tuple(labels[i] for i in self.indices)

    def __tojson__(self):
        return {
            "indices": list(self.indices),
            "pairing": self.pairing,
            "pairing_name": PAIRINGS[self.pairing],
            "defect": self.defect,
        }


@lru_cache(maxsize=8)
def _triples(n):
    """All j < k < l below n in lexicographic order, with row offsets by j"""
    count = n * (n - 1) * (n - 2) // 6
    flat = np.fromiter(
        (v for triple in combinations(range(n), 3) for v in triple),
        dtype=np.int64,
        count=3 * count,
    )
    triples = flat.reshape(count, 3)
    triples.setflags(write=False)
    # first row whose j exceeds i, for every i
    starts = np.searchsorted(triples[:, 0], np.arange(n) + 1)
    return triples, starts


def _blocks(n):
    triples, starts = _triples(n)
    total = triples.shape[0]
    for i in range(n - 3):
        start = int(starts[i])
        for lo in range(start, total, BLOCK_SIZE):
            yield i, lo, min(lo + BLOCK_SIZE, total)


def _scan_block(d, kernel, block):
    i, lo, hi = block
    triples, _ = _triples(d.shape[0])
    j = triples[lo:hi, 0]
    k = triples[lo:hi, 1]
    l = triples[lo:hi, 2]
    values, pairing = kernel(d[i, j], d[k, l], d[i, k], d[j, l], d[i, l], d[j, k])
    # argmax returns the first maximiser, the smallest (j, k, l) for this i
    best = int(np.argmax(values))
    return (
        float(values[best]),
        (i, int(j[best]), int(k[best]), int(l[best])),
        int(pairing[best]),
    )


def scan_quadruples(
    d: np.ndarray, kernel: Callable, threads: Optional[int] = None
) -> Optional[QuadrupleWitness]:
    """Maximise a per-quadruple value over every unordered quadruple

    Parameters
    ----------
    d : np.array((n, n))
        symmetric distance array
    kernel : callable
        kernel(d_xy, d_zt, d_xz, d_yt, d_xt, d_yz) -> (values, pairing), all
        arguments are arrays over a block of quadruples
    threads : int, optional
        worker threads, by default HyperMetConfig.threads()

    Returns
    -------
    QuadrupleWitness or None
        None when there are fewer than four points
    """
    n = d.shape[0]
    if n < 4:
        return None
    if threads is None:
        threads = HyperMetConfig.threads()
    blocks = list(_blocks(n))
    logger.info(
        f"Scanning {n * (n - 1) * (n - 2) * (n - 3) // 24} quadruples in {len(blocks)} blocks on {threads} threads"
    )
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(lambda b: _scan_block(d, kernel, b), blocks))
    else:
        results = [_scan_block(d, kernel, b) for b in blocks]
    best = results[0]
    for result in results[1:]:
        # strict: earlier blocks hold lexicographically smaller quadruples
        if result[0] > best[0]:
            best = result
    value, indices, pairing = best
    return QuadrupleWitness(indices, pairing, value)


def _largest(s0, s1, s2):
    """Largest of three pairing values, the one after it, the smallest, and which pairing won"""
    pairing = np.where((s0 >= s1) & (s0 >= s2), 0, np.where(s1 >= s2, 1, 2))
    first = np.maximum(np.maximum(s0, s1), s2)
    lo01 = np.minimum(s0, s1)
    second = np.maximum(lo01, np.minimum(np.maximum(s0, s1), s2))
    third = np.minimum(lo01, s2)
    return first, second, third, pairing


def gromov_kernel(d_xy, d_zt, d_xz, d_yt, d_xt, d_yz):
    first, second, _, pairing = _largest(d_xy + d_zt, d_xz + d_yt, d_xt + d_yz)
    return 0.5 * (first - second), pairing


def ptolemaic_kernel(d_xy, d_zt, d_xz, d_yt, d_xt, d_yz):
    first, second, third, pairing = _largest(d_xy * d_zt, d_xz * d_yt, d_xt * d_yz)
    return first - second - third, pairing


def strong_kernel(epsilon):
    """Shifted-exponential defect 1 - exp(e(b - a)) - exp(e(c - a)) at rate epsilon"""

    def kernel(d_xy, d_zt, d_xz, d_yt, d_xt, d_yz):
        first, second, third, pairing = _largest(
            d_xy + d_zt, d_xz + d_yt, d_xt + d_yz
        )
        half = 0.5 * epsilon
        values = 1.0 - np.exp(half * (second - first)) - np.exp(half * (third - first))
        return values, pairing

    return kernel
