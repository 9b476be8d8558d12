"""
Finite metric spaces stored as validated dense distance matrices
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..utils import getLogger, HyperMetConfig
from ..utils.exceptions import (
    Asymmetric,
    DuplicateIndex,
    DuplicateLabel,
    EmptySubset,
    IndexOutOfRange,
    NegativeEntry,
    NonFiniteEntry,
    NonSquare,
    NonZeroDiagonal,
    TriangleViolation,
    ZeroOffDiagonal,
)

logger = getLogger(__name__)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a square matrix against the metric axioms

    worst_triple is (i, j, k, excess) with excess = d(i,j) - d(i,k) - d(k,j),
    the lexicographically smallest maximiser over distinct triples, or None
    when there are fewer than three points.
    """

    size: int
    finite: bool
    nonnegative: bool
    zero_diagonal: bool
    symmetric: bool
    positive_offdiag: bool
    triangle_ok: bool
    worst_triple: Optional[Tuple[int, int, int, float]]
    scale: float
    tol_rel: float

    @property
    def valid(self):
        return (
            self.finite
            and self.nonnegative
            and self.zero_diagonal
            and self.symmetric
            and self.positive_offdiag
            and self.triangle_ok
        )

    def __tojson__(self):
        worst = None
        if self.worst_triple is not None:
            i, j, k, excess = self.worst_triple
            worst = {"i": i, "j": j, "k": k, "violation": excess}
        return {
            "size": self.size,
            "valid": self.valid,
            "finite": self.finite,
            "nonnegative": self.nonnegative,
            "zero_diagonal": self.zero_diagonal,
            "symmetric": self.symmetric,
            "positive_offdiag": self.positive_offdiag,
            "triangle_ok": self.triangle_ok,
            "worst_triple": worst,
            "scale": self.scale,
            "tol_rel": self.tol_rel,
        }


def worst_triangle_excess(d):
    """Largest d(i,j) - d(i,k) - d(k,j) over distinct i, j, k

    Parameters
    ----------
    d : np.array((n, n))
        symmetric matrix

    Returns
    -------
    tuple or None
        (i, j, k, excess), ties resolved to the smallest (i, j, k)
    """
    n = d.shape[0]
    if n < 3:
        return None
    best = None
    idx = np.arange(n)
    for i in range(n):
        # excess[j, k] = d[i, j] - d[i, k] - d[k, j]
        excess = d[i, :, None] - d[i, None, :] - d
        excess[i, :] = -np.inf
        excess[:, i] = -np.inf
        excess[idx, idx] = -np.inf
        flat = int(np.argmax(excess))
        value = excess.flat[flat]
        if best is None or value > best[3]:
            j, k = divmod(flat, n)
            best = (i, j, k, float(value))
    return best


def validate_entries(entries, tol_rel=None):
    """Check a square array against the metric axioms without raising

    Parameters
    ----------
    entries : array_like
        square matrix of reals
    tol_rel : float, optional
        tolerance relative to the largest entry, by default HyperMetConfig.tol_rel

    Returns
    -------
    ValidationReport
    """
    if tol_rel is None:
        tol_rel = HyperMetConfig.tol_rel
    d = np.asarray(entries, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise NonSquare(f"Distance matrix must be square, got shape {d.shape}")
    n = d.shape[0]
    finite = bool(np.all(np.isfinite(d)))
    if not finite:
        return ValidationReport(
            n, False, False, False, False, False, False, None, np.inf, tol_rel
        )
    scale = float(np.max(d)) if n > 0 else 0.0
    slack = tol_rel * scale
    offdiag = ~np.eye(n, dtype=bool)
    nonnegative = bool(np.all(d >= 0))
    zero_diagonal = bool(np.all(np.abs(np.diag(d)) <= slack))
    symmetric = bool(np.all(np.abs(d - d.T) <= slack))
    positive_offdiag = bool(np.all(d[offdiag] > 0))
    sym = 0.5 * (d + d.T)
    np.fill_diagonal(sym, 0.0)
    worst = worst_triangle_excess(sym)
    triangle_ok = worst is None or worst[3] <= slack
    return ValidationReport(
        size=n,
        finite=finite,
        nonnegative=nonnegative,
        zero_diagonal=zero_diagonal,
        symmetric=symmetric,
        positive_offdiag=positive_offdiag,
        triangle_ok=triangle_ok,
        worst_triple=worst,
        scale=scale,
        tol_rel=tol_rel,
    )


class DistanceMatrix:
    """
    A labelled finite metric space.

    Instances are immutable: the underlying array is read only and every
    check happens in build_matrix.

    Attributes
    ----------
    labels : tuple
        point identifiers, one per row
    d : np.array((n, n))
        symmetric distances with zero diagonal
    tol_rel : float
        relative tolerance used when the matrix was validated
    """

    def __init__(self, labels, d, tol_rel):
        self._labels = tuple(labels)
        d = np.array(d, dtype=float)
        d.setflags(write=False)
        self._d = d
        self._tol_rel = float(tol_rel)

    @property
    def labels(self):
        return self._labels

    @property
    def d(self):
        return self._d

    @property
    def tol_rel(self):
        return self._tol_rel

    @property
    def size(self):
        return self._d.shape[0]

    def __len__(self):
        return self.size

    @property
    def scale(self):
        """Largest entry, the reference for relative tolerances"""
        if self.size == 0:
            return 0.0
        return float(np.max(self._d))

    diameter = scale

    def index(self, label):
        return self._labels.index(label)

    def __getitem__(self, key):
        i, j = key
        return float(self._d[i, j])

    def __eq__(self, other):
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self._labels == other._labels and np.array_equal(self._d, other._d)

    def __hash__(self):
        return hash((self._labels, self._d.tobytes()))

    def __str__(self):
        return f"DistanceMatrix({self.size} points, diameter {self.scale:.6g})"

    def __repr__(self):
        return self.__str__()

    def restrict(self, subset):
        return restrict(self, subset)

    def scaled(self, factor):
        """Same points with every distance multiplied by factor > 0"""
        return DistanceMatrix(self._labels, self._d * factor, self._tol_rel)

    def permuted(self, order):
        """Relabelled copy with rows and columns taken in the given order"""
        order = list(order)
        return DistanceMatrix(
            [self._labels[i] for i in order],
            self._d[np.ix_(order, order)],
            self._tol_rel,
        )

    def __tojson__(self):
        return {"labels": list(self._labels), "d": self._d.tolist()}


def build_matrix(labels, entries, tol_rel=None):
    """Validate entries and build a DistanceMatrix

    Parameters
    ----------
    labels : list
        one identifier per point, all distinct
    entries : array_like
        square matrix of pairwise distances
    tol_rel : float, optional
        tolerance relative to the largest entry, by default 1e-9

    Returns
    -------
    DistanceMatrix

    Raises
    ------
    NonSquare, NonFiniteEntry, NegativeEntry, NonZeroDiagonal, Asymmetric,
    ZeroOffDiagonal, DuplicateLabel, TriangleViolation
    """
    if tol_rel is None:
        tol_rel = HyperMetConfig.tol_rel
    labels = list(labels)
    d = np.asarray(entries, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise NonSquare(f"Distance matrix must be square, got shape {d.shape}")
    if d.shape[0] != len(labels):
        raise NonSquare(
            f"{len(labels)} labels for a {d.shape[0]}x{d.shape[1]} matrix"
        )
    if d.shape[0] == 0:
        raise NonSquare("Distance matrix must contain at least one point")
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("Point labels must be distinct")
    report = validate_entries(d, tol_rel)
    if not report.finite:
        raise NonFiniteEntry("Distance matrix contains non-finite entries")
    if not report.nonnegative:
        i, j = np.argwhere(d < 0)[0]
        raise NegativeEntry(f"Negative distance between {labels[i]} and {labels[j]}")
    if not report.zero_diagonal:
        i = int(np.argmax(np.abs(np.diag(d))))
        raise NonZeroDiagonal(f"Nonzero self distance at {labels[i]}")
    if not report.symmetric:
        i, j = np.unravel_index(np.argmax(np.abs(d - d.T)), d.shape)
        raise Asymmetric(
            f"d({labels[i]},{labels[j]}) != d({labels[j]},{labels[i]}) beyond tolerance"
        )
    if not report.positive_offdiag:
        offdiag = np.argwhere((d <= 0) & ~np.eye(d.shape[0], dtype=bool))
        i, j = offdiag[0]
        raise ZeroOffDiagonal(
            f"Points {labels[i]} and {labels[j]} are at distance zero"
        )
    if not report.triangle_ok:
        i, j, k, excess = report.worst_triple
        logger.error(
            f"Triangle inequality fails for ({labels[i]}, {labels[j]}) via {labels[k]} by {excess}"
        )
        raise TriangleViolation(
            f"d({labels[i]},{labels[j]}) exceeds the path through {labels[k]} by {excess}",
            report=report,
        )
    sym = 0.5 * (d + d.T)
    np.fill_diagonal(sym, 0.0)
    return DistanceMatrix(labels, sym, tol_rel)


def restrict(m: DistanceMatrix, subset: Sequence[int]) -> DistanceMatrix:
    """Principal submatrix on the given indices, in the given order

    Parameters
    ----------
    m : DistanceMatrix
    subset : list of int
        distinct indices into m

    Returns
    -------
    DistanceMatrix
        no re-validation, a submatrix of a metric is a metric
    """
    subset = [int(i) for i in subset]
    if len(subset) == 0:
        raise EmptySubset("Cannot restrict to an empty set of points")
    for i in subset:
        if i < 0 or i >= m.size:
            raise IndexOutOfRange(f"Index {i} outside 0..{m.size - 1}")
    if len(set(subset)) != len(subset):
        raise DuplicateIndex("Restriction indices must be distinct")
    return DistanceMatrix(
        [m.labels[i] for i in subset], m.d[np.ix_(subset, subset)], m.tol_rel
    )
