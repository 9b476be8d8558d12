"""
Point files: a header 'label,x1,...,xn' followed by one row per point in
model coordinates.
"""
import numpy as np

from ..geometry import ModelSpace
from ..utils import getLogger
from ..utils.exceptions import HyperMetParseError
from ..utils.helper import read_labelled_table, write_labelled_table
from ._domain_sample import DomainSample

logger = getLogger(__name__)


def read_points(path, space: ModelSpace, allow_empty=False):
    """Read a point file and check every row against the model

    Parameters
    ----------
    path : str or Path
    space : ModelSpace
    allow_empty : bool, optional
        accept a file with no rows, by default False

    Returns
    -------
    (list, np.array((n, dim)))
    """
    labels, columns, values = read_labelled_table(path, allow_empty=allow_empty)
    if len(labels) == 0:
        if not allow_empty:
            raise HyperMetParseError(f"{path} contains no points")
        return [], np.zeros((0, space.dim))
    if len(columns) != space.dim:
        raise HyperMetParseError(
            f"{path}: {space} points have {space.dim} coordinates, found {len(columns)}"
        )
    logger.info(f"Read {len(labels)} points from {path}")
    return labels, space.check_point(values)


def write_points(path, labels, points):
    points = np.atleast_2d(points)
    columns = [f"x{i + 1}" for i in range(points.shape[1])]
    write_labelled_table(path, labels, columns, points)


def load_domain_sample(space: ModelSpace, interior_path, boundary_path) -> DomainSample:
    """DomainSample from an interior and a boundary point file

    An empty boundary file is read as an empty sample so that the
    DomainSample constructor reports it as EmptyBoundary.
    """
    interior_labels, interior = read_points(interior_path, space)
    boundary_labels, boundary = read_points(boundary_path, space, allow_empty=True)
    return DomainSample(space, interior, boundary, interior_labels, boundary_labels)
