"""
Reading and writing distance matrices as CSV or JSON
"""
import json

import numpy as np

from ..utils import getLogger, FileFormat, HyperMetJSONEncoder
from ..utils.exceptions import HyperMetParseError
from ..utils.helper import read_labelled_table, write_labelled_table
from ._distance_matrix import build_matrix

logger = getLogger(__name__)


def read_matrix_entries(path, file_format=None):
    """Parse a matrix file without checking the metric axioms

    Parameters
    ----------
    path : str or Path
    file_format : FileFormat, optional
        by default chosen from the suffix

    Returns
    -------
    (list, np.array)
        labels and the square entry array

    Raises
    ------
    HyperMetParseError
        the file is unreadable or its shape is inconsistent
    """
    if file_format is None:
        file_format = FileFormat.from_path(path)
    if file_format == FileFormat.JSON:
        return _read_json(path)
    labels, header, values = read_labelled_table(path)
    if header != labels:
        raise HyperMetParseError(
            f"{path}: header labels {header} do not match row labels {labels}"
        )
    return labels, values


def _read_json(path):
    try:
        with open(path) as fp:
            payload = json.load(fp)
    except (OSError, json.JSONDecodeError) as e:
        raise HyperMetParseError(f"Cannot parse {path}: {e}")
    if not isinstance(payload, dict) or "labels" not in payload or "d" not in payload:
        raise HyperMetParseError(f"{path}: expected an object with 'labels' and 'd'")
    labels = [str(label) for label in payload["labels"]]
    rows = payload["d"]
    if not isinstance(rows, list) or any(
        not isinstance(row, list) or len(row) != len(labels) for row in rows
    ):
        raise HyperMetParseError(f"{path}: 'd' must be a list of {len(labels)} rows")
    if len(rows) != len(labels):
        raise HyperMetParseError(f"{path}: {len(rows)} rows for {len(labels)} labels")
    try:
        values = np.array(rows, dtype=np.float64).reshape(len(labels), len(labels))
    except (TypeError, ValueError) as e:
        raise HyperMetParseError(f"{path}: non numeric entry ({e})")
    return labels, values


def load_matrix(path, tol_rel=None, file_format=None):
    """Read and validate a distance matrix file

    Returns
    -------
    DistanceMatrix
    """
    labels, values = read_matrix_entries(path, file_format)
    logger.info(f"Read {len(labels)} point matrix from {path}")
    return build_matrix(labels, values, tol_rel)


def save_matrix(m, path, file_format=None):
    """Write a DistanceMatrix, reals with 17 significant digits"""
    if file_format is None:
        file_format = FileFormat.from_path(path)
    if file_format == FileFormat.JSON:
        with open(path, "w") as fp:
            json.dump(m, fp, cls=HyperMetJSONEncoder, indent=1)
            fp.write("\n")
        return
    write_labelled_table(path, m.labels, m.labels, m.d)
    logger.info(f"Wrote {m.size} point matrix to {path}")
