import hashlib

import numpy as np
import pandas as pd

from .config import HyperMetConfig
from .exceptions import HyperMetParseError
from .logging import getLogger

logger = getLogger(__name__)


def read_labelled_table(path, allow_empty=False):
    """Read a CSV whose first column is a label and the rest are reals

    Parameters
    ----------
    path : str or Path
        csv file with a header row, first header cell 'label'
    allow_empty : bool, optional
        return an empty table for a blank file instead of failing

    Returns
    -------
    (list, list, np.array)
        row labels, header names after 'label', values as float64
    """
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        if allow_empty:
            return [], [], np.zeros((0, 0))
        raise HyperMetParseError(f"{path} is empty")
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise HyperMetParseError(f"Cannot parse {path}: {e}")
    except OSError as e:
        raise HyperMetParseError(f"Cannot read {path}: {e}")
    columns = [str(c).strip() for c in df.columns]
    if len(columns) == 0 or columns[0] != "label":
        raise HyperMetParseError(f"{path}: first header cell must be 'label'")
    if df.isna().any().any():
        raise HyperMetParseError(f"{path}: missing values in some rows")
    labels = [str(v).strip() for v in df.iloc[:, 0]]
    try:
        # numpy string to float conversion is correctly rounded
        values = np.asarray(df.iloc[:, 1:].to_numpy(dtype=str), dtype=np.float64)
    except ValueError as e:
        raise HyperMetParseError(f"{path}: non numeric entry ({e})")
    values = values.reshape(len(labels), len(columns) - 1)
    return labels, columns[1:], values


def write_labelled_table(path, labels, columns, values):
    """Write labels and reals with 17 significant digits"""
    df = pd.DataFrame(np.asarray(values, dtype=float), columns=list(columns))
    df.insert(0, "label", list(labels))
    df.to_csv(path, index=False, float_format=HyperMetConfig.float_format)


def file_digest(path):
    """sha256 of a file, used in run manifests"""
    h = hashlib.sha256()
    with open(path, "rb") as fp:
        for block in iter(lambda: fp.read(1 << 16), b""):
            h.update(block)
    return h.hexdigest()
