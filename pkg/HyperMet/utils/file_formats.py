"""
Supported file formats
"""
from enum import Enum
from pathlib import Path


class FileFormat(Enum):
    """Enumeration of matrix and report file formats"""

    CSV = 1
    JSON = 2

    @classmethod
    def from_path(cls, path):
        """Pick the format from the file suffix, CSV unless the suffix is .json"""
        if Path(path).suffix.lower() == ".json":
            return cls.JSON
        return cls.CSV
