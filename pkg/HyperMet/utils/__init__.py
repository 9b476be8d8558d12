"""
Utils
=====
"""
from .logging import getLogger, log_to_file, log_to_console
from .exceptions import (
    HyperMetException,
    HyperMetValueError,
    HyperMetParseError,
    HyperMetTypeError,
)
from .config import HyperMetConfig
from .json_encoder import HyperMetJSONEncoder, format_real
from .file_formats import FileFormat
