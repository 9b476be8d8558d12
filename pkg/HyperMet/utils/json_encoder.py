import json
import math

import numpy as np


def format_real(value):
    """Round-trippable text for a real: 17 significant digits, scientific notation"""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.16e}"


def _jsonable_real(value):
    value = float(value)
    if math.isfinite(value):
        return value
    return format_real(value)


class HyperMetJSONEncoder(json.JSONEncoder):
    def default(self, obj):
        """Objects with a __tojson__ method and numpy values

        Parameters
        ----------
        obj : object
            a HyperMet result object or a numpy scalar/array

        Returns
        -------
        object
            something the base encoder can write
        """
        if hasattr(obj, "__tojson__"):
            return _replace_non_finite(obj.__tojson__())
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.floating):
            return _jsonable_real(obj)
        if isinstance(obj, np.ndarray):
            return _replace_non_finite(obj.tolist())
        return super().default(obj)

    def iterencode(self, obj, _one_shot=False):
        return super().iterencode(_replace_non_finite(obj), _one_shot)


def _replace_non_finite(obj):
    # the base encoder writes floats and tuples itself, never reaching default()
    if hasattr(obj, "__tojson__"):
        return _replace_non_finite(obj.__tojson__())
    if isinstance(obj, float):
        return _jsonable_real(obj)
    if isinstance(obj, dict):
        return {k: _replace_non_finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_replace_non_finite(v) for v in obj]
    return obj
