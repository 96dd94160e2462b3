"""
Writer for a JSON_ file format.

.. _JSON: https://www.json.org/
"""
import json
import math
from enum import Enum

import numpy as np

from ..base import Writer
from ..utils import month_str


class JSONWriter(Writer):

    def __init__(self, file=None, obj=None, **metadata):
        """Create a JSON_ writer.

        NaN values are written as ``null``. Months are written as ``'YYYY-MM'``
        and an :class:`~enum.Enum` member as its value.

        Parameters
        ----------
        file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
            The file to write to.
        obj
            The object to serialize. Can also be set with :attr:`obj`.
        **metadata
            Key-value pairs that describe the content.
        """
        super(JSONWriter, self).__init__(file, **metadata)
        self.obj = obj

    def text(self, indent=2, **kwargs):
        """Return the JSON_ text.

        Parameters
        ----------
        indent : :class:`int`, optional
            The indentation.
        **kwargs
            Passed to :func:`json.dumps`.
        """
        kwargs.setdefault('cls', _NumpyEncoder)
        return json.dumps(_clean(self.obj), indent=indent, allow_nan=False, **kwargs) + '\n'


def _clean(obj):
    # floats are serialized by the encoder before default() is called,
    # so NaN and numpy scalars in containers are replaced here
    if isinstance(obj, dict):
        return dict((k, _clean(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist()) if obj.dtype.kind != 'M' else [month_str(m) for m in obj]
    if isinstance(obj, (float, np.floating)) and not isinstance(obj, bool):
        return None if math.isnan(obj) else float(obj)
    return obj


class _NumpyEncoder(json.JSONEncoder):

    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, np.datetime64):
            return month_str(obj)
        elif isinstance(obj, Enum):
            return obj.value
        return super(_NumpyEncoder, self).default(obj)
