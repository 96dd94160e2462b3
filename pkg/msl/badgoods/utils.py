"""
General functions.
"""
import datetime
import logging
import os
import re
from decimal import Decimal
from decimal import ROUND_HALF_UP

import numpy as np

logger = logging.getLogger(__package__)

_forecasters = {}

_month_regex = re.compile(r'^(\d{4})-(\d{1,2})(?:-(\d{1,2}))?$')


def _key(name):
    return str(name).lower().replace('-', '').replace('_', '')


def register(name):
    """Use as a decorator to register a forecasting function by name.

    The :func:`~msl.badgoods.baselines.rolling_origin_backtest` looks up the
    function by the (case-insensitive) `name`.

    Parameters
    ----------
    name : :class:`str`
        The name of the model family, e.g., ``'ses'``.

    Returns
    -------
    :class:`callable`
        The decorator.
    """
    def append(func):
        _forecasters[_key(name)] = func
        logger.debug('registered %r as %r', func.__name__, name)
        return func
    return append


def get_forecaster(name):
    """Get a forecasting function that was registered with :func:`register`.

    Parameters
    ----------
    name : :class:`str`
        The name of the model family (case-insensitive, ``-`` and ``_`` ignored).

    Returns
    -------
    :class:`callable`
        The forecasting function.

    Raises
    ------
    ValueError
        If no function was registered with that name.
    """
    try:
        return _forecasters[_key(name)]
    except KeyError:
        raise ValueError('No forecaster is registered as {!r}, choose from {}'.format(
            name, ', '.join(sorted(_forecasters)))) from None


def get_basename(obj):
    """Get the :func:`~os.path.basename` of a file.

    Parameters
    ----------
    obj : :term:`path-like <path-like object>` or :term:`file-like <file object>`
        The object to get the :func:`~os.path.basename` of. If the object does not
        support the :func:`~os.path.basename` function then the
        :attr:`__name__ <definition.__name__>` of the `obj` is returned.

    Returns
    -------
    :class:`str`
        The basename of `obj`.
    """
    try:
        return os.path.basename(obj)
    except (TypeError, AttributeError):
        try:
            return os.path.basename(obj.name)
        except (TypeError, AttributeError):
            return obj.__class__.__name__


def is_file_readable(file, strict=False):
    """Check if a file exists and is readable.

    Parameters
    ----------
    file : :term:`path-like object`
        The file to check.
    strict : :class:`bool`, optional
        Whether to raise the exception (if one occurs).

    Returns
    -------
    :class:`bool`
        Whether the file exists and is readable.
    """
    try:
        with open(file, mode='rb'):
            return True
    except (OSError, TypeError, ValueError):
        if strict:
            raise
        return False


def to_month(value):
    """Convert a value to a calendar month.

    Parameters
    ----------
    value : :class:`str`, :class:`datetime.date` or :class:`numpy.datetime64`
        A ``'YYYY-MM'`` or ``'YYYY-MM-DD'`` string (the day is discarded) or
        a date-like object.

    Returns
    -------
    :class:`numpy.datetime64`
        The month, with unit ``'M'``.

    Raises
    ------
    ValueError
        If `value` is not a valid month.

    Examples
    --------
    >>> print(to_month('2025-01'))
    2025-01
    >>> print(to_month('2025-01-31'))
    2025-01
    """
    if isinstance(value, np.datetime64):
        if np.isnat(value):
            raise ValueError('NaT is not a month')
        return value.astype('datetime64[M]')
    if isinstance(value, (datetime.date, datetime.datetime)):
        return np.datetime64('{:04d}-{:02d}'.format(value.year, value.month), 'M')

    match = _month_regex.match(str(value).strip())
    if match is None:
        raise ValueError('{!r} is not a YYYY-MM or YYYY-MM-DD date'.format(value))

    year, month, day = match.groups()
    if not 1 <= int(month) <= 12:
        raise ValueError('{!r} has an invalid month'.format(value))
    if day is not None:
        # raises ValueError for a day that is not in the month
        datetime.date(int(year), int(month), int(day))
    return np.datetime64('{}-{:02d}'.format(year, int(month)), 'M')


def month_str(month):
    """Return a month as a ``'YYYY-MM'`` string.

    >>> month_str(to_month('2024-12-01'))
    '2024-12'
    """
    return str(np.datetime64(month, 'M'))


def month_range(start, count):
    """Return `count` consecutive months beginning at `start`.

    Returns
    -------
    :class:`numpy.ndarray`
        The months, with dtype ``datetime64[M]``.
    """
    return to_month(start) + np.arange(count)


def round_half_up(value):
    """Round to the nearest integer, with halves rounded away from zero.

    >>> round_half_up(93.85)
    94
    >>> round_half_up(2.5)
    3
    >>> round_half_up(-2.5)
    -3
    """
    return int(Decimal(repr(float(value))).quantize(Decimal(1), rounding=ROUND_HALF_UP))
