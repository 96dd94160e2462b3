"""
Descriptive statistics: autocorrelation, Pearson correlation, histograms
and summary statistics.
"""
import math
from collections import namedtuple

import numpy as np

from .constants import CORRELATION_FIELDS
from .constants import Z_95
from .dataset import as_array
from .errors import BadGoodsError
from .errors import EmptyInput
from .errors import InvalidRange
from .errors import LengthMismatch
from .errors import SeriesTooShort
from .errors import ZeroVariance
from .ingest import extract_series
from .utils import logger


class AcfResult(namedtuple('AcfResult', 'lags coefficients confidence_half_width n')):
    """The sample autocorrelation function of a series.

    Attributes
    ----------
    lags : :class:`numpy.ndarray`
        ``0, 1, ..., max_lag``.
    coefficients : :class:`numpy.ndarray`
        The coefficient of each lag.
    confidence_half_width : :class:`float`
        ``1.96 / sqrt(n)``, the half width of the 95% band of white noise.
    n : :class:`int`
        The number of values in the series.
    """
    __slots__ = ()

    def significant_lags(self):
        """Return the lags (>= 1) whose coefficient is outside of the confidence band."""
        outside = np.abs(self.coefficients) > self.confidence_half_width
        outside[0] = False
        return self.lags[outside]


Histogram = namedtuple('Histogram', 'bin_edges counts')
"""Equal-width bins (``bin_edges`` has one more element than ``counts``)."""

Summary = namedtuple('Summary', 'mean std min max n')
"""Sample statistics of a series. The ``std`` uses an ``n - 1`` denominator."""


class CorrelationMatrix(namedtuple('CorrelationMatrix', 'variable_names entries')):
    """Pairwise Pearson correlation coefficients.

    An entry that involves a constant variable is undefined and is
    :data:`numpy.nan`.
    """
    __slots__ = ()

    def entry(self, a, b):
        """Return the coefficient of variables `a` and `b` (:data:`numpy.nan` if undefined)."""
        return float(self.entries[self.variable_names.index(a), self.variable_names.index(b)])

    def is_defined(self, a, b):
        """Whether the coefficient of variables `a` and `b` is defined."""
        return not math.isnan(self.entry(a, b))


def acf(series, max_lag=None):
    """Sample autocorrelation function.

    The coefficient at lag :math:`k` is

    .. math::

        r_k = \\frac{\\sum_{t=0}^{n-k-1}(x_t-\\bar{x})(x_{t+k}-\\bar{x})}{\\sum_{t=0}^{n-1}(x_t-\\bar{x})^2}

    Parameters
    ----------
    series : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        The series.
    max_lag : :class:`int`, optional
        The largest lag. Default is ``min(12, n // 4)``.

    Returns
    -------
    :class:`AcfResult`
        The coefficients of lags ``0..max_lag``.

    Raises
    ------
    ~msl.badgoods.errors.SeriesTooShort
        If ``n < max_lag + 2`` or `max_lag` is less than 1.
    ~msl.badgoods.errors.ZeroVariance
        If the series is constant.

    Examples
    --------
    >>> result = acf([1, -1, 1, -1, 1, -1, 1, -1], max_lag=2)
    >>> result.coefficients.tolist()
    [1.0, -0.875, 0.75]
    """
    x = as_array(series)
    n = x.size
    if max_lag is None:
        max_lag = min(12, n // 4)
    max_lag = int(max_lag)
    if max_lag < 1:
        raise SeriesTooShort('The ACF needs max_lag >= 1, got {} for a series of length {}'.format(max_lag, n))
    if n < max_lag + 2:
        raise SeriesTooShort('The ACF up to lag {} needs at least {} values, got {}'.format(
            max_lag, max_lag + 2, n))
    if np.ptp(x) == 0:
        raise ZeroVariance('The ACF of a constant series is undefined')

    d = x - x.mean()
    denominator = np.dot(d, d)
    coefficients = np.empty(max_lag + 1)
    coefficients[0] = 1.0
    for k in range(1, max_lag + 1):
        coefficients[k] = np.dot(d[:n - k], d[k:]) / denominator
    np.clip(coefficients, -1.0, 1.0, out=coefficients)
    return AcfResult(np.arange(max_lag + 1), coefficients, Z_95 / math.sqrt(n), n)


def pearson(x, y):
    """Sample Pearson correlation coefficient.

    Parameters
    ----------
    x, y : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        Series of equal length.

    Returns
    -------
    :class:`float`
        The coefficient, in the range [-1, 1].

    Raises
    ------
    ~msl.badgoods.errors.LengthMismatch
        If the lengths differ.
    ~msl.badgoods.errors.SeriesTooShort
        If there are fewer than 2 values.
    ~msl.badgoods.errors.ZeroVariance
        If either series is constant.

    Examples
    --------
    >>> round(pearson([1, 2, 3, 4], [1, 3, 2, 4]), 12)
    0.8
    """
    a, b = as_array(x), as_array(y)
    if a.size != b.size:
        raise LengthMismatch('Cannot correlate series of lengths {} and {}'.format(a.size, b.size))
    if a.size < 2:
        raise SeriesTooShort('A correlation needs at least 2 values, got {}'.format(a.size))
    if np.ptp(a) == 0 or np.ptp(b) == 0:
        raise ZeroVariance('The correlation with a constant series is undefined')
    da, db = a - a.mean(), b - b.mean()
    r = np.dot(da, db) / math.sqrt(np.dot(da, da) * np.dot(db, db))
    return float(min(1.0, max(-1.0, r)))


def correlation_matrix(dataset, variables=CORRELATION_FIELDS):
    """Pairwise Pearson correlation of the variables of a dataset.

    A variable that is constant, or that cannot be calculated (e.g., the
    rate of return of a month without sales), makes its row and column
    undefined (:data:`numpy.nan`).

    Parameters
    ----------
    dataset : :class:`~msl.badgoods.dataset.Dataset`
        At least 2 records.
    variables : :class:`tuple` of :class:`str`, optional
        The variables (see :func:`~msl.badgoods.ingest.extract_series`).

    Returns
    -------
    :class:`CorrelationMatrix`
        The matrix.
    """
    if len(dataset) < 2:
        raise SeriesTooShort('A correlation matrix needs at least 2 records, got {}'.format(len(dataset)))

    names = tuple(variables)
    columns = []
    for name in names:
        try:
            column = extract_series(dataset, name).data
        except BadGoodsError as e:
            logger.warning('%s is undefined in the correlation matrix [%s]', name, e)
            column = None
        if column is not None and np.ptp(column) == 0:
            logger.debug('%s is constant, its correlations are undefined', name)
            column = None
        columns.append(column)

    size = len(names)
    entries = np.full((size, size), np.nan)
    for i in range(size):
        if columns[i] is None:
            continue
        entries[i, i] = 1.0
        for j in range(i + 1, size):
            if columns[j] is not None:
                entries[i, j] = entries[j, i] = pearson(columns[i], columns[j])
    entries.setflags(write=False)
    return CorrelationMatrix(names, entries)


def histogram(values, bin_count=10):
    """Equal-width histogram.

    The bins span ``[min, max]`` of the finite values and the maximum
    value is assigned to the last bin. Non-finite values are ignored.

    Parameters
    ----------
    values : array-like
        The values.
    bin_count : :class:`int`, optional
        The number of bins.

    Returns
    -------
    :class:`Histogram`
        The bin edges and counts.

    Raises
    ------
    ~msl.badgoods.errors.EmptyInput
        If there are no finite values.

    Examples
    --------
    >>> histogram([0, 1, 2, 3], 2).counts
    array([2, 2])
    """
    v = np.asarray(as_array(values), dtype=float)
    v = v[np.isfinite(v)]
    if not v.size:
        raise EmptyInput('A histogram needs at least 1 finite value')
    bin_count = int(bin_count)
    if bin_count < 1:
        raise InvalidRange('bin_count must be >= 1, got {}'.format(bin_count))
    counts, edges = np.histogram(v, bins=bin_count)
    return Histogram(edges, counts)


def summary(series):
    """Summary statistics of a series.

    Examples
    --------
    >>> summary([1, 2, 3])
    Summary(mean=2.0, std=1.0, min=1.0, max=3.0, n=3)
    """
    x = as_array(series)
    n = x.size
    if not n:
        raise EmptyInput('A summary needs at least 1 value')
    std = float(np.std(x, ddof=1)) if n > 1 else 0.0
    return Summary(float(np.mean(x)), std, float(np.min(x)), float(np.max(x)), n)


def scatter(dataset, x_field='rate_of_return', y_field='retailer_capacity'):
    """The paired values of two variables of a dataset.

    Parameters
    ----------
    dataset : :class:`~msl.badgoods.dataset.Dataset`
        The records.
    x_field, y_field : :class:`str`, optional
        The variables (see :func:`~msl.badgoods.ingest.extract_series`).

    Returns
    -------
    :class:`tuple`
        The months, the `x_field` values, the `y_field` values and the
        Pearson coefficient (:data:`numpy.nan` if undefined).
    """
    x = extract_series(dataset, x_field)
    y = extract_series(dataset, y_field)
    try:
        r = pearson(x, y)
    except (ZeroVariance, SeriesTooShort):
        r = float('nan')
    return x.months, x.data, y.data, r
