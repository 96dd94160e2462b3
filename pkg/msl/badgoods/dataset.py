"""
Containers for monthly data.

A :class:`Dataset` holds the monthly records of one product and a
:class:`TimeSeries` holds one numeric field of a :class:`Dataset`. Both
wrap a read-only :class:`numpy.ndarray`.
"""
import numpy as np

from .domain import MonthlyRecord
from .errors import EmptyInput
from .errors import InvalidRange
from .utils import month_str
from .utils import to_month

RECORD_DTYPE = np.dtype([
    ('month', 'datetime64[M]'),
    ('bought_qty', np.int64),
    ('return_qty', np.int64),
    ('retailer_capacity', np.int64),
    ('freshness_in_months', np.int64),
    ('shelf_life_in_months', np.int64),
    ('synthetic', bool),
])


class Dataset(object):

    def __init__(self, records, product_label=None, **metadata):
        """The monthly records of one product, sorted by month.

        Parameters
        ----------
        records : :class:`list` of :class:`~msl.badgoods.domain.MonthlyRecord`
            The records. They are sorted by month, the order of records with
            the same month is preserved.
        product_label : :class:`str`, optional
            A free-text label, e.g., ``'Organic Beer-G 1 Liter'``.
        **metadata
            Key-value pairs that describe where the records came from.
        """
        rows = [tuple(MonthlyRecord(*r)) if not isinstance(r, MonthlyRecord) else tuple(r)
                for r in records]
        data = np.array(rows, dtype=RECORD_DTYPE)
        if data.size:
            data = data[np.argsort(data['month'], kind='stable')]
        data.setflags(write=False)
        self._data = data
        self._product_label = product_label
        self._metadata = dict(metadata)

    def __repr__(self):
        span = self.span
        if span is None:
            return '<Dataset {!r} (0 records)>'.format(self._product_label)
        return '<Dataset {!r} {}..{} ({} records)>'.format(
            self._product_label, month_str(span[0]), month_str(span[1]), self._data.size)

    def __len__(self):
        return self._data.size

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, item):
        return MonthlyRecord(*self._data[item].tolist())

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return np.array_equal(self._data, other._data) and self._product_label == other._product_label

    def __hash__(self):
        return id(self)

    @property
    def data(self):
        """:class:`numpy.ndarray`: The records as a read-only structured array."""
        return self._data

    @property
    def metadata(self):
        """:class:`dict`: Information about the records, e.g., the source file."""
        return self._metadata

    @property
    def product_label(self):
        """:class:`str`: The label of the product."""
        return self._product_label

    @property
    def records(self):
        """:class:`list` of :class:`~msl.badgoods.domain.MonthlyRecord`: The records."""
        return [MonthlyRecord(*row.tolist()) for row in self._data]

    @property
    def months(self):
        """:class:`numpy.ndarray`: The months of the records."""
        return self._data['month']

    @property
    def span(self):
        """:class:`tuple` of :class:`numpy.datetime64`: The first and last month.

        :data:`None` if there are no records.
        """
        if not self._data.size:
            return None
        return self._data['month'][0], self._data['month'][-1]

    def column(self, name):
        """Return a column of the records.

        Parameters
        ----------
        name : :class:`str`
            A field of :class:`~msl.badgoods.domain.MonthlyRecord`.

        Returns
        -------
        :class:`numpy.ndarray`
            A read-only view of the column.
        """
        try:
            return self._data[name]
        except ValueError:
            raise ValueError('Invalid column name {!r}, must be one of {}'.format(
                name, ', '.join(RECORD_DTYPE.names))) from None

    def replace(self, records, **metadata):
        """Create a new :class:`Dataset` that has the same label and updated metadata."""
        meta = dict(self._metadata)
        meta.update(metadata)
        return Dataset(records, product_label=self._product_label, **meta)


class TimeSeries(object):

    def __init__(self, values, start_month=None, field_name=None):
        """An ordered, gap-free monthly sequence of one numeric field.

        Value ``i`` belongs to the month ``start_month + i``.

        Parameters
        ----------
        values : array-like
            The values. Must all be finite.
        start_month : optional
            The month of the first value. Anything that
            :func:`~msl.badgoods.utils.to_month` accepts.
        field_name : :class:`str`, optional
            The column that the values came from.
        """
        data = np.array(values, dtype=float).ravel()
        if data.size == 0:
            raise EmptyInput('A TimeSeries must contain at least 1 value')
        if not np.all(np.isfinite(data)):
            raise InvalidRange('All values of a TimeSeries must be finite')
        data.setflags(write=False)
        self._data = data
        self._start_month = None if start_month is None else to_month(start_month)
        self._field_name = field_name

    def __repr__(self):
        start = 'None' if self._start_month is None else repr(month_str(self._start_month))
        return '<TimeSeries {!r} start={} size={}>'.format(self._field_name, start, self._data.size)

    def __str__(self):
        return repr(self._data)

    def __len__(self):
        return self._data.size

    def __iter__(self):
        return iter(self._data)

    def __getitem__(self, item):
        return self._data[item]

    def __getattr__(self, item):
        # called only if the attribute is not found on the TimeSeries
        if item.startswith('_'):
            raise AttributeError(item)
        try:
            return getattr(self._data, item)
        except AttributeError:
            raise AttributeError('{!r} object has no attribute {!r}'.format(
                self.__class__.__name__, item)) from None

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._data
        return self._data.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (np.array_equal(self._data, other._data) and
                self._start_month == other._start_month and
                self._field_name == other._field_name)

    def __hash__(self):
        return id(self)

    def __neg__(self):
        return -self._data

    def __add__(self, other):
        return self._data + other

    def __radd__(self, other):
        return other + self._data

    def __sub__(self, other):
        return self._data - other

    def __rsub__(self, other):
        return other - self._data

    def __mul__(self, other):
        return self._data * other

    def __rmul__(self, other):
        return other * self._data

    def __truediv__(self, other):
        return self._data / other

    @property
    def data(self):
        """:class:`numpy.ndarray`: The read-only values."""
        return self._data

    @property
    def values(self):
        """:class:`numpy.ndarray`: Alias for :attr:`data`."""
        return self._data

    @property
    def start_month(self):
        """:class:`numpy.datetime64` or :data:`None`: The month of the first value."""
        return self._start_month

    @property
    def field_name(self):
        """:class:`str` or :data:`None`: The column that the values came from."""
        return self._field_name

    @property
    def months(self):
        """:class:`numpy.ndarray` or :data:`None`: The month of each value."""
        if self._start_month is None:
            return None
        return self._start_month + np.arange(self._data.size)

    @property
    def end_month(self):
        """:class:`numpy.datetime64` or :data:`None`: The month of the last value."""
        if self._start_month is None:
            return None
        return self._start_month + (self._data.size - 1)

    def tail(self, count):
        """Return the last `count` values as a new :class:`TimeSeries`."""
        count = int(count)
        if count < 1:
            raise ValueError('count must be >= 1')
        count = min(count, self._data.size)
        start = None
        if self._start_month is not None:
            start = self._start_month + (self._data.size - count)
        return TimeSeries(self._data[-count:], start_month=start, field_name=self._field_name)


def as_array(series):
    """Return the values of a :class:`TimeSeries` or an array-like object as a 1-D float array."""
    if isinstance(series, TimeSeries):
        return series.data
    return np.asarray(series, dtype=float).ravel()
