"""
Read, validate and shape the monthly history and the plan files.

A history file has the header (case-insensitive, any column order,
extra columns are ignored)::

    date,bought_qty,return_qty,retailer_capacity,freshness_in_months,shelf_life_in_months

A plan file has the header::

    date,demand_plan_qty,freshness_in_months,shelf_life_in_months

and may also have the override columns ``return_rate_pct`` and
``retailer_capacity``. A blank override cell means that the value is
forecast.
"""
import csv
import math
from collections import namedtuple
from decimal import Decimal
from decimal import InvalidOperation
from enum import Enum

import numpy as np

from .base import Reader
from .constants import HISTORY_COLUMNS
from .constants import PLAN_COLUMNS
from .constants import PLAN_OVERRIDE_COLUMNS
from .dataset import Dataset
from .dataset import TimeSeries
from .domain import MonthlyRecord
from .domain import RatePercent
from .domain import return_rate
from .errors import BadCell
from .errors import DuplicateMonth
from .errors import EmptyFile
from .errors import EmptyInput
from .errors import GapFound
from .errors import InvariantViolation
from .errors import MissingColumn
from .errors import ZeroSales
from .utils import get_basename
from .utils import logger
from .utils import month_str
from .utils import round_half_up
from .utils import to_month
from .writers import CSVWriter


class GapPolicy(Enum):
    """What :func:`validate` does with missing months."""
    REJECT = 'reject'
    INTERPOLATE = 'interpolate'


PlanInput = namedtuple('PlanInput', 'month demand_plan_qty freshness_in_months shelf_life_in_months '
                                    'return_rate retailer_capacity')
"""One row of a plan file. ``return_rate`` and ``retailer_capacity`` are :data:`None`
when the file does not override them."""


class _TableReader(Reader):

    required = ()
    optional = ()

    def rows(self):
        """Yield ``(line_number, {column: text})`` for every data row."""
        lines = self.get_lines(self.file)
        numbered = [(i + 1, line) for i, line in enumerate(lines) if line.strip()]
        if not numbered:
            raise EmptyFile(self.source)

        header_number, header_line = numbered[0]
        header = [name.strip().lower() for name in next(csv.reader([header_line]))]
        for name in self.required:
            if name not in header:
                raise MissingColumn(name, source=self.source)

        wanted = self.required + tuple(name for name in self.optional if name in header)
        index = dict((name, header.index(name)) for name in wanted)

        if len(numbered) == 1:
            raise EmptyFile(self.source)

        for number, line in numbered[1:]:
            cells = next(csv.reader([line]))
            if len(cells) < len(header):
                raise BadCell(number, '*', 'expected {} cells, got {}'.format(len(header), len(cells)),
                              source=self.source)
            yield number, dict((name, cells[i].strip()) for name, i in index.items())

    def month(self, number, text):
        try:
            return to_month(text)
        except ValueError as e:
            raise BadCell(number, 'date', str(e), source=self.source) from None

    def integer(self, number, column, text, minimum=0):
        try:
            value = float(text)
        except ValueError:
            raise BadCell(number, column, 'not a number {!r}'.format(text), source=self.source) from None
        if not math.isfinite(value) or not value.is_integer():
            raise BadCell(number, column, 'not an integer {!r}'.format(text), source=self.source)
        if value < minimum:
            raise BadCell(number, column, 'must be >= {}, got {!r}'.format(minimum, text), source=self.source)
        return int(value)


class HistoryReader(_TableReader):
    """Read a history file into a :class:`~msl.badgoods.dataset.Dataset`."""

    required = HISTORY_COLUMNS

    def read(self, product_label=None):
        """Read the file.

        Parameters
        ----------
        product_label : :class:`str`, optional
            The label of the product. Default is the basename of the file
            without its extension.

        Returns
        -------
        :class:`~msl.badgoods.dataset.Dataset`
            The records sorted by month.
        """
        records = []
        seen = set()
        for number, cells in self.rows():
            month = self.month(number, cells['date'])
            if month in seen:
                raise DuplicateMonth(month_str(month), source=self.source)
            seen.add(month)
            records.append(MonthlyRecord(
                month,
                self.integer(number, 'bought_qty', cells['bought_qty']),
                self.integer(number, 'return_qty', cells['return_qty']),
                self.integer(number, 'retailer_capacity', cells['retailer_capacity']),
                self.integer(number, 'freshness_in_months', cells['freshness_in_months']),
                self.integer(number, 'shelf_life_in_months', cells['shelf_life_in_months']),
            ))

        if product_label is None:
            product_label = self.source.rsplit('.', 1)[0] if '.' in self.source else self.source
        logger.debug('read %d records from %s', len(records), self.source)
        return Dataset(records, product_label=product_label, source=self.source)


class PlanReader(_TableReader):
    """Read a plan file into a :class:`list` of :class:`PlanInput`."""

    required = PLAN_COLUMNS
    optional = PLAN_OVERRIDE_COLUMNS

    def percent(self, number, text):
        if not text:
            return None
        try:
            value = Decimal(text)
        except InvalidOperation:
            raise BadCell(number, 'return_rate_pct', 'not a number {!r}'.format(text),
                          source=self.source) from None
        if not value.is_finite() or value < 0 or value > 100:
            raise BadCell(number, 'return_rate_pct', 'must be in the range [0, 100], got {!r}'.format(text),
                          source=self.source)
        return RatePercent.from_percent(text)

    def read(self):
        """Read the file.

        Returns
        -------
        :class:`list` of :class:`PlanInput`
            The rows sorted by month.
        """
        rows = []
        seen = set()
        for number, cells in self.rows():
            month = self.month(number, cells['date'])
            if month in seen:
                raise DuplicateMonth(month_str(month), source=self.source)
            seen.add(month)

            freshness = self.integer(number, 'freshness_in_months', cells['freshness_in_months'])
            shelf_life = self.integer(number, 'shelf_life_in_months', cells['shelf_life_in_months'], minimum=1)
            if freshness > shelf_life:
                raise InvariantViolation(
                    'line {}'.format(number),
                    'freshness_in_months ({}) > shelf_life_in_months ({})'.format(freshness, shelf_life),
                    source=self.source)

            capacity = cells.get('retailer_capacity') or None
            if capacity is not None:
                capacity = self.integer(number, 'retailer_capacity', capacity, minimum=1)

            rows.append(PlanInput(
                month,
                self.integer(number, 'demand_plan_qty', cells['demand_plan_qty'], minimum=1),
                freshness,
                shelf_life,
                self.percent(number, cells.get('return_rate_pct', '')),
                capacity,
            ))

        rows.sort(key=lambda r: r.month)
        logger.debug('read %d plan rows from %s', len(rows), self.source)
        return rows


def parse_csv(file, product_label=None):
    """Parse a history file.

    Parameters
    ----------
    file : :term:`path-like <path-like object>` or :term:`file-like <file object>`
        The file. A stream may be in text or binary (UTF-8) mode.
    product_label : :class:`str`, optional
        The label of the product.

    Returns
    -------
    :class:`~msl.badgoods.dataset.Dataset`
        One record per data row, sorted by month.

    Raises
    ------
    ~msl.badgoods.errors.EmptyFile
        If there is no header or no data row.
    ~msl.badgoods.errors.MissingColumn
        If a column of the canonical header is missing.
    ~msl.badgoods.errors.BadCell
        If a cell is not a valid month or a non-negative integer.
    ~msl.badgoods.errors.DuplicateMonth
        If a month appears more than once.
    """
    return HistoryReader(file).read(product_label=product_label)


def parse_plan_csv(file):
    """Parse a plan file.

    Parameters
    ----------
    file : :term:`path-like <path-like object>` or :term:`file-like <file object>`
        The file.

    Returns
    -------
    :class:`list` of :class:`PlanInput`
        The rows sorted by month.
    """
    return PlanReader(file).read()


def validate(dataset, gap_policy=GapPolicy.REJECT):
    """Check a :class:`~msl.badgoods.dataset.Dataset` and handle missing months.

    Parameters
    ----------
    dataset : :class:`~msl.badgoods.dataset.Dataset`
        The records.
    gap_policy : :class:`GapPolicy` or :class:`str`, optional
        With ``'reject'`` a missing month raises
        :exc:`~msl.badgoods.errors.GapFound`. With ``'interpolate'`` the
        quantities of a missing month are linearly interpolated (and rounded
        to the nearest integer), the freshness and shelf life are copied
        from the prior month and the record is marked as synthetic.

    Returns
    -------
    :class:`~msl.badgoods.dataset.Dataset`
        The validated records.

    Raises
    ------
    ~msl.badgoods.errors.InvariantViolation
        If a record breaks a rule, e.g., ``return_qty > bought_qty``.
    ~msl.badgoods.errors.DuplicateMonth
        If a month appears more than once.
    ~msl.badgoods.errors.GapFound
        If a month is missing and `gap_policy` is ``'reject'``.
    """
    policy = GapPolicy(gap_policy.lower() if isinstance(gap_policy, str) else gap_policy)
    source = dataset.metadata.get('source')

    if not len(dataset):
        raise EmptyInput('{}: the dataset has no records'.format(source or '<dataset>'))

    records = dataset.records
    _check_records(records, source)

    months = dataset.months
    repeated = months[1:][months[1:] == months[:-1]]
    if repeated.size:
        raise DuplicateMonth(month_str(repeated[0]), source=source)

    every = np.arange(months[0], months[-1] + 1)
    missing = np.setdiff1d(every, months)
    if not missing.size:
        return dataset.replace(records, gap_policy=policy.value)

    if policy is GapPolicy.REJECT:
        raise GapFound([month_str(m) for m in missing], source=source)

    logger.warning('%s: interpolating %d missing months', source or 'dataset', missing.size)
    x = months.astype(np.int64)
    xi = missing.astype(np.int64)
    filled = {}
    for name in ('bought_qty', 'return_qty', 'retailer_capacity'):
        filled[name] = np.interp(xi, x, dataset.column(name).astype(float))

    previous = np.searchsorted(months, missing) - 1
    for i, month in enumerate(missing):
        prior = records[previous[i]]
        records.append(MonthlyRecord(
            month,
            round_half_up(filled['bought_qty'][i]),
            round_half_up(filled['return_qty'][i]),
            round_half_up(filled['retailer_capacity'][i]),
            prior.freshness_in_months,
            prior.shelf_life_in_months,
            synthetic=True,
        ))

    result = dataset.replace(records, gap_policy=policy.value)
    _check_records(result.records, source)
    return result


def _check_records(records, source):
    for record in records:
        rules = record.violations()
        if rules:
            raise InvariantViolation(month_str(record.month), rules[0], source=source)


def extract_series(dataset, field):
    """Extract one field of a :class:`~msl.badgoods.dataset.Dataset` as a
    :class:`~msl.badgoods.dataset.TimeSeries`.

    Parameters
    ----------
    dataset : :class:`~msl.badgoods.dataset.Dataset`
        A validated dataset.
    field : :class:`str`
        One of ``bought_qty``, ``return_qty``, ``retailer_capacity``,
        ``freshness_in_months``, ``shelf_life_in_months`` or ``rate_of_return``.
        The ``rate_of_return`` is ``return_qty / bought_qty`` of each record.

    Returns
    -------
    :class:`~msl.badgoods.dataset.TimeSeries`
        The series, with the same length as `dataset`.

    Raises
    ------
    ~msl.badgoods.errors.ZeroSales
        If `field` is ``rate_of_return`` and a record has no sales.
    """
    if not len(dataset):
        raise EmptyInput('The dataset has no records')

    if field == 'rate_of_return':
        values = []
        for record in dataset.records:
            try:
                values.append(return_rate(record.return_qty, record.bought_qty))
            except ZeroSales:
                raise ZeroSales('{}: no sales in {}, cannot calculate the rate of return'.format(
                    dataset.metadata.get('source') or '<dataset>', month_str(record.month))) from None
    elif field in ('date', 'month', 'synthetic'):
        raise ValueError('{!r} is not a numeric field'.format(field))
    else:
        values = dataset.column(field)

    return TimeSeries(values, start_month=dataset.span[0], field_name=field)


def to_csv(dataset, file=None, mode=None):
    """Write a :class:`~msl.badgoods.dataset.Dataset` with the canonical header.

    Parameters
    ----------
    dataset : :class:`~msl.badgoods.dataset.Dataset`
        The records.
    file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
        The file to write to. If :data:`None` then the CSV text is returned.
    mode : :class:`str`, optional
        See :meth:`~msl.badgoods.base.Writer.write`.

    Returns
    -------
    :class:`str` or :data:`None`
        The CSV text if `file` is :data:`None`.
    """
    writer = CSVWriter(file, header=HISTORY_COLUMNS, source=get_basename(file) if file else None)
    for r in dataset.records:
        writer.add_row(month_str(r.month), r.bought_qty, r.return_qty, r.retailer_capacity,
                       r.freshness_in_months, r.shelf_life_in_months)
    if file is None:
        return writer.text()
    writer.write(mode=mode)
