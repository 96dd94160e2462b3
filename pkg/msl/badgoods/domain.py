"""
The bad-goods formulas and the value types that they operate on.

All values are immutable. The formulas are pure functions.

.. code-block:: pycon

    >>> rate = RatePercent(0.1877)
    >>> expected = expected_return_qty(500, rate)
    >>> expected
    94
    >>> fr = freshness_ratio(2, 4)
    >>> score = bad_goods_risk_score(expected, 527, fr)
    >>> round(score, 3)
    0.422
    >>> classify_risk(score)
    <RiskLevel.MEDIUM: 'Medium'>
"""
import math
from collections import namedtuple
from decimal import Decimal
from decimal import ROUND_HALF_UP
from enum import Enum

from .constants import HIGH_LOWER
from .constants import LOW_UPPER
from .errors import InvalidRange
from .errors import InvariantViolation
from .errors import ZeroCapacity
from .errors import ZeroSales
from .errors import ZeroShelfLife
from .utils import month_str
from .utils import to_month


def _fraction(value, name):
    v = float(value)
    if math.isnan(v) or not 0.0 <= v <= 1.0:
        raise InvalidRange('{} must be in the range [0, 1], got {!r}'.format(name, value))
    return v


class RatePercent(float):
    """The fraction of sold units that are returned.

    A :class:`float` in the range [0, 1]. Reports render it as a percentage.

    >>> RatePercent(0.2).percent
    20.0
    """

    def __new__(cls, value):
        return super(RatePercent, cls).__new__(cls, _fraction(value, 'A return rate'))

    def __repr__(self):
        return 'RatePercent({})'.format(float.__repr__(self))

    @classmethod
    def from_percent(cls, text):
        """Create from a percentage, e.g., ``'18.77'``.

        Decimal arithmetic is used so that ``'18.77'`` becomes exactly ``0.1877``.
        """
        value = Decimal(str(text).strip()) / Decimal(100)
        return cls(float(value))

    @property
    def percent(self):
        """:class:`float`: The rate as a percentage."""
        return float(Decimal(repr(float(self))) * 100)


class FreshnessRatio(float):
    """The remaining freshness relative to the shelf life, in the range [0, 1]."""

    def __new__(cls, value):
        return super(FreshnessRatio, cls).__new__(cls, _fraction(value, 'A freshness ratio'))

    def __repr__(self):
        return 'FreshnessRatio({})'.format(float.__repr__(self))


class RiskScore(float):
    """A bad-goods risk score in the range [0, 1].

    Parameters
    ----------
    value : :class:`float`
        The score.
    capped : :class:`bool`, optional
        Whether the raw score exceeded 1 and was capped.
    """

    def __new__(cls, value, capped=False):
        obj = super(RiskScore, cls).__new__(cls, _fraction(value, 'A risk score'))
        obj._capped = bool(capped)
        return obj

    def __repr__(self):
        if self._capped:
            return 'RiskScore({}, capped=True)'.format(float.__repr__(self))
        return 'RiskScore({})'.format(float.__repr__(self))

    def __reduce__(self):
        return self.__class__, (float(self), self._capped)

    @property
    def capped(self):
        """:class:`bool`: Whether the raw score was greater than 1."""
        return self._capped


class RiskLevel(Enum):
    """The risk classification of a month.

    The levels are ordered, ``RiskLevel.LOW < RiskLevel.MEDIUM < RiskLevel.HIGH``.
    """
    LOW = 'Low'
    MEDIUM = 'Medium'
    HIGH = 'High'

    @property
    def rank(self):
        """:class:`int`: 0 for Low, 1 for Medium and 2 for High."""
        return _ranks[self]

    @property
    def guidance(self):
        """:class:`str`: What a planner should do at this level."""
        return _guidance[self]

    def lower(self):
        """Return the level one step below this level.

        Raises
        ------
        ValueError
            If this level is :attr:`LOW`.
        """
        if self is RiskLevel.LOW:
            raise ValueError('There is no level below Low')
        return _levels[self.rank - 1]

    def __lt__(self, other):
        if not isinstance(other, RiskLevel):
            return NotImplemented
        return self.rank < other.rank

    def __le__(self, other):
        if not isinstance(other, RiskLevel):
            return NotImplemented
        return self.rank <= other.rank

    def __gt__(self, other):
        if not isinstance(other, RiskLevel):
            return NotImplemented
        return self.rank > other.rank

    def __ge__(self, other):
        if not isinstance(other, RiskLevel):
            return NotImplemented
        return self.rank >= other.rank


_levels = (RiskLevel.LOW, RiskLevel.MEDIUM, RiskLevel.HIGH)
_ranks = dict((level, i) for i, level in enumerate(_levels))
_guidance = {
    RiskLevel.LOW: 'monitor',
    RiskLevel.MEDIUM: 'preventive measures',
    RiskLevel.HIGH: 'immediate action',
}


def _nonnegative_int(value, name):
    try:
        as_float = float(value)
    except (TypeError, ValueError):
        raise InvalidRange('{} must be an integer, got {!r}'.format(name, value)) from None
    if not as_float.is_integer() or as_float < 0:
        raise InvalidRange('{} must be a non-negative integer, got {!r}'.format(name, value))
    return int(as_float)


class MonthlyRecord(namedtuple('MonthlyRecord', 'month bought_qty return_qty retailer_capacity '
                                                'freshness_in_months shelf_life_in_months synthetic')):
    """One observed month.

    The quantities must be non-negative integers. The rules that relate
    fields to each other are checked by :meth:`violations` (and by
    :func:`~msl.badgoods.ingest.validate`), not on construction.

    Parameters
    ----------
    month
        Anything that :func:`~msl.badgoods.utils.to_month` accepts.
    bought_qty : :class:`int`
        Units sold.
    return_qty : :class:`int`
        Units returned.
    retailer_capacity : :class:`int`
        Units of shelf or storage capacity.
    freshness_in_months : :class:`int`
        Remaining freshness.
    shelf_life_in_months : :class:`int`
        Total shelf life.
    synthetic : :class:`bool`, optional
        Whether the record was created by interpolation.
    """
    __slots__ = ()

    def __new__(cls, month, bought_qty, return_qty, retailer_capacity,
                freshness_in_months, shelf_life_in_months, synthetic=False):
        return super(MonthlyRecord, cls).__new__(
            cls,
            to_month(month),
            _nonnegative_int(bought_qty, 'bought_qty'),
            _nonnegative_int(return_qty, 'return_qty'),
            _nonnegative_int(retailer_capacity, 'retailer_capacity'),
            _nonnegative_int(freshness_in_months, 'freshness_in_months'),
            _nonnegative_int(shelf_life_in_months, 'shelf_life_in_months'),
            bool(synthetic),
        )

    def __repr__(self):
        return '<MonthlyRecord {} bought={} returned={} capacity={} freshness={}/{}{}>'.format(
            month_str(self.month), self.bought_qty, self.return_qty, self.retailer_capacity,
            self.freshness_in_months, self.shelf_life_in_months,
            ' synthetic' if self.synthetic else '')

    def violations(self):
        """Return the rules that this record breaks.

        Returns
        -------
        :class:`list` of :class:`str`
            An empty list if the record is valid.
        """
        rules = []
        if self.return_qty > self.bought_qty:
            rules.append('return_qty ({}) > bought_qty ({})'.format(self.return_qty, self.bought_qty))
        if self.retailer_capacity < 1:
            rules.append('retailer_capacity must be >= 1')
        if self.shelf_life_in_months < 1:
            rules.append('shelf_life_in_months must be >= 1')
        if self.freshness_in_months > self.shelf_life_in_months:
            rules.append('freshness_in_months ({}) > shelf_life_in_months ({})'.format(
                self.freshness_in_months, self.shelf_life_in_months))
        return rules

    @property
    def rate_of_return(self):
        """:class:`RatePercent`: The return rate of this month."""
        return return_rate(self.return_qty, self.bought_qty)


class PlanRow(namedtuple('PlanRow', 'month demand_plan_qty return_rate retailer_capacity '
                                    'freshness_in_months shelf_life_in_months')):
    """One month of the scoring horizon.

    Raises :exc:`~msl.badgoods.errors.InvariantViolation` if the freshness
    exceeds the shelf life, or the capacity, demand or shelf life is not positive.
    """
    __slots__ = ()

    def __new__(cls, month, demand_plan_qty, return_rate, retailer_capacity,
                freshness_in_months, shelf_life_in_months):
        month = to_month(month)
        demand = _nonnegative_int(demand_plan_qty, 'demand_plan_qty')
        capacity = _nonnegative_int(retailer_capacity, 'retailer_capacity')
        freshness = _nonnegative_int(freshness_in_months, 'freshness_in_months')
        shelf_life = _nonnegative_int(shelf_life_in_months, 'shelf_life_in_months')
        if not isinstance(return_rate, RatePercent):
            return_rate = RatePercent(return_rate)

        label = month_str(month)
        if demand < 1:
            raise InvariantViolation(label, 'demand_plan_qty must be >= 1', source='plan')
        if capacity < 1:
            raise InvariantViolation(label, 'retailer_capacity must be >= 1', source='plan')
        if shelf_life < 1:
            raise InvariantViolation(label, 'shelf_life_in_months must be >= 1', source='plan')
        if freshness > shelf_life:
            raise InvariantViolation(
                label, 'freshness_in_months ({}) > shelf_life_in_months ({})'.format(
                    freshness, shelf_life), source='plan')

        return super(PlanRow, cls).__new__(
            cls, month, demand, return_rate, capacity, freshness, shelf_life)


class RiskRow(namedtuple('RiskRow', PlanRow._fields + ('expected_return_qty', 'freshness_ratio',
                                                       'risk_score', 'risk_level'))):
    """A :class:`PlanRow` with its risk score.

    Create with :func:`msl.badgoods.risk.score_row` rather than directly.
    """
    __slots__ = ()

    @property
    def plan(self):
        """:class:`PlanRow`: The plan inputs of this row."""
        return PlanRow(*self[:len(PlanRow._fields)])


def return_rate(actual_returns, sales_qty):
    """The fraction of sold units that are returned.

    Parameters
    ----------
    actual_returns : :class:`int`
        Units returned.
    sales_qty : :class:`int`
        Units sold.

    Returns
    -------
    :class:`RatePercent`
        ``actual_returns / sales_qty``.

    Raises
    ------
    ~msl.badgoods.errors.ZeroSales
        If `sales_qty` is 0.
    ~msl.badgoods.errors.InvalidRange
        If `actual_returns` is negative or greater than `sales_qty`.

    Examples
    --------
    >>> return_rate(100, 500)
    RatePercent(0.2)
    """
    if sales_qty == 0:
        raise ZeroSales('Cannot calculate a return rate when nothing was sold')
    if sales_qty < 0 or actual_returns < 0 or actual_returns > sales_qty:
        raise InvalidRange('Invalid returns {!r} for sales {!r}'.format(actual_returns, sales_qty))
    return RatePercent(actual_returns / sales_qty)


def expected_return_qty(sales_qty, rate):
    """The anticipated number of returned units.

    The product ``sales_qty * rate`` is rounded to the nearest integer with
    halves rounded away from zero. Decimal arithmetic on the shortest
    representation of each value is used, so ``500 * 0.1877 = 93.85``
    becomes 94.

    Parameters
    ----------
    sales_qty : :class:`int`
        Planned or actual units sold.
    rate : :class:`RatePercent` or :class:`float`
        The return rate.

    Returns
    -------
    :class:`int`
        The expected number of returned units.
    """
    if sales_qty < 0:
        raise InvalidRange('sales_qty must be >= 0, got {!r}'.format(sales_qty))
    rate = _fraction(rate, 'A return rate')
    product = Decimal(repr(float(sales_qty))) * Decimal(repr(rate))
    return int(product.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def inventory_capacity(sales_qty, return_qty):
    """The available inventory after accounting for returns.

    Returns
    -------
    :class:`int`
        ``sales_qty - return_qty``.

    Raises
    ------
    ~msl.badgoods.errors.InvalidRange
        If `return_qty` is negative or greater than `sales_qty`.

    Examples
    --------
    >>> inventory_capacity(600, 119)
    481
    """
    if return_qty < 0 or return_qty > sales_qty:
        raise InvalidRange('Invalid return_qty {!r} for sales_qty {!r}'.format(return_qty, sales_qty))
    return sales_qty - return_qty


def freshness_ratio(freshness, shelf_life):
    """The remaining freshness relative to the shelf life.

    Raises
    ------
    ~msl.badgoods.errors.ZeroShelfLife
        If `shelf_life` is not positive.
    ~msl.badgoods.errors.InvalidRange
        If `freshness` is negative or greater than `shelf_life`.

    Examples
    --------
    >>> freshness_ratio(2, 4)
    FreshnessRatio(0.5)
    """
    if shelf_life <= 0:
        raise ZeroShelfLife('The shelf life must be > 0, got {!r}'.format(shelf_life))
    if freshness < 0 or freshness > shelf_life:
        raise InvalidRange('The freshness must be in [0, {}], got {!r}'.format(shelf_life, freshness))
    return FreshnessRatio(freshness / shelf_life)


def bad_goods_risk_score(expected_return_qty, capacity, fr):
    """The risk that returned inventory spoils or becomes obsolete.

    The raw score is ``(expected_return_qty / capacity) ** fr``. The
    following special cases apply

    * no expected returns gives a score of 0, even if `fr` is 0
    * `fr` equal to 0 gives a score of 1 (for expected returns > 0)
    * a raw score above 1 is capped at 1 and flagged as
      :attr:`~RiskScore.capped`

    Parameters
    ----------
    expected_return_qty : :class:`int`
        The expected number of returned units.
    capacity : :class:`int`
        The retailer inventory capacity.
    fr : :class:`FreshnessRatio` or :class:`float`
        The freshness ratio.

    Returns
    -------
    :class:`RiskScore`
        The score.

    Raises
    ------
    ~msl.badgoods.errors.ZeroCapacity
        If `capacity` is 0.
    """
    if capacity == 0:
        raise ZeroCapacity('The retailer capacity must be >= 1')
    if capacity < 0:
        raise InvalidRange('The retailer capacity must be >= 1, got {!r}'.format(capacity))
    if expected_return_qty < 0:
        raise InvalidRange('The expected returns must be >= 0, got {!r}'.format(expected_return_qty))
    fr = _fraction(fr, 'A freshness ratio')

    if expected_return_qty == 0:
        return RiskScore(0.0)
    if fr == 0:
        return RiskScore(1.0)

    raw = (expected_return_qty / capacity) ** fr
    if raw > 1.0:
        return RiskScore(1.0, capped=True)
    return RiskScore(raw)


def classify_risk(score, low_upper=LOW_UPPER, high_lower=HIGH_LOWER):
    """Classify a risk score.

    Parameters
    ----------
    score : :class:`RiskScore` or :class:`float`
        A score in the range [0, 1].
    low_upper : :class:`float`, optional
        Scores below this value are Low.
    high_lower : :class:`float`, optional
        Scores at or above this value are High.

    Returns
    -------
    :class:`RiskLevel`
        The level.

    Examples
    --------
    >>> classify_risk(0.37)
    <RiskLevel.LOW: 'Low'>
    >>> classify_risk(0.4)
    <RiskLevel.MEDIUM: 'Medium'>
    >>> classify_risk(0.8)
    <RiskLevel.HIGH: 'High'>
    """
    value = _fraction(score, 'A risk score')
    if value < low_upper:
        return RiskLevel.LOW
    if value < high_lower:
        return RiskLevel.MEDIUM
    return RiskLevel.HIGH
