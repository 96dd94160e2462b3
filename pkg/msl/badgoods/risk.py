"""
Combine the forecasts with the demand plan, score every month and
recommend how to lower the risk of the months that are not Low.

.. code-block:: pycon

    >>> row = score_row(PlanRow('2025-04', 800, 0.2009, 595, 0, 4))
    >>> row.expected_return_qty, float(row.risk_score), row.risk_level.value
    (161, 1.0, 'High')
    >>> rec = recommend(row)
    >>> rec.actions
    (Action(kind=<ActionKind.INCREASE_FRESHNESS: 'IncreaseFreshness'>, to=1),)
    >>> rec.resulting_level.value
    'Medium'
"""
import json
import math
from collections import namedtuple
from decimal import Decimal
from decimal import ROUND_CEILING
from decimal import ROUND_FLOOR
from decimal import ROUND_HALF_UP
from enum import Enum

import numpy as np

from .arima import ArimaBounds
from .arima import Forecast
from .arima import auto_fit
from .arima import forecast
from .base import Reader
from .constants import DEFAULT_HORIZON
from .constants import HIGH_LOWER
from .constants import LOW_UPPER
from .constants import MAX_CAPACITY_INCREASE
from .constants import MAX_DEMAND_REDUCTION
from .constants import RECOMMEND_STEP
from .constants import RISK_TABLE_COLUMNS
from .constants import SERIES_FIELDS
from .domain import PlanRow
from .domain import RatePercent
from .domain import RiskLevel
from .domain import RiskRow
from .domain import RiskScore
from .domain import bad_goods_risk_score
from .domain import classify_risk
from .domain import expected_return_qty
from .domain import freshness_ratio
from .errors import AlreadyLow
from .errors import BadCell
from .errors import EmptyFile
from .errors import EmptyInput
from .errors import HorizonMismatch
from .errors import InvalidRange
from .errors import InvariantViolation
from .ingest import extract_series
from .utils import logger
from .utils import month_str
from .utils import round_half_up
from .utils import to_month
from .writers import CSVWriter
from .writers import JSONWriter


class Source(Enum):
    """Where the return rate or the retailer capacity of a plan month comes from.

    With :attr:`FORECAST` a value in the plan file still takes precedence
    for that month. With :attr:`PLAN_OVERRIDE` every plan month must
    specify the value.
    """
    FORECAST = 'forecast'
    PLAN_OVERRIDE = 'plan'


class ScoringConfig(namedtuple('ScoringConfig', 'horizon capacity_source rate_source '
                                                'low_upper high_lower bounds')):
    """How a plan is built and scored.

    Parameters
    ----------
    horizon : :class:`int`, optional
        The number of plan months.
    capacity_source, rate_source : :class:`Source` or :class:`str`, optional
        Where the retailer capacity and the return rate come from.
    low_upper, high_lower : :class:`float`, optional
        The risk thresholds, ``0 < low_upper < high_lower <= 1``.
    bounds : :class:`~msl.badgoods.arima.ArimaBounds`, optional
        The bounds of the ARIMA order selection.
    """
    __slots__ = ()

    def __new__(cls, horizon=DEFAULT_HORIZON, capacity_source=Source.FORECAST, rate_source=Source.FORECAST,
                low_upper=LOW_UPPER, high_lower=HIGH_LOWER, bounds=None):
        if int(horizon) != horizon or horizon < 1:
            raise InvalidRange('The horizon must be >= 1, got {!r}'.format(horizon))
        low_upper, high_lower = float(low_upper), float(high_lower)
        if not 0 < low_upper < high_lower <= 1:
            raise InvalidRange('The thresholds must satisfy 0 < low_upper < high_lower <= 1, '
                               'got {} and {}'.format(low_upper, high_lower))
        if bounds is None:
            bounds = ArimaBounds()
        elif not isinstance(bounds, ArimaBounds):
            bounds = ArimaBounds(*bounds)
        return super(ScoringConfig, cls).__new__(
            cls, int(horizon), Source(capacity_source), Source(rate_source), low_upper, high_lower, bounds)


class ActionKind(Enum):
    """A change to a plan month, in the order that they are tried."""
    INCREASE_FRESHNESS = 'IncreaseFreshness'
    REDUCE_DEMAND = 'ReduceDemand'
    INCREASE_CAPACITY = 'IncreaseCapacity'


Action = namedtuple('Action', 'kind to')
"""A change to a plan month: set the field of `kind` to the value `to`."""


class ActionBounds(namedtuple('ActionBounds', 'max_demand_reduction max_capacity_increase step '
                                              'allow_freshness')):
    """The limits of the changes that :func:`recommend` may propose.

    Parameters
    ----------
    max_demand_reduction : :class:`float`, optional
        The largest reduction of the demand, as a fraction of the plan.
    max_capacity_increase : :class:`float`, optional
        The largest increase of the capacity, as a fraction of the plan.
    step : :class:`int`, optional
        The demand and the capacity change in multiples of this many units.
    allow_freshness : :class:`bool`, optional
        Whether the freshness may be increased (up to the shelf life).
    """
    __slots__ = ()

    def __new__(cls, max_demand_reduction=MAX_DEMAND_REDUCTION, max_capacity_increase=MAX_CAPACITY_INCREASE,
                step=RECOMMEND_STEP, allow_freshness=True):
        reduction, increase = float(max_demand_reduction), float(max_capacity_increase)
        if not 0 <= reduction < 1:
            raise InvalidRange('max_demand_reduction must be in [0, 1), got {}'.format(reduction))
        if not increase >= 0:
            raise InvalidRange('max_capacity_increase must be >= 0, got {}'.format(increase))
        if int(step) != step or step < 1:
            raise InvalidRange('step must be an integer >= 1, got {!r}'.format(step))
        return super(ActionBounds, cls).__new__(cls, reduction, increase, int(step), bool(allow_freshness))


class Recommendation(namedtuple('Recommendation', 'month current_level target_level actions '
                                                  'resulting_score resulting_level')):
    """The changes that lower the risk of a month by one level.

    If no change within the bounds reaches the target level then
    :attr:`actions` is empty, :attr:`feasible` is :data:`False` and the
    resulting score is the current score.
    """
    __slots__ = ()

    @property
    def feasible(self):
        """:class:`bool`: Whether the target level can be reached."""
        return bool(self.actions)

    def describe(self):
        """:class:`str`: A one-line description of the actions."""
        if not self.feasible:
            return 'no feasible action within bounds'
        changes = ', '.join('{} to {}'.format(a.kind.value, a.to) for a in self.actions)
        return '{} (score {:.3f}, {})'.format(changes, self.resulting_score, self.resulting_level.value)


FieldForecast = namedtuple('FieldForecast', 'field fit forecast')
"""The forecast of one field of the history. The `fit` is :data:`None` for a constant series."""


def forecast_fields(history, fields=SERIES_FIELDS, bounds=None, horizon=DEFAULT_HORIZON):
    """Forecast fields of the history with automatically selected ARIMA models.

    A field that is constant is forecast by its constant value.

    Parameters
    ----------
    history : :class:`~msl.badgoods.dataset.Dataset`
        A validated history.
    fields : iterable of :class:`str`, optional
        The fields (see :func:`~msl.badgoods.ingest.extract_series`).
    bounds : :class:`~msl.badgoods.arima.ArimaBounds`, optional
        The bounds of the order selection.
    horizon : :class:`int`, optional
        The number of months to forecast.

    Returns
    -------
    :class:`list` of :class:`FieldForecast`
        A forecast for each field, in the order of `fields`.
    """
    result = []
    for field in fields:
        series = extract_series(history, field)
        if np.ptp(series.data) == 0:
            value = series.data[0]
            logger.info('%s is constant, forecasting %g', field, value)
            constant = np.full(int(horizon), value)
            fc = Forecast(horizon, constant, constant, constant, series.end_month + 1)
            result.append(FieldForecast(field, None, fc))
            continue
        model = auto_fit(series, bounds)
        logger.info('%s: selected %s', field, model.order)
        result.append(FieldForecast(field, model, forecast(model, series, horizon)))
    return result


def _quantize_rate(value):
    return float(Decimal(repr(float(value))).quantize(Decimal('0.0001'), rounding=ROUND_HALF_UP))


def build_plan(history, plan_inputs, config=None):
    """Build the plan rows of the scoring horizon.

    The demand, freshness and shelf life are copied from the plan inputs.
    The return rate and the retailer capacity are taken from the plan
    inputs when specified, otherwise they are forecast from the
    ``rate_of_return`` and ``retailer_capacity`` series of the history. A
    forecast rate is clamped to [0, 1] and rounded to 0.01 percentage
    points, a forecast capacity is rounded to an integer that is at
    least 1.

    Parameters
    ----------
    history : :class:`~msl.badgoods.dataset.Dataset` or :data:`None`
        The validated history. May be :data:`None` if every plan month
        specifies both the return rate and the retailer capacity.
    plan_inputs : :class:`list` of :class:`~msl.badgoods.ingest.PlanInput`
        The plan, one row per month.
    config : :class:`ScoringConfig`, optional
        The configuration.

    Returns
    -------
    :class:`list` of :class:`~msl.badgoods.domain.PlanRow`
        The rows, sorted by month.

    Raises
    ------
    ~msl.badgoods.errors.HorizonMismatch
        If the plan does not have one row for each of `horizon` consecutive
        months that follow the history.
    """
    if config is None:
        config = ScoringConfig()
    inputs = sorted(plan_inputs, key=lambda r: r.month)
    if len(inputs) != config.horizon:
        raise HorizonMismatch('The plan has {} months, expected a horizon of {}'.format(
            len(inputs), config.horizon))
    months = np.array([to_month(r.month) for r in inputs])
    steps = np.diff(months).astype(int)
    if np.any(steps != 1):
        raise HorizonMismatch('The plan months are not consecutive, {} follows {}'.format(
            month_str(months[1:][steps != 1][0]), month_str(months[:-1][steps != 1][0])))

    for name, source, attribute in (('return_rate_pct', config.rate_source, 'return_rate'),
                                    ('retailer_capacity', config.capacity_source, 'retailer_capacity')):
        if source is Source.PLAN_OVERRIDE:
            for r in inputs:
                if getattr(r, attribute) is None:
                    raise InvariantViolation(month_str(r.month), 'a {} value is required'.format(name),
                                             source='plan')

    fields = []
    if any(r.return_rate is None for r in inputs):
        fields.append('rate_of_return')
    if any(r.retailer_capacity is None for r in inputs):
        fields.append('retailer_capacity')

    forecasts = {}
    if fields:
        if history is None or not len(history):
            raise EmptyInput('A history is required to forecast {}'.format(' and '.join(fields)))
        offset = int((months[0] - (history.span[1] + 1)).astype(int))
        if offset < 0:
            raise HorizonMismatch('The plan starts in {}, which is not after the history ({})'.format(
                month_str(months[0]), month_str(history.span[1])))
        if offset:
            logger.warning('the plan starts %d month(s) after the end of the history', offset)
        for item in forecast_fields(history, fields, config.bounds, offset + config.horizon):
            forecasts[item.field] = item.forecast.point[offset:]
    else:
        logger.info('every plan month specifies the return rate and capacity, nothing to forecast')

    rows = []
    for i, r in enumerate(inputs):
        rate = r.return_rate
        if rate is None:
            value = forecasts['rate_of_return'][i]
            if not 0 <= value <= 1:
                logger.warning('%s: clamped the forecast return rate %.6g', month_str(months[i]), value)
                value = min(max(value, 0.0), 1.0)
            rate = RatePercent(_quantize_rate(value))
        capacity = r.retailer_capacity
        if capacity is None:
            value = round_half_up(forecasts['retailer_capacity'][i])
            if value < 1:
                logger.warning('%s: clamped the forecast retailer capacity %d to 1', month_str(months[i]), value)
                value = 1
            capacity = value
        rows.append(PlanRow(months[i], r.demand_plan_qty, rate, capacity,
                            r.freshness_in_months, r.shelf_life_in_months))
    return rows


def score_row(plan_row, low_upper=LOW_UPPER, high_lower=HIGH_LOWER):
    """Score one plan month.

    Parameters
    ----------
    plan_row : :class:`~msl.badgoods.domain.PlanRow`
        The plan month.
    low_upper, high_lower : :class:`float`, optional
        The risk thresholds.

    Returns
    -------
    :class:`~msl.badgoods.domain.RiskRow`
        The scored month.
    """
    expected = expected_return_qty(plan_row.demand_plan_qty, plan_row.return_rate)
    fr = freshness_ratio(plan_row.freshness_in_months, plan_row.shelf_life_in_months)
    score = bad_goods_risk_score(expected, plan_row.retailer_capacity, fr)
    level = classify_risk(score, low_upper=low_upper, high_lower=high_lower)
    return RiskRow(*plan_row, expected, fr, score, level)


def score_plan(rows, low_upper=LOW_UPPER, high_lower=HIGH_LOWER):
    """Score every plan month.

    Parameters
    ----------
    rows : iterable of :class:`~msl.badgoods.domain.PlanRow`
        The plan.
    low_upper, high_lower : :class:`float`, optional
        The risk thresholds.

    Returns
    -------
    :class:`list` of :class:`~msl.badgoods.domain.RiskRow`
        The scored months, sorted by month.
    """
    scored = [score_row(r, low_upper=low_upper, high_lower=high_lower)
              for r in sorted(rows, key=lambda r: r.month)]
    for r in scored:
        logger.debug('%s: score %.4f %s', month_str(r.month), r.risk_score, r.risk_level.value)
    return scored


def _options(row, kind, bounds):
    # (steps, action, plan row) in ascending magnitude
    plan = row.plan
    if kind is ActionKind.INCREASE_FRESHNESS:
        if not bounds.allow_freshness:
            return []
        return [(k, Action(kind, plan.freshness_in_months + k),
                 plan._replace(freshness_in_months=plan.freshness_in_months + k))
                for k in range(1, plan.shelf_life_in_months - plan.freshness_in_months + 1)]

    fraction = Decimal(repr(bounds.max_demand_reduction if kind is ActionKind.REDUCE_DEMAND
                            else bounds.max_capacity_increase))
    options = []
    k = 1
    if kind is ActionKind.REDUCE_DEMAND:
        demand = plan.demand_plan_qty
        lowest = max(1, int((demand * (1 - fraction)).to_integral_value(rounding=ROUND_CEILING)))
        while demand - k * bounds.step >= lowest:
            to = demand - k * bounds.step
            options.append((k, Action(kind, to), plan._replace(demand_plan_qty=to)))
            k += 1
    else:
        capacity = plan.retailer_capacity
        highest = int((capacity * (1 + fraction)).to_integral_value(rounding=ROUND_FLOOR))
        while capacity + k * bounds.step <= highest:
            to = capacity + k * bounds.step
            options.append((k, Action(kind, to), plan._replace(retailer_capacity=to)))
            k += 1
    return options


def _combine(plan, first, second):
    fields = dict(first._asdict())
    for name, value in second._asdict().items():
        if value != getattr(plan, name):
            fields[name] = value
    return PlanRow(**fields)


def recommend(row, bounds=None, low_upper=LOW_UPPER, high_lower=HIGH_LOWER):
    """Recommend how to lower the risk of a month by one level.

    Single changes are tried first, in the order of :class:`ActionKind`,
    and the smallest change of the first kind that reaches the target is
    chosen. Then pairs of changes are tried, in the order (freshness,
    demand), (freshness, capacity), (demand, capacity), and the pair with
    the smallest total number of steps is chosen. The demand and capacity
    change in multiples of ``bounds.step`` units and the freshness in
    whole months. Each candidate is scored with :func:`score_row`.

    Parameters
    ----------
    row : :class:`~msl.badgoods.domain.RiskRow`
        A Medium or High risk month.
    bounds : :class:`ActionBounds`, optional
        The limits of the changes.
    low_upper, high_lower : :class:`float`, optional
        The risk thresholds.

    Returns
    -------
    :class:`Recommendation`
        The recommendation.

    Raises
    ------
    ~msl.badgoods.errors.AlreadyLow
        If the month is already Low risk.
    """
    if bounds is None:
        bounds = ActionBounds()
    current = row.risk_level
    if current is RiskLevel.LOW:
        raise AlreadyLow('{} is already Low risk'.format(month_str(row.month)))
    target = current.lower()

    def reaches(plan):
        scored = score_row(plan, low_upper=low_upper, high_lower=high_lower)
        return scored if scored.risk_level <= target else None

    kinds = list(ActionKind)
    options = dict((kind, _options(row, kind, bounds)) for kind in kinds)

    for kind in kinds:
        for _, action, plan in options[kind]:
            scored = reaches(plan)
            if scored is not None:
                return Recommendation(row.month, current, target, (action,),
                                      scored.risk_score, scored.risk_level)

    for i, first in enumerate(kinds):
        for second in kinds[i + 1:]:
            best = None
            for k1, a1, p1 in options[first]:
                for k2, a2, p2 in options[second]:
                    if best is not None and k1 + k2 >= best[0]:
                        continue
                    scored = reaches(_combine(row.plan, p1, p2))
                    if scored is not None:
                        best = k1 + k2, (a1, a2), scored
            if best is not None:
                _, actions, scored = best
                return Recommendation(row.month, current, target, actions,
                                      scored.risk_score, scored.risk_level)

    logger.info('%s: no change within the bounds lowers the risk to %s', month_str(row.month), target.value)
    return Recommendation(row.month, current, target, (), row.risk_score, current)


def format_ratio(value):
    """Format a freshness ratio with at most 3 decimals and at least 1.

    >>> format_ratio(0.5), format_ratio(0.75), format_ratio(1 / 3), format_ratio(0)
    ('0.5', '0.75', '0.333', '0.0')
    """
    text = '{:.3f}'.format(value).rstrip('0')
    return text + '0' if text.endswith('.') else text


def _rate_pct(rate):
    return '{:.2f}'.format(Decimal(repr(float(rate))) * 100)


def _json_records(rows):
    return [{
        'date': month_str(r.month),
        'demand_plan_qty': r.demand_plan_qty,
        'return_rate': float(r.return_rate),
        'return_rate_pct': _rate_pct(r.return_rate),
        'expected_return_qty': r.expected_return_qty,
        'retailer_capacity': r.retailer_capacity,
        'freshness_in_months': r.freshness_in_months,
        'shelf_life_in_months': r.shelf_life_in_months,
        'freshness_ratio': float(r.freshness_ratio),
        'bg_risk_score': float(r.risk_score),
        'risk_score_capped': r.risk_score.capped,
        'risk_level': r.risk_level.value,
    } for r in rows]


def emit_risk_table(rows, format='csv', file=None, mode=None):
    """Write a risk table.

    The CSV columns are ``date, demand_plan_qty, return_rate_pct,
    expected_return_qty, retailer_capacity, freshness_in_months,
    shelf_life_in_months, freshness_ratio, bg_risk_score, risk_level``
    with the rate as a percentage with 2 decimals and the score with 3
    decimals. The JSON records keep the full precision (see
    :func:`read_risk_table`).

    Parameters
    ----------
    rows : :class:`list` of :class:`~msl.badgoods.domain.RiskRow`
        The scored months.
    format : :class:`str`, optional
        ``'csv'`` or ``'json'``.
    file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
        The file to write to. If :data:`None` then the text is returned.
    mode : :class:`str`, optional
        See :meth:`~msl.badgoods.base.Writer.write`.

    Returns
    -------
    :class:`str` or :data:`None`
        The text if `file` is :data:`None`.

    Raises
    ------
    ~msl.badgoods.errors.EmptyInput
        If there are no rows.
    """
    rows = list(rows)
    if not rows:
        raise EmptyInput('A risk table needs at least 1 row')
    fmt = str(format).lower()
    if fmt == 'csv':
        writer = CSVWriter(file, header=RISK_TABLE_COLUMNS)
        for r in rows:
            writer.add_row(month_str(r.month), r.demand_plan_qty, _rate_pct(r.return_rate),
                           r.expected_return_qty, r.retailer_capacity, r.freshness_in_months,
                           r.shelf_life_in_months, format_ratio(r.freshness_ratio),
                           '{:.3f}'.format(r.risk_score), r.risk_level.value)
    elif fmt == 'json':
        writer = JSONWriter(file, obj=_json_records(rows))
    else:
        raise ValueError('Invalid format {!r}, must be csv or json'.format(format))

    if file is None:
        return writer.text()
    writer.write(mode=mode)


class RiskTableReader(Reader):
    """Reads the JSON risk table that :func:`emit_risk_table` writes."""

    def read(self, **kwargs):
        text = '\n'.join(self.get_lines(self.file))
        if not text.strip():
            raise EmptyFile(self.source)
        try:
            records = json.loads(text)
        except ValueError as e:
            raise BadCell(e.lineno, '*', 'invalid JSON, {}'.format(e.msg), source=self.source) from None
        if not isinstance(records, list):
            raise BadCell(1, '*', 'expected a list of records', source=self.source)

        rows = []
        for i, rec in enumerate(records, start=1):
            try:
                plan = PlanRow(rec['date'], rec['demand_plan_qty'], rec['return_rate'],
                               rec['retailer_capacity'], rec['freshness_in_months'],
                               rec['shelf_life_in_months'])
                score = RiskScore(rec['bg_risk_score'], capped=rec.get('risk_score_capped', False))
                level = RiskLevel(rec['risk_level'])
                fr = freshness_ratio(plan.freshness_in_months, plan.shelf_life_in_months)
                expected = int(rec['expected_return_qty'])
            except KeyError as e:
                raise BadCell(i, e.args[0], 'missing value', source=self.source) from None
            except (TypeError, ValueError) as e:
                raise BadCell(i, '*', str(e), source=self.source) from None
            if not math.isclose(fr, rec.get('freshness_ratio', fr), rel_tol=0, abs_tol=1e-12):
                raise BadCell(i, 'freshness_ratio', 'inconsistent with the freshness and shelf life',
                              source=self.source)
            rows.append(RiskRow(*plan, expected, fr, score, level))
        return rows


def read_risk_table(file):
    """Read a JSON risk table.

    Parameters
    ----------
    file : :term:`path-like <path-like object>` or :term:`file-like <file object>`
        The file that :func:`emit_risk_table` wrote with ``format='json'``.

    Returns
    -------
    :class:`list` of :class:`~msl.badgoods.domain.RiskRow`
        The rows. The ``n``-th record is reported as line ``n`` in errors.
    """
    return RiskTableReader(file).read()


def _recommendation_records(recommendations):
    return [{
        'date': month_str(r.month),
        'current_level': r.current_level.value,
        'target_level': r.target_level.value,
        'feasible': r.feasible,
        'actions': [{'action': a.kind.value, 'to': a.to} for a in r.actions],
        'resulting_score': float(r.resulting_score),
        'resulting_level': r.resulting_level.value,
    } for r in recommendations]


def emit_recommendations(recommendations, file=None, mode=None):
    """Write recommendations as a JSON list of records.

    Parameters
    ----------
    recommendations : iterable of :class:`Recommendation`
        The recommendations.
    file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
        The file to write to. If :data:`None` then the text is returned.
    mode : :class:`str`, optional
        See :meth:`~msl.badgoods.base.Writer.write`.

    Returns
    -------
    :class:`str` or :data:`None`
        The text if `file` is :data:`None`.
    """
    writer = JSONWriter(file, obj=_recommendation_records(recommendations))
    if file is None:
        return writer.text()
    writer.write(mode=mode)


def recommend_all(rows, bounds=None, low_upper=LOW_UPPER, high_lower=HIGH_LOWER):
    """Return a :class:`Recommendation` for every row that is not Low risk."""
    return [recommend(r, bounds=bounds, low_upper=low_upper, high_lower=high_lower)
            for r in rows if r.risk_level is not RiskLevel.LOW]


def summarize(rows, recommendations=(), product_label=None, notes=()):
    """Return a plain-text summary of a scored plan.

    The High risk months are listed first, then every month with its
    score, level and guidance, then the recommendations.

    Parameters
    ----------
    rows : :class:`list` of :class:`~msl.badgoods.domain.RiskRow`
        The scored months.
    recommendations : iterable of :class:`Recommendation`, optional
        The recommendations.
    product_label : :class:`str`, optional
        The product.
    notes : iterable of :class:`str`, optional
        Extra lines to append, e.g., the run settings.

    Returns
    -------
    :class:`str`
        The summary.
    """
    rows = list(rows)
    if not rows:
        raise EmptyInput('Nothing to summarize')
    counts = dict((level, sum(1 for r in rows if r.risk_level is level)) for level in RiskLevel)
    lines = [
        'Bad-goods risk summary{}'.format(': ' + product_label if product_label else ''),
        '{} months, {} to {}: {} High, {} Medium, {} Low'.format(
            len(rows), month_str(rows[0].month), month_str(rows[-1].month),
            counts[RiskLevel.HIGH], counts[RiskLevel.MEDIUM], counts[RiskLevel.LOW]),
        '',
    ]

    high = [r for r in rows if r.risk_level is RiskLevel.HIGH]
    lines.append('High risk months ({}):'.format(RiskLevel.HIGH.guidance))
    if high:
        lines.extend('  {}  score {:.3f}'.format(month_str(r.month), r.risk_score) for r in high)
    else:
        lines.append('  none')
    lines.append('')

    lines.append('All months:')
    for r in rows:
        lines.append('  {}  {:.3f}  {:<6}  {}'.format(
            month_str(r.month), r.risk_score, r.risk_level.value, r.risk_level.guidance))

    recommendations = list(recommendations)
    if recommendations:
        lines.append('')
        lines.append('Recommendations:')
        for rec in recommendations:
            lines.append('  {}  {} -> {}: {}'.format(
                month_str(rec.month), rec.current_level.value, rec.target_level.value, rec.describe()))

    notes = list(notes)
    if notes:
        lines.append('')
        lines.extend(notes)
    return '\n'.join(lines) + '\n'
