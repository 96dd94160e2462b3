"""
Exponential-smoothing comparators and the rolling-origin backtest.

The forecasting functions that :func:`rolling_origin_backtest` can use
are registered by name with the :func:`~msl.badgoods.utils.register`
decorator: ``'arima'``, ``'ses'`` and ``'holtwinters'``.
"""
import math
from collections import namedtuple

import numpy as np
from scipy.signal import lfilter

from .arima import Forecast
from .arima import fit as arima_fit
from .arima import forecast as arima_forecast
from .arima import select_order
from .constants import MIN_TRAIN
from .constants import SEASONAL_PERIOD
from .dataset import as_array
from .errors import EmptyInput
from .errors import InvalidHorizon
from .errors import InvalidRange
from .errors import LengthMismatch
from .errors import SeriesTooShort
from .errors import ZeroVariance
from .utils import get_forecaster
from .utils import logger
from .utils import register

SES_GRID = np.round(np.arange(1, 100) * 0.01, 2)
""":class:`numpy.ndarray`: The smoothing weights that :func:`ses_fit` tries."""

HW_GRID = np.round(np.arange(1, 10) * 0.1, 1)
""":class:`numpy.ndarray`: The smoothing weights that :func:`hw_fit` tries for each of alpha, beta and gamma."""


class SesModel(namedtuple('SesModel', 'alpha level sse')):
    """Simple exponential smoothing.

    Attributes
    ----------
    alpha : :class:`float`
        The smoothing weight, in (0, 1).
    level : :class:`float`
        The level after the last observation.
    sse : :class:`float`
        The in-sample sum of squared one-step errors.
    """
    __slots__ = ()


class HoltWintersModel(namedtuple('HoltWintersModel', 'alpha beta gamma level trend seasonals '
                                                      'period phase sse')):
    """Additive Holt-Winters smoothing.

    Attributes
    ----------
    alpha, beta, gamma : :class:`float`
        The level, trend and seasonal smoothing weights, each in (0, 1).
    level, trend : :class:`float`
        The state after the last observation.
    seasonals : :class:`numpy.ndarray`
        The ``period`` seasonal components, normalized to sum to 0.
        Component ``j`` belongs to the observations ``t`` with
        ``t % period == j``.
    period : :class:`int`
        The number of months in a season.
    phase : :class:`int`
        ``n % period``, the seasonal position of the first forecast step.
    sse : :class:`float`
        The in-sample sum of squared one-step errors.
    """
    __slots__ = ()


class BacktestReport(namedtuple('BacktestReport', 'model_name mae rmse mape fold_count horizon')):
    """The accuracy of a model in a rolling-origin backtest.

    ``mape`` is a percentage.
    """
    __slots__ = ()

    def to_row(self):
        """Return the values in the order of the backtest CSV header."""
        return (self.model_name, '{:.6f}'.format(self.mae), '{:.6f}'.format(self.rmse),
                '{:.6f}'.format(self.mape), self.fold_count, self.horizon)


def _check_fit_input(series, minimum, name):
    y = as_array(series)
    if y.size < minimum:
        raise SeriesTooShort('{} needs at least {} values, got {}'.format(name, minimum, y.size))
    if np.ptp(y) == 0:
        raise ZeroVariance('Cannot fit {} to a constant series'.format(name))
    return y


def ses_fit(series):
    """Fit simple exponential smoothing.

    The level starts at the first observation and alpha is the value of
    :data:`SES_GRID` that minimizes the sum of squared one-step errors
    (the smallest alpha wins a tie).

    Parameters
    ----------
    series : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        At least 3 values.

    Returns
    -------
    :class:`SesModel`
        The model.

    Raises
    ------
    ~msl.badgoods.errors.SeriesTooShort
        If there are fewer than 3 values.
    ~msl.badgoods.errors.ZeroVariance
        If the series is constant.
    """
    y = _check_fit_input(series, 3, 'Exponential smoothing')
    best = None
    for alpha in SES_GRID:
        levels = lfilter([alpha], [1.0, alpha - 1.0], y[1:], zi=[(1.0 - alpha) * y[0]])[0]
        predictions = np.concatenate(([y[0]], levels[:-1]))
        errors = y[1:] - predictions
        sse = float(np.dot(errors, errors))
        if best is None or sse < best.sse:
            best = SesModel(float(alpha), float(levels[-1]), sse)
    logger.debug('exponential smoothing alpha=%.2f sse=%.6g', best.alpha, best.sse)
    return best


def _hw_initial_state(y, period):
    first = y[:period].mean()
    second = y[period:2 * period].mean()
    trend = (second - first) / period
    t = np.arange(2 * period)
    line = first + (t - (period - 1) / 2.0) * trend
    seasonals = (y[:2 * period] - line).reshape(2, period).mean(axis=0)
    level = first - (period + 1) / 2.0 * trend
    return level, trend, seasonals - seasonals.mean()


def hw_fit(series, period=SEASONAL_PERIOD):
    """Fit additive Holt-Winters smoothing.

    The level, trend and seasonal components are initialized by a
    classical decomposition of the first two seasons. Every combination
    of :data:`HW_GRID` values for (alpha, beta, gamma) is tried and the
    one that minimizes the sum of squared one-step errors is kept.

    Parameters
    ----------
    series : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        At least two seasons of values.
    period : :class:`int`, optional
        The number of months in a season.

    Returns
    -------
    :class:`HoltWintersModel`
        The model.

    Raises
    ------
    ~msl.badgoods.errors.SeriesTooShort
        If there are fewer than ``2 * period`` values.
    ~msl.badgoods.errors.ZeroVariance
        If the series is constant.
    """
    period = int(period)
    if period < 1:
        raise InvalidRange('The seasonal period must be >= 1, got {}'.format(period))
    y = _check_fit_input(series, 2 * period, 'Holt-Winters')
    level0, trend0, seasonals0 = _hw_initial_state(y, period)

    alpha, beta, gamma = (g.ravel() for g in np.meshgrid(HW_GRID, HW_GRID, HW_GRID, indexing='ij'))
    count = alpha.size
    level = np.full(count, level0)
    trend = np.full(count, trend0)
    seasonals = np.tile(seasonals0, (count, 1))
    sse = np.zeros(count)
    for t, value in enumerate(y):
        j = t % period
        season = seasonals[:, j].copy()
        error = value - (level + trend + season)
        sse += error * error
        new_level = alpha * (value - season) + (1.0 - alpha) * (level + trend)
        trend = beta * (new_level - level) + (1.0 - beta) * trend
        seasonals[:, j] = gamma * (value - new_level) + (1.0 - gamma) * season
        level = new_level

    best = int(np.argmin(sse))
    s = seasonals[best]
    offset = s.mean()
    model = HoltWintersModel(
        float(alpha[best]), float(beta[best]), float(gamma[best]),
        float(level[best] + offset), float(trend[best]), s - offset,
        period, y.size % period, float(sse[best]))
    logger.debug('Holt-Winters alpha=%.1f beta=%.1f gamma=%.1f sse=%.6g',
                 model.alpha, model.beta, model.gamma, model.sse)
    return model


def forecast_baseline(model, horizon, start_month=None):
    """Forecast with an exponential-smoothing model.

    Parameters
    ----------
    model : :class:`SesModel` or :class:`HoltWintersModel`
        The model.
    horizon : :class:`int`
        The number of months to forecast.
    start_month : optional
        The month of the first forecast step.

    Returns
    -------
    :class:`~msl.badgoods.arima.Forecast`
        The point forecast, the interval arrays are empty.

    Examples
    --------
    >>> forecast_baseline(SesModel(0.5, 10.0, 0.0), 4).point.tolist()
    [10.0, 10.0, 10.0, 10.0]
    """
    if int(horizon) != horizon or horizon < 1:
        raise InvalidHorizon('The forecast horizon must be >= 1, got {!r}'.format(horizon))
    horizon = int(horizon)
    steps = np.arange(1, horizon + 1)
    if isinstance(model, SesModel):
        point = np.full(horizon, model.level)
    elif isinstance(model, HoltWintersModel):
        seasonals = np.asarray(model.seasonals, dtype=float)
        point = model.level + steps * model.trend + seasonals[(steps - 1 + model.phase) % model.period]
    else:
        raise TypeError('Cannot forecast with a {!r}'.format(model.__class__.__name__))
    return Forecast(horizon, point, start_month=start_month)


@register('arima')
def _arima_forecaster(train, horizon, order=None, bounds=None):
    if order is None:
        order = select_order(train, bounds)
    return arima_forecast(arima_fit(train, order), train, horizon).point


@register('ses')
def _ses_forecaster(train, horizon, **ignored):
    return forecast_baseline(ses_fit(train), horizon).point


@register('holtwinters')
def _hw_forecaster(train, horizon, **ignored):
    return forecast_baseline(hw_fit(train), horizon).point


_names = {
    _arima_forecaster: 'arima',
    _ses_forecaster: 'ses',
    _hw_forecaster: 'holtwinters',
}


def accuracy(actual, predicted):
    """Forecast accuracy.

    Parameters
    ----------
    actual, predicted : array-like
        The observed and the forecast values.

    Returns
    -------
    :class:`tuple` of :class:`float`
        The mean absolute error, the root-mean-square error and the mean
        absolute percentage error (in percent). Terms with an actual value
        of 0 are skipped in the percentage error, which is 0 if every
        actual value is 0.

    Examples
    --------
    >>> mae, rmse, mape = accuracy([1, 1, 4], [0, 2, 2])
    >>> round(mae, 12), round(rmse ** 2, 12)
    (1.333333333333, 2.0)
    """
    a = as_array(actual)
    f = as_array(predicted)
    if a.size != f.size:
        raise LengthMismatch('{} actual values and {} predicted values'.format(a.size, f.size))
    if not a.size:
        raise EmptyInput('Accuracy needs at least 1 value')
    errors = a - f
    mae = float(np.mean(np.abs(errors)))
    rmse = math.sqrt(float(np.mean(errors * errors)))
    nonzero = a != 0
    skipped = a.size - int(np.count_nonzero(nonzero))
    if skipped:
        logger.warning('skipped %d zero-valued actual(s) in the percentage error', skipped)
    if skipped < a.size:
        mape = 100.0 * float(np.mean(np.abs(errors[nonzero] / a[nonzero])))
    else:
        mape = 0.0
    # rmse >= mae holds exactly, not only to within rounding
    return mae, max(rmse, mae), mape


def rolling_origin_backtest(series, model_kind, horizon=1, min_train=MIN_TRAIN, order=None, bounds=None):
    """Evaluate a model by repeatedly fitting and forecasting.

    For each origin ``t = min_train .. n - horizon`` the model is fitted to
    the first ``t`` values and the next `horizon` values are forecast. The
    errors of all origins and steps are pooled. A training window that is
    constant is forecast by its constant value.

    For ``'arima'`` the order is selected once, on the first training
    window that is not constant, unless `order` is specified. The
    coefficients are refitted at every origin.

    Parameters
    ----------
    series : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        The series.
    model_kind : :class:`str`
        ``'arima'``, ``'ses'`` or ``'holtwinters'``.
    horizon : :class:`int`, optional
        The number of months forecast at each origin.
    min_train : :class:`int`, optional
        The size of the first training window.
    order : :class:`~msl.badgoods.arima.ArimaOrder`, optional
        The ARIMA order.
    bounds : :class:`~msl.badgoods.arima.ArimaBounds`, optional
        The bounds of the ARIMA order selection.

    Returns
    -------
    :class:`BacktestReport`
        The report.

    Raises
    ------
    ~msl.badgoods.errors.SeriesTooShort
        If there are fewer than ``min_train + horizon`` values.
    """
    if int(horizon) != horizon or horizon < 1:
        raise InvalidHorizon('The backtest horizon must be >= 1, got {!r}'.format(horizon))
    horizon, min_train = int(horizon), int(min_train)
    if min_train < 1:
        raise InvalidRange('min_train must be >= 1, got {}'.format(min_train))
    x = as_array(series)
    n = x.size
    if n < min_train + horizon:
        raise SeriesTooShort('A backtest with min_train={} and horizon={} needs {} values, got {}'.format(
            min_train, horizon, min_train + horizon, n))

    forecaster = get_forecaster(model_kind)
    name = _names.get(forecaster, str(model_kind))
    options = {}
    if forecaster is _arima_forecaster:
        options['order'] = order
        options['bounds'] = bounds

    actual, predicted = [], []
    origins = range(min_train, n - horizon + 1)
    for t in origins:
        train = x[:t]
        if np.ptp(train) == 0:
            point = np.full(horizon, train[0])
        else:
            if forecaster is _arima_forecaster and options['order'] is None:
                options['order'] = select_order(train, bounds)
                logger.info('backtest %s order selected at origin %d', options['order'], t)
            point = forecaster(train, horizon, **options)
        actual.append(x[t:t + horizon])
        predicted.append(point)

    mae, rmse, mape = accuracy(np.concatenate(actual), np.concatenate(predicted))
    report = BacktestReport(name, mae, rmse, mape, len(origins), horizon)
    logger.debug('backtest %s: mae=%.6g rmse=%.6g mape=%.6g folds=%d', name, mae, rmse, mape, len(origins))
    return report
