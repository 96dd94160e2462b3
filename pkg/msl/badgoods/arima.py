"""
ARIMA(p, d, q) models that are estimated by conditional sum of squares.

The model of the series :math:`x` differenced :math:`d` times, :math:`w`, is

.. math::

    w_t = c + \\sum_{i=1}^p \\phi_i w_{t-i} + \\sum_{j=1}^q \\theta_j \\varepsilon_{t-j} + \\varepsilon_t

where the intercept :math:`c` is only estimated when :math:`d = 0`.

.. code-block:: pycon

    >>> x = simulate((1, 0, 0), [0.0, 0.7], 1.0, 500, seed=1)
    >>> result = fit(x, (1, 0, 0))
    >>> 0.6 < result.ar_coeffs[0] < 0.8
    True
    >>> fc = forecast(result, x, 3)
    >>> fc.horizon
    3
"""
import math
from collections import namedtuple

import numpy as np
from scipy.optimize import minimize
from scipy.signal import lfilter

from .constants import AIC_TOLERANCE
from .constants import BURN_IN
from .constants import CANCEL_DISTANCE
from .constants import D_MAX
from .constants import MIN_EXTRA_OBSERVATIONS
from .constants import P_MAX
from .constants import PENALTY
from .constants import Q_MAX
from .constants import ROOT_MARGIN
from .constants import UNIT_ROOT_MARGIN
from .constants import Z_95
from .dataset import TimeSeries
from .dataset import as_array
from .errors import AllCandidatesFailed
from .errors import InadmissibleParams
from .errors import InvalidHorizon
from .errors import InvalidRange
from .errors import OptimizerFailed
from .errors import SeedMismatch
from .errors import SeriesTooShort
from .errors import ZeroVariance
from .utils import logger
from .utils import month_str
from .utils import to_month

_PERTURBATION = 0.3
_DOMINATED = 10.0


def _order_value(value, name):
    try:
        as_float = float(value)
    except (TypeError, ValueError):
        raise InvalidRange('{} must be an integer, got {!r}'.format(name, value)) from None
    if not as_float.is_integer() or as_float < 0:
        raise InvalidRange('{} must be a non-negative integer, got {!r}'.format(name, value))
    return int(as_float)


class ArimaOrder(namedtuple('ArimaOrder', 'p d q')):
    """The (p, d, q) order of an ARIMA model.

    The order ``(0, 0, 0)`` is the mean model (white noise around an intercept).
    """
    __slots__ = ()

    def __new__(cls, p, d, q):
        return super(ArimaOrder, cls).__new__(
            cls, _order_value(p, 'p'), _order_value(d, 'd'), _order_value(q, 'q'))

    def __str__(self):
        return 'ARIMA({},{},{})'.format(*self)

    @property
    def has_intercept(self):
        """:class:`bool`: Whether an intercept is estimated (only if ``d == 0``)."""
        return self.d == 0

    @property
    def parameter_count(self):
        """:class:`int`: The number of coefficients, including the intercept."""
        return self.p + self.q + (1 if self.has_intercept else 0)


class ArimaBounds(namedtuple('ArimaBounds', 'p_max d_max q_max')):
    """The largest orders that :func:`select_order` tries."""
    __slots__ = ()

    def __new__(cls, p_max=P_MAX, d_max=D_MAX, q_max=Q_MAX):
        return super(ArimaBounds, cls).__new__(
            cls, _order_value(p_max, 'p_max'), _order_value(d_max, 'd_max'), _order_value(q_max, 'q_max'))

    def candidates(self):
        """Yield every :class:`ArimaOrder` within the bounds, ``d`` varies slowest."""
        for d in range(self.d_max + 1):
            for p in range(self.p_max + 1):
                for q in range(self.q_max + 1):
                    yield ArimaOrder(p, d, q)


class ArimaFit(namedtuple('ArimaFit', 'order ar_coeffs ma_coeffs intercept sigma2 residuals '
                                      'aic n_effective differenced')):
    """A fitted ARIMA model.

    Attributes
    ----------
    order : :class:`ArimaOrder`
        The order.
    ar_coeffs : :class:`numpy.ndarray`
        :math:`\\phi_1 .. \\phi_p`.
    ma_coeffs : :class:`numpy.ndarray`
        :math:`\\theta_1 .. \\theta_q`.
    intercept : :class:`float` or :data:`None`
        :math:`c`, :data:`None` if ``d >= 1``.
    sigma2 : :class:`float`
        The residual variance, ``SSE / n_effective``.
    residuals : :class:`numpy.ndarray`
        The one-step residuals, ``n - d - p`` values.
    aic : :class:`float`
        ``n_effective * ln(sigma2) + 2 * k``, with ``k`` the number of
        coefficients plus one for the variance.
    n_effective : :class:`int`
        ``n - d - p``.
    differenced : :class:`numpy.ndarray`
        The series after differencing ``d`` times.
    """
    __slots__ = ()

    def __new__(cls, order, ar_coeffs, ma_coeffs, intercept, sigma2, residuals, aic, n_effective,
                differenced=None):
        ar = np.array(ar_coeffs, dtype=float).ravel()
        ma = np.array(ma_coeffs, dtype=float).ravel()
        res = np.array(residuals, dtype=float).ravel()
        diffs = np.array([] if differenced is None else differenced, dtype=float).ravel()
        for a in (ar, ma, res, diffs):
            a.setflags(write=False)
        return super(ArimaFit, cls).__new__(
            cls, ArimaOrder(*order), ar, ma, None if intercept is None else float(intercept),
            float(sigma2), res, float(aic), int(n_effective), diffs)

    def __repr__(self):
        return '<ArimaFit {} sigma2={:.6g} aic={:.6g}>'.format(self.order, self.sigma2, self.aic)

    @property
    def params(self):
        """:class:`numpy.ndarray`: ``[c, phi_1..phi_p, theta_1..theta_q]``, ``c`` only if ``d == 0``."""
        head = [] if self.intercept is None else [self.intercept]
        return np.concatenate((head, self.ar_coeffs, self.ma_coeffs))

    @property
    def fitted_values(self):
        """:class:`numpy.ndarray`: The one-step predictions of the differenced series."""
        if self.differenced.size == 0:
            return np.array([])
        return self.differenced[self.order.p:] - self.residuals

    def to_dict(self):
        """Return the model as a :class:`dict` that can be serialized to JSON."""
        return {
            'order': {'p': self.order.p, 'd': self.order.d, 'q': self.order.q},
            'ar_coeffs': self.ar_coeffs.tolist(),
            'ma_coeffs': self.ma_coeffs.tolist(),
            'intercept': self.intercept,
            'sigma2': self.sigma2,
            'aic': self.aic,
            'n_effective': self.n_effective,
        }


class Forecast(namedtuple('Forecast', 'horizon point lower_95 upper_95 start_month')):
    """A forecast of the next `horizon` months.

    The interval arrays are empty for models that do not provide intervals.
    """
    __slots__ = ()

    def __new__(cls, horizon, point, lower_95=(), upper_95=(), start_month=None):
        arrays = []
        for values in (point, lower_95, upper_95):
            a = np.array(values, dtype=float).ravel()
            a.setflags(write=False)
            arrays.append(a)
        if start_month is not None:
            start_month = to_month(start_month)
        return super(Forecast, cls).__new__(cls, int(horizon), arrays[0], arrays[1], arrays[2], start_month)

    @property
    def has_intervals(self):
        """:class:`bool`: Whether the 95% interval is available."""
        return self.lower_95.size == self.horizon

    @property
    def months(self):
        """:class:`numpy.ndarray` or :data:`None`: The month of each step."""
        if self.start_month is None:
            return None
        return self.start_month + np.arange(self.horizon)

    def rows(self):
        """Yield ``(date, point, lower_95, upper_95)`` for each step.

        The date is :data:`None` if the start month is unknown and the
        bounds are :data:`None` if there are no intervals.
        """
        months = self.months
        for i in range(self.horizon):
            date = None if months is None else month_str(months[i])
            if self.has_intervals:
                yield date, float(self.point[i]), float(self.lower_95[i]), float(self.upper_95[i])
            else:
                yield date, float(self.point[i]), None, None


def difference(series, d):
    """Apply first differencing `d` times.

    Parameters
    ----------
    series : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        The series.
    d : :class:`int`
        The number of times to difference.

    Returns
    -------
    :class:`~msl.badgoods.dataset.TimeSeries`
        The ``n - d`` differences.

    Raises
    ------
    ~msl.badgoods.errors.SeriesTooShort
        If the series does not have more than `d` values.

    Examples
    --------
    >>> difference([1, 4, 9, 16], 2).data.tolist()
    [2.0, 2.0]
    """
    d = _order_value(d, 'd')
    x = as_array(series)
    if x.size <= d:
        raise SeriesTooShort('Differencing {} times needs more than {} values, got {}'.format(d, d, x.size))
    start = None
    name = None
    if isinstance(series, TimeSeries):
        name = series.field_name
        if series.start_month is not None:
            start = series.start_month + d
    return TimeSeries(np.diff(x, n=d) if d else x, start_month=start, field_name=name)


def integrate(diffs, seeds, d):
    """The inverse of :func:`difference`.

    Parameters
    ----------
    diffs : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        Values of a series that was differenced `d` times.
    seeds : array-like
        The `d` level values that immediately precede the first value of
        `diffs`. For a forecast, these are the last `d` observed levels.
    d : :class:`int`
        The differencing order.

    Returns
    -------
    :class:`~msl.badgoods.dataset.TimeSeries`
        The levels that follow the seeds, one for each value of `diffs`.

    Raises
    ------
    ~msl.badgoods.errors.SeedMismatch
        If there are not exactly `d` seeds.

    Examples
    --------
    >>> integrate([1, 1, 1], [1], 1).data.tolist()
    [2.0, 3.0, 4.0]
    """
    d = _order_value(d, 'd')
    w = as_array(diffs)
    s = np.asarray(seeds, dtype=float).ravel()
    if s.size != d:
        raise SeedMismatch('Integrating {} times needs {} seed values, got {}'.format(d, d, s.size))
    levels = w
    for k in range(d - 1, -1, -1):
        last = np.diff(s, n=k)[-1]
        levels = last + np.cumsum(levels)
    start = None
    if isinstance(diffs, TimeSeries):
        start = diffs.start_month
    return TimeSeries(levels, start_month=start, field_name=getattr(diffs, 'field_name', None))


def _is_stable(coeffs, radius):
    # step-down recursion: the roots of 1 - sum(a_i z^i) are all outside |z| = radius
    a = [c * radius ** (i + 1) for i, c in enumerate(coeffs)]
    for k in range(len(a), 0, -1):
        kappa = a[k - 1]
        if not abs(kappa) < 1.0:
            return False
        if k > 1:
            denominator = 1.0 - kappa * kappa
            a = [(a[i] + kappa * a[k - 2 - i]) / denominator for i in range(k - 1)]
    return True


def is_admissible(ar_coeffs, ma_coeffs, margin=ROOT_MARGIN):
    """Whether ARMA coefficients are stationary and invertible.

    Parameters
    ----------
    ar_coeffs : array-like
        :math:`\\phi_1 .. \\phi_p`.
    ma_coeffs : array-like
        :math:`\\theta_1 .. \\theta_q`.
    margin : :class:`float`, optional
        The roots of both polynomials must satisfy ``|root| > 1 + margin``.

    Returns
    -------
    :class:`bool`
        Whether the coefficients are admissible.

    Examples
    --------
    >>> is_admissible([0.7], [0.5])
    True
    >>> is_admissible([1.0], [])
    False
    """
    radius = 1.0 + margin
    ar = [float(c) for c in np.ravel(ar_coeffs)]
    ma = [-float(c) for c in np.ravel(ma_coeffs)]
    if not all(map(math.isfinite, ar + ma)):
        return False
    return _is_stable(ar, radius) and _is_stable(ma, radius)


def min_root_modulus(ar_coeffs):
    """The smallest modulus of the roots of :math:`1 - \\sum \\phi_i z^i`.

    Returns :data:`math.inf` if the polynomial has no roots.
    """
    poly = np.concatenate((-np.asarray(ar_coeffs, dtype=float)[::-1], [1.0]))
    roots = np.roots(poly)
    if not roots.size:
        return math.inf
    return float(np.min(np.abs(roots)))


def _split(params, order):
    params = np.asarray(params, dtype=float).ravel()
    if params.size != order.parameter_count:
        raise ValueError('{} needs {} parameters, got {}'.format(order, order.parameter_count, params.size))
    offset = 1 if order.has_intercept else 0
    c = params[0] if offset else 0.0
    return c, params[offset:offset + order.p], params[offset + order.p:]


def _lag_matrix(x, count, start):
    n = x.size
    return np.column_stack([x[start - i:n - i] for i in range(1, count + 1)])


def _residuals(w, c, phi, theta, lags=None):
    p = phi.size
    u = w[p:] - c
    if p:
        if lags is None:
            lags = _lag_matrix(w, p, p)
        u = u - lags @ phi
    if theta.size:
        return lfilter([1.0], np.concatenate(([1.0], theta)), u)
    return u


def _css(params, w, order, lags=None):
    c, phi, theta = _split(params, order)
    if not is_admissible(phi, theta):
        return PENALTY * (1.0 + float(np.dot(params, params)))
    e = _residuals(w, c, phi, theta, lags)
    sse = float(np.dot(e, e))
    if not math.isfinite(sse):
        return PENALTY * (1.0 + float(np.dot(params, params)))
    return sse


def css_objective(params, series, order):
    """The conditional sum of squared one-step residuals.

    The residuals are

    .. math::

        \\varepsilon_t = w_t - c - \\sum \\phi_i w_{t-i} - \\sum \\theta_j \\varepsilon_{t-j}

    for :math:`t = p .. n-1`, with the pre-sample residuals set to 0.

    Parameters
    ----------
    params : array-like
        ``[c, phi_1..phi_p, theta_1..theta_q]``, ``c`` only if ``order.d == 0``.
    series : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        The series, already differenced ``order.d`` times.
    order : :class:`ArimaOrder`
        The order.

    Returns
    -------
    :class:`float`
        The sum of squares. Parameters that are not stationary or not
        invertible get ``1e12 * (1 + sum(params**2))`` instead.

    Examples
    --------
    >>> css_objective([2.0], [1, 2, 3], (0, 0, 0))
    2.0
    """
    if not isinstance(order, ArimaOrder):
        order = ArimaOrder(*order)
    return _css(np.asarray(params, dtype=float), as_array(series), order)


def _hannan_rissanen(w, p, q):
    n = w.size
    zeros = np.zeros(p), np.zeros(q)
    if q == 0:
        if n - p <= p + 1:
            return zeros
        design = np.column_stack((np.ones(n - p), _lag_matrix(w, p, p)))
        coef = np.linalg.lstsq(design, w[p:], rcond=None)[0]
        return coef[1:], np.zeros(0)

    m = min(n // 3, max(p + q + 2, 8))
    if m < 1 or n - m <= m + 1:
        return zeros
    design = np.column_stack((np.ones(n - m), _lag_matrix(w, m, m)))
    coef = np.linalg.lstsq(design, w[m:], rcond=None)[0]
    e = np.zeros(n)
    e[m:] = w[m:] - design @ coef

    start = max(p, m + q)
    rows = n - start
    if rows <= p + q + 1:
        return zeros
    columns = [np.ones(rows)]
    if p:
        columns.append(_lag_matrix(w, p, start))
    columns.append(_lag_matrix(e, q, start))
    coef = np.linalg.lstsq(np.column_stack(columns), w[start:], rcond=None)[0]
    return coef[1:1 + p], coef[1 + p:]


def _shrink(phi, theta):
    for _ in range(30):
        if is_admissible(phi, theta):
            return phi, theta
        phi, theta = 0.5 * phi, 0.5 * theta
    return np.zeros_like(phi), np.zeros_like(theta)


def _starts(w, order):
    p, q = order.p, order.q
    hr_phi, hr_theta = _shrink(*_hannan_rissanen(w, p, q))
    hr = np.concatenate((hr_phi, hr_theta))
    signs = np.where(np.arange(p + q) % 2 == 0, 1.0, -1.0)
    coefficients = [
        np.zeros(p + q),
        hr,
        hr + _PERTURBATION,
        hr - _PERTURBATION,
        hr + _PERTURBATION * signs,
    ]
    mean = float(np.mean(w))
    for coeffs in coefficients:
        phi, theta = _shrink(coeffs[:p], coeffs[p:])
        if order.has_intercept:
            yield np.concatenate(([mean * (1.0 - np.sum(phi))], phi, theta))
        else:
            yield np.concatenate((phi, theta))


def _simplex(x0, order, scale):
    steps = np.full(x0.size, 0.1)
    if order.has_intercept:
        steps[0] = 0.1 * scale if scale > 0 else 0.1
    return np.vstack((x0, x0 + np.diag(steps)))


def _prepare(x, order):
    p, d, q = order
    minimum = max(p, q) + MIN_EXTRA_OBSERVATIONS
    if x.size - d < minimum:
        raise SeriesTooShort('{} needs at least {} values after differencing, got {}'.format(
            order, minimum, max(x.size - d, 0)))
    w = difference(x, d).data
    if np.ptp(w) == 0:
        raise ZeroVariance('Cannot fit {} to a series that is constant after differencing'.format(order))
    return w


def _mean_params(w, order):
    if order.has_intercept:
        return np.array([np.mean(w)])
    return np.zeros(0)


def _optimize(w, order, starts, best=None):
    # starts yields (index, x0) pairs, the best admissible result is returned
    lags = _lag_matrix(w, order.p, order.p) if order.p else None
    scale = float(np.std(w))
    fatol = 1e-9 * max(1.0, float(np.dot(w, w)))
    for index, x0 in starts:
        result = minimize(
            _css, x0, args=(w, order, lags), method='Nelder-Mead',
            options={
                'initial_simplex': _simplex(x0, order, scale),
                'xatol': 1e-5,
                'fatol': fatol,
                'maxiter': 400 * x0.size,
                'maxfev': 800 * x0.size,
                'adaptive': True,
            })
        _, phi, theta = _split(result.x, order)
        if not is_admissible(phi, theta) or not math.isfinite(result.fun):
            logger.debug('%s start %d ended outside the admissible region', order, index)
            continue
        if not result.success:
            logger.debug('%s start %d: %s', order, index, result.message)
        if best is None or result.fun < best.fun:
            best = result
    return best


def _fitted(w, order, params):
    c, phi, theta = _split(params, order)
    residuals = _residuals(w, c, phi, theta)
    n_effective = residuals.size
    sigma2 = float(np.dot(residuals, residuals)) / n_effective
    k = order.parameter_count + 1
    aic = n_effective * math.log(max(sigma2, np.finfo(float).tiny)) + 2 * k
    logger.debug('fitted %s: sigma2=%.6g aic=%.6g', order, sigma2, aic)
    return ArimaFit(order, phi, theta, c if order.has_intercept else None,
                    sigma2, residuals, aic, n_effective, differenced=w)


def fit(series, order):
    """Fit an ARIMA model by conditional sum of squares.

    The Nelder-Mead simplex search (:func:`scipy.optimize.minimize`) is
    started from five points: all zeros, a Hannan-Rissanen estimate and
    that estimate perturbed by +0.3, -0.3 and alternating signs. The best
    admissible solution is kept.

    Parameters
    ----------
    series : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        The levels of the series.
    order : :class:`ArimaOrder` or :class:`tuple`
        The (p, d, q) order.

    Returns
    -------
    :class:`ArimaFit`
        The fitted model.

    Raises
    ------
    ~msl.badgoods.errors.SeriesTooShort
        If ``n - d < max(p, q) + 10``.
    ~msl.badgoods.errors.ZeroVariance
        If the differenced series is constant.
    ~msl.badgoods.errors.OptimizerFailed
        If no start converges to admissible parameters.
    """
    if not isinstance(order, ArimaOrder):
        order = ArimaOrder(*order)
    w = _prepare(as_array(series), order)
    if order.p == 0 and order.q == 0:
        return _fitted(w, order, _mean_params(w, order))
    best = _optimize(w, order, enumerate(_starts(w, order)))
    if best is None:
        raise OptimizerFailed('No start of the simplex search converged for {}'.format(order))
    return _fitted(w, order, best.x)


def has_common_factor(ar_coeffs, ma_coeffs, d=0, distance=CANCEL_DISTANCE):
    """Whether an AR factor nearly cancels an MA factor.

    The `d` differencing factors count as AR factors with an inverse root
    of 1, so an MA inverse root close to 1 marks a series that was
    differenced too often.

    Parameters
    ----------
    ar_coeffs, ma_coeffs : array-like
        The AR and MA coefficients.
    d : :class:`int`, optional
        The differencing order.
    distance : :class:`float`, optional
        Inverse roots that are closer than this value cancel.

    Returns
    -------
    :class:`bool`
        Whether the model has a (nearly) common factor.

    Examples
    --------
    >>> has_common_factor([0.5], [-0.45])
    True
    >>> has_common_factor([0.7], [0.3])
    False
    >>> has_common_factor([], [-0.95], d=1)
    True
    """
    ma = np.roots(np.concatenate(([1.0], np.asarray(ma_coeffs, dtype=float).ravel())))
    ar = np.concatenate((np.roots(np.concatenate(([1.0], -np.asarray(ar_coeffs, dtype=float).ravel()))),
                         np.ones(int(d))))
    if not ma.size or not ar.size:
        return False
    return bool(np.min(np.abs(ar[:, np.newaxis] - ma[np.newaxis, :])) < distance)


def _common_aic(result, start):
    # residual i is the one-step error of level d + p + i
    p, d, _ = result.order
    e = result.residuals[start - d - p:]
    sigma2 = float(np.dot(e, e)) / e.size
    return e.size * math.log(max(sigma2, np.finfo(float).tiny)) + 2 * (result.order.parameter_count + 1)


def _candidate(x, order, start, threshold):
    w = _prepare(x, order)
    if order.p == 0 and order.q == 0:
        result = _fitted(w, order, _mean_params(w, order))
        return result, _common_aic(result, start)
    starts = list(enumerate(_starts(w, order)))
    best = _optimize(w, order, starts[:2])
    if best is not None:
        result = _fitted(w, order, best.x)
        score = _common_aic(result, start)
        if score > threshold:
            logger.debug('%s is dominated, the perturbed starts are skipped', order)
            return result, score
    best = _optimize(w, order, starts[2:], best=best)
    if best is None:
        raise OptimizerFailed('No start of the simplex search converged for {}'.format(order))
    result = _fitted(w, order, best.x)
    return result, _common_aic(result, start)


def _search(series, bounds, unit_root_margin, aic_tolerance):
    if bounds is None:
        bounds = ArimaBounds()
    elif not isinstance(bounds, ArimaBounds):
        bounds = ArimaBounds(*bounds)
    if not aic_tolerance >= 0:
        raise InvalidRange('aic_tolerance must be >= 0, got {!r}'.format(aic_tolerance))

    x = as_array(series)
    candidates = list(bounds.candidates())
    sizes = [o.d + o.p for o in candidates if x.size - o.d >= max(o.p, o.q) + MIN_EXTRA_OBSERVATIONS]
    if not sizes:
        raise AllCandidatesFailed('No order within {} could be fitted to a series of length {}'.format(
            tuple(bounds), x.size))
    # every candidate is scored on the levels that follow the first `start` values
    start = max(sizes)

    scored = []
    failures = 0
    leader = math.inf
    for order in candidates:
        try:
            result, score = _candidate(x, order, start, leader + aic_tolerance + _DOMINATED)
        except (SeriesTooShort, ZeroVariance, OptimizerFailed) as e:
            logger.debug('skipped %s [%s]', order, e)
            failures += 1
            continue
        if unit_root_margin > 0 and order.p and order.d < bounds.d_max:
            modulus = min_root_modulus(result.ar_coeffs)
            if modulus < 1.0 + unit_root_margin:
                logger.debug('skipped %s, AR root modulus %.4f is near the unit circle', order, modulus)
                continue
        if order.q and has_common_factor(result.ar_coeffs, result.ma_coeffs, order.d):
            logger.debug('skipped %s, an AR or differencing factor cancels an MA factor', order)
            continue
        leader = min(leader, score)
        scored.append((score, result))

    if not scored:
        raise AllCandidatesFailed('No order within {} could be fitted to a series of length {}'.format(
            tuple(bounds), x.size))
    tied = [item for item in scored if item[0] <= leader + aic_tolerance]
    score, best = min(tied, key=lambda item: (sum(item[1].order), item[1].order.d, item[1].order.p))
    logger.debug('selected %s, aic=%.6g over %d values (%d candidates failed)',
                 best.order, score, x.size - start, failures)
    return best


def select_order(series, bounds=None, unit_root_margin=UNIT_ROOT_MARGIN, aic_tolerance=AIC_TOLERANCE):
    """Select the order that minimizes the AIC.

    Every order within the `bounds` is fitted. The AIC of every candidate
    is evaluated over the same values, those that follow the first
    ``d + p`` values of the largest fitted candidate, so that candidates
    that condition on fewer values are not penalized. Candidates whose
    AIC is within `aic_tolerance` of the smallest AIC are tied. Ties are
    broken by the smaller ``p + d + q``, then the smaller ``d``, then the
    smaller ``p``.

    Orders that cannot be fitted are skipped, and so are orders that have
    an AR (or differencing) factor that nearly cancels an MA factor (see
    :func:`has_common_factor`), since a smaller order within the bounds
    describes the same model.

    Parameters
    ----------
    series : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        The levels of the series.
    bounds : :class:`ArimaBounds` or :class:`tuple`, optional
        ``(p_max, d_max, q_max)``. Default is ``(3, 2, 3)``.
    unit_root_margin : :class:`float`, optional
        A candidate with ``d < d_max`` whose fitted AR polynomial has a
        root modulus below ``1 + unit_root_margin`` is skipped, since the
        series needs more differencing. Set to 0 to disable.
    aic_tolerance : :class:`float`, optional
        AIC differences up to this value count as ties. Set to 0 to select
        the smallest AIC.

    Returns
    -------
    :class:`ArimaOrder`
        The selected order.

    Raises
    ------
    ~msl.badgoods.errors.AllCandidatesFailed
        If no candidate could be fitted.
    """
    return _search(series, bounds, unit_root_margin, aic_tolerance).order


def auto_fit(series, bounds=None, unit_root_margin=UNIT_ROOT_MARGIN, aic_tolerance=AIC_TOLERANCE):
    """Select the order (see :func:`select_order`) and return its :class:`ArimaFit`."""
    return _search(series, bounds, unit_root_margin, aic_tolerance)


def psi_weights(ar_coeffs, ma_coeffs, d, count):
    """The weights of the infinite moving-average form of an ARIMA model.

    The weights are the coefficients of
    :math:`\\theta(B) / (\\phi(B) (1 - B)^d)`.

    Parameters
    ----------
    ar_coeffs, ma_coeffs : array-like
        The AR and MA coefficients.
    d : :class:`int`
        The differencing order.
    count : :class:`int`
        The number of weights, :math:`\\psi_0 = 1` is the first.

    Returns
    -------
    :class:`numpy.ndarray`
        The weights.

    Examples
    --------
    >>> psi_weights([], [], 1, 4).tolist()
    [1.0, 1.0, 1.0, 1.0]
    >>> psi_weights([0.5], [], 0, 3).tolist()
    [1.0, 0.5, 0.25]
    """
    denominator = np.concatenate(([1.0], -np.asarray(ar_coeffs, dtype=float).ravel()))
    for _ in range(int(d)):
        denominator = np.convolve(denominator, [1.0, -1.0])
    numerator = np.concatenate(([1.0], np.asarray(ma_coeffs, dtype=float).ravel()))
    impulse = np.zeros(int(count))
    if impulse.size:
        impulse[0] = 1.0
    return lfilter(numerator, denominator, impulse)


def forecast(fit, last_levels, horizon):
    """Forecast the levels of a series.

    Future residuals are 0 and the in-sample residuals of `fit` are used
    for the MA terms. The 95% interval of step :math:`h` is
    :math:`\\pm 1.96 \\sigma \\sqrt{\\sum_{i<h} \\psi_i^2}`.

    Parameters
    ----------
    fit : :class:`ArimaFit`
        The fitted model.
    last_levels : :class:`~msl.badgoods.dataset.TimeSeries` or array-like
        The most recent levels of the series, at least ``p + d`` values
        (the whole series may be passed in). If a
        :class:`~msl.badgoods.dataset.TimeSeries` with a start month, the
        forecast starts the month after its last value.
    horizon : :class:`int`
        The number of months to forecast.

    Returns
    -------
    :class:`Forecast`
        The forecast.

    Raises
    ------
    ~msl.badgoods.errors.InvalidHorizon
        If `horizon` is less than 1.

    Examples
    --------
    >>> walk = ArimaFit((0, 1, 0), [], [], None, 1.0, [0.0], 0.0, 1)
    >>> forecast(walk, [650, 700], 3).point.tolist()
    [700.0, 700.0, 700.0]
    """
    if int(horizon) != horizon or horizon < 1:
        raise InvalidHorizon('The forecast horizon must be >= 1, got {!r}'.format(horizon))
    horizon = int(horizon)
    p, d, q = fit.order
    x = as_array(last_levels)
    if x.size < p + d or x.size < 1:
        raise SeriesTooShort('{} needs the last {} levels to forecast, got {}'.format(
            fit.order, max(p + d, 1), x.size))

    w = np.diff(x, n=d) if d else x
    c = fit.intercept or 0.0
    history = list(w[w.size - p:]) if p else []
    shocks = list(fit.residuals[max(fit.residuals.size - q, 0):]) if q else []
    shocks = [0.0] * (q - len(shocks)) + shocks

    predicted = np.empty(horizon)
    for h in range(horizon):
        value = c
        for i in range(1, p + 1):
            value += fit.ar_coeffs[i - 1] * history[-i]
        for j in range(1, q + 1):
            value += fit.ma_coeffs[j - 1] * shocks[-j]
        predicted[h] = value
        if p:
            history.append(value)
        if q:
            shocks.append(0.0)

    point = integrate(predicted, x[x.size - d:], d).data if d else predicted
    psi = psi_weights(fit.ar_coeffs, fit.ma_coeffs, d, horizon)
    half_width = Z_95 * np.sqrt(fit.sigma2 * np.cumsum(psi * psi))

    start = None
    if isinstance(last_levels, TimeSeries) and last_levels.end_month is not None:
        start = last_levels.end_month + 1
    return Forecast(horizon, point, point - half_width, point + half_width, start)


def simulate(order, params, sigma, n, seed, start_month=None):
    """Simulate a sample path of an ARIMA process.

    The innovations are Gaussian and the first 100 observations of the
    ARMA part are discarded.

    Parameters
    ----------
    order : :class:`ArimaOrder` or :class:`tuple`
        The (p, d, q) order.
    params : array-like
        ``[c, phi_1..phi_p, theta_1..theta_q]``, ``c`` only if ``d == 0``.
    sigma : :class:`float`
        The standard deviation of the innovations.
    n : :class:`int`
        The number of values.
    seed : :class:`int`
        The seed of :func:`numpy.random.default_rng`.
    start_month : optional
        The month of the first value.

    Returns
    -------
    :class:`~msl.badgoods.dataset.TimeSeries`
        The series.

    Raises
    ------
    ~msl.badgoods.errors.InadmissibleParams
        If the parameters are not stationary or not invertible.

    Examples
    --------
    >>> simulate((0, 0, 0), [5.0], 0.0, 3, seed=0).data.tolist()
    [5.0, 5.0, 5.0]
    """
    if not isinstance(order, ArimaOrder):
        order = ArimaOrder(*order)
    n = int(n)
    if n < 1:
        raise InvalidRange('n must be >= 1, got {}'.format(n))
    if not sigma >= 0:
        raise InvalidRange('sigma must be >= 0, got {!r}'.format(sigma))
    c, phi, theta = _split(params, order)
    if not is_admissible(phi, theta):
        raise InadmissibleParams('The parameters of {} are not stationary or not invertible: {}'.format(
            order, np.asarray(params, dtype=float).tolist()))

    rng = np.random.default_rng(seed)
    innovations = sigma * rng.standard_normal(n + BURN_IN)
    mean = c / (1.0 - np.sum(phi))
    w = mean + lfilter(np.concatenate(([1.0], theta)), np.concatenate(([1.0], -phi)), innovations)
    values = w[BURN_IN:]
    for _ in range(order.d):
        values = np.cumsum(values)
    return TimeSeries(values, start_month=start_month, field_name='simulated')
