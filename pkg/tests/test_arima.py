import math

import numpy as np
import pytest

from msl.badgoods.arima import ArimaBounds
from msl.badgoods.arima import ArimaFit
from msl.badgoods.arima import ArimaOrder
from msl.badgoods.arima import Forecast
from msl.badgoods.arima import auto_fit
from msl.badgoods.arima import css_objective
from msl.badgoods.arima import difference
from msl.badgoods.arima import fit
from msl.badgoods.arima import forecast
from msl.badgoods.arima import has_common_factor
from msl.badgoods.arima import integrate
from msl.badgoods.arima import is_admissible
from msl.badgoods.arima import min_root_modulus
from msl.badgoods.arima import psi_weights
from msl.badgoods.arima import select_order
from msl.badgoods.arima import simulate
from msl.badgoods.dataset import TimeSeries
from msl.badgoods.errors import AllCandidatesFailed
from msl.badgoods.errors import InadmissibleParams
from msl.badgoods.errors import InvalidHorizon
from msl.badgoods.errors import InvalidRange
from msl.badgoods.errors import SeedMismatch
from msl.badgoods.errors import SeriesTooShort
from msl.badgoods.errors import ZeroVariance
from msl.badgoods.stats import acf


def test_order():
    order = ArimaOrder(1, 0, 2)
    assert order == (1, 0, 2)
    assert str(order) == 'ARIMA(1,0,2)'
    assert order.has_intercept
    assert order.parameter_count == 4
    assert ArimaOrder(1, 1, 2).parameter_count == 3
    assert ArimaOrder(2.0, 1, 0) == (2, 1, 0)
    with pytest.raises(InvalidRange):
        ArimaOrder(-1, 0, 0)
    with pytest.raises(InvalidRange):
        ArimaOrder(1.5, 0, 0)


def test_bounds():
    candidates = list(ArimaBounds().candidates())
    assert len(candidates) == 48
    assert candidates[0] == (0, 0, 0)
    assert candidates[-1] == (3, 2, 3)
    assert len(set(candidates)) == 48
    assert list(ArimaBounds(1, 0, 0).candidates()) == [(0, 0, 0), (1, 0, 0)]


@pytest.mark.parametrize('d', [0, 1, 2])
def test_difference_integrate_roundtrip(d):
    for seed in range(100):
        rng = np.random.default_rng(100 * d + seed)
        x = np.cumsum(rng.normal(10, 3, size=50))
        diffs = difference(x, d)
        assert len(diffs) == 50 - d
        levels = integrate(diffs, x[:d], d)
        assert np.allclose(levels.data, x[d:], rtol=0, atol=1e-9)


def test_difference_months():
    ts = TimeSeries([1, 3, 6, 10], start_month='2024-01', field_name='bought_qty')
    once = difference(ts, 1)
    assert once.data.tolist() == [2.0, 3.0, 4.0]
    assert str(once.start_month) == '2024-02'
    assert once.field_name == 'bought_qty'
    assert difference(ts, 0) == ts
    with pytest.raises(SeriesTooShort):
        difference([1, 2], 2)


def test_integrate():
    assert integrate([1, 1, 1], [1], 1).data.tolist() == [2.0, 3.0, 4.0]
    assert integrate([5, 6], [], 0).data.tolist() == [5.0, 6.0]
    # second differences of x = t**2 are 2, the seeds are 1 and 4
    assert integrate([2, 2, 2], [1, 4], 2).data.tolist() == [9.0, 16.0, 25.0]
    with pytest.raises(SeedMismatch):
        integrate([1, 2], [1, 2], 1)
    with pytest.raises(SeedMismatch):
        integrate([1, 2], [], 1)


def test_is_admissible():
    assert is_admissible([], [])
    assert is_admissible([0.5, 0.3], [0.4])
    assert not is_admissible([0.5, 0.6], [])
    assert not is_admissible([], [-1.0])
    assert not is_admissible([1.2], [0.1])
    assert not is_admissible([float('nan')], [])
    # roots at 1/0.9 and 1/0.8 are outside of the unit circle
    assert is_admissible([1.7, -0.72], [])
    assert min_root_modulus([0.5]) == pytest.approx(2.0)
    assert min_root_modulus([]) == math.inf


def test_css_objective():
    w = np.array([1.0, -1.0, 2.0, 0.5, -0.5])
    assert css_objective([0.0], w, (0, 0, 0)) == pytest.approx(np.dot(w, w))
    # AR(1) residuals are w[t] - phi * w[t-1] for t >= 1
    e = w[1:] - 0.5 * w[:-1]
    assert css_objective([0.0, 0.5], w, (1, 0, 0)) == pytest.approx(np.dot(e, e))
    # MA(1) residuals are w[t] - theta * e[t-1] with e[-1] = 0
    e = np.zeros(5)
    for t in range(5):
        e[t] = w[t] - 0.4 * (e[t - 1] if t else 0.0)
    assert css_objective([0.4], w, (0, 1, 1)) == pytest.approx(np.dot(e, e))
    assert css_objective([0.0, 1.5], w, (1, 0, 0)) >= 1e12
    with pytest.raises(ValueError):
        css_objective([0.0], w, (1, 0, 0))


def test_fit_ar1():
    x = simulate((1, 0, 0), [0.0, 0.7], 1.0, 500, seed=2024)
    result = fit(x, (1, 0, 0))
    assert 0.62 <= result.ar_coeffs[0] <= 0.78
    assert result.ma_coeffs.size == 0
    assert result.n_effective == 499
    assert result.residuals.size == 499
    assert result.sigma2 == pytest.approx(1.0, abs=0.2)
    assert abs(result.residuals.mean()) < 0.1 * math.sqrt(result.sigma2)
    assert is_admissible(result.ar_coeffs, result.ma_coeffs)
    assert result.aic == pytest.approx(499 * math.log(result.sigma2) + 2 * 3)
    assert result.fitted_values.size == 499


def test_fit_ma1():
    x = simulate((0, 0, 1), [0.0, 0.5], 1.0, 500, seed=17)
    result = fit(x, (0, 0, 1))
    assert 0.4 <= result.ma_coeffs[0] <= 0.6
    assert result.n_effective == 500
    assert abs(result.residuals.mean()) < 0.1 * math.sqrt(result.sigma2)


def test_fit_without_intercept():
    x = simulate((1, 1, 0), [0.5], 1.0, 300, seed=8)
    result = fit(x, (1, 1, 0))
    assert result.intercept is None
    assert result.params.size == 1
    assert result.differenced.size == 299
    assert 0.35 <= result.ar_coeffs[0] <= 0.65


def test_fit_mean_model():
    result = fit([1.0, 3.0] * 10, (0, 0, 0))
    assert result.intercept == 2.0
    assert result.sigma2 == 1.0
    assert result.params.tolist() == [2.0]


def test_fit_errors():
    with pytest.raises(ZeroVariance):
        fit([5.0] * 30, (1, 0, 0))
    with pytest.raises(SeriesTooShort):
        fit(np.arange(10.0), (1, 0, 0))
    with pytest.raises(SeriesTooShort):
        fit(np.arange(12.0), (2, 1, 0))


def test_fit_read_only_and_serializable():
    x = simulate((1, 0, 1), [10.0, 0.5, 0.3], 1.0, 200, seed=5)
    result = fit(x, (1, 0, 1))
    with pytest.raises(ValueError):
        result.ar_coeffs[0] = 0.0
    d = result.to_dict()
    assert d['order'] == {'p': 1, 'd': 0, 'q': 1}
    assert len(d['ar_coeffs']) == 1
    assert len(d['ma_coeffs']) == 1
    assert d['intercept'] == pytest.approx(result.intercept)
    assert set(d) == {'order', 'ar_coeffs', 'ma_coeffs', 'intercept', 'sigma2', 'aic', 'n_effective'}
    assert is_admissible(result.ar_coeffs, result.ma_coeffs)
    # the mean of an ARMA(1,1) with c = 10 and phi = 0.5 is 20
    assert result.intercept / (1 - result.ar_coeffs[0]) == pytest.approx(20.0, abs=1.0)


def test_fit_ar1_recovery():
    hits = 0
    for seed in range(10):
        x = simulate((1, 0, 0), [0.0, 0.7], 1.0, 500, seed=seed)
        if 0.6 <= fit(x, (1, 0, 0)).ar_coeffs[0] <= 0.8:
            hits += 1
    assert hits >= 9


def test_fit_ma1_recovery():
    hits = 0
    for seed in range(10):
        x = simulate((0, 0, 1), [0.0, 0.5], 1.0, 500, seed=seed)
        if abs(fit(x, (0, 0, 1)).ma_coeffs[0] - 0.5) <= 0.1:
            hits += 1
    assert hits >= 8


def test_select_order_ar1():
    hits = 0
    for seed in range(20):
        x = simulate((1, 0, 0), [0.0, 0.7], 1.0, 300, seed=seed)
        if select_order(x, (3, 2, 3)) == (1, 0, 0):
            hits += 1
    assert hits >= 12


def test_select_order_white_noise():
    hits = 0
    for seed in range(20):
        x = simulate((0, 0, 0), [0.0], 1.0, 300, seed=1000 + seed)
        if select_order(x) == (0, 0, 0):
            hits += 1
    assert hits > 10


@pytest.mark.parametrize('seed', range(10))
def test_select_order_trend(seed):
    rng = np.random.default_rng(42 + seed)
    t = np.arange(60.0)
    x = 100.0 + 5.0 * t + rng.normal(0.0, 0.5, size=t.size)
    assert select_order(x, (3, 2, 3)).d >= 1


def test_select_order_scale_and_shift():
    # every candidate is scored over the same values, so rescaling the
    # series shifts every AIC by the same amount
    x = simulate((1, 0, 0), [0.0, 0.7], 1.0, 200, seed=3).data
    order = select_order(x, (2, 1, 2))
    assert select_order(250.0 * x + 600.0, (2, 1, 2)) == order
    assert select_order(0.01 * x, (2, 1, 2)) == order


def test_select_order_tolerance():
    x = simulate((1, 0, 0), [0.0, 0.7], 1.0, 300, seed=4)
    assert select_order(x, (1, 0, 1), aic_tolerance=1e6) == (0, 0, 0)
    with pytest.raises(InvalidRange):
        select_order(x, (1, 0, 1), aic_tolerance=-1)


def test_has_common_factor():
    assert has_common_factor([0.5], [-0.45])
    assert has_common_factor([0.7, -0.1], [-0.2])
    assert not has_common_factor([0.7], [0.3])
    assert not has_common_factor([0.7], [])
    assert not has_common_factor([], [-0.5])
    # a differencing factor cancels an MA inverse root near 1
    assert has_common_factor([], [-0.95], d=1)
    assert not has_common_factor([], [-0.5], d=1)
    assert not has_common_factor([0.5], [-0.45], distance=0.01)


def test_select_order_all_fail():
    with pytest.raises(AllCandidatesFailed):
        select_order([1.0, 2.0, 3.0, 4.0, 5.0])


def test_auto_fit():
    x = simulate((1, 0, 0), [0.0, 0.7], 1.0, 300, seed=0)
    result = auto_fit(x, (1, 0, 1))
    assert isinstance(result, ArimaFit)
    assert result.order == select_order(x, (1, 0, 1))
    # the selected model is fitted from every start
    assert result.aic == pytest.approx(fit(x, result.order).aic)


def test_true_order_aic_beats_overfit():
    wins = 0
    for seed in range(10):
        x = simulate((1, 0, 0), [0.0, 0.6], 1.0, 2000, seed=300 + seed)
        if fit(x, (1, 0, 0)).aic <= fit(x, (3, 0, 0)).aic:
            wins += 1
    assert wins > 5


def test_psi_weights():
    assert psi_weights([0.5], [0.4], 0, 3) == pytest.approx([1.0, 0.9, 0.45])
    assert psi_weights([], [0.4], 0, 3) == pytest.approx([1.0, 0.4, 0.0])
    assert psi_weights([], [], 2, 4) == pytest.approx([1.0, 2.0, 3.0, 4.0])


def test_forecast_random_walk():
    walk = ArimaFit((0, 1, 0), [], [], None, 4.0, [0.0], 0.0, 1)
    ts = TimeSeries([600, 650, 700], start_month='2024-10')
    fc = forecast(walk, ts, 3)
    assert isinstance(fc, Forecast)
    assert fc.point.tolist() == [700.0, 700.0, 700.0]
    assert fc.has_intervals
    half = 1.96 * 2.0 * np.sqrt([1.0, 2.0, 3.0])
    assert fc.upper_95 - fc.point == pytest.approx(half)
    assert fc.point - fc.lower_95 == pytest.approx(half)
    assert [str(m) for m in fc.months] == ['2025-01', '2025-02', '2025-03']
    rows = list(fc.rows())
    assert rows[0][0] == '2025-01'
    assert rows[0][1] == 700.0
    assert rows[0][2] == pytest.approx(700.0 - 3.92)


def test_forecast_ar1_reverts_to_mean():
    model = ArimaFit((1, 0, 0), [0.5], [], 5.0, 1.0, np.zeros(10), 0.0, 10)
    fc = forecast(model, [8.0, 14.0], 4)
    # mean is 10, deviations halve each step
    assert fc.point == pytest.approx([12.0, 11.0, 10.5, 10.25])
    assert fc.months is None
    assert list(fc.rows())[0][0] is None


def test_forecast_uses_last_residuals():
    model = ArimaFit((0, 0, 1), [], [0.5], 10.0, 1.0, [0.0, 2.0], 0.0, 2)
    fc = forecast(model, [10.0, 12.0], 2)
    assert fc.point.tolist() == [11.0, 10.0]


def test_forecast_interval_widths():
    x = simulate((1, 0, 0), [0.0, 0.6], 1.0, 200, seed=9)
    model = fit(x, (1, 0, 0))
    fc = forecast(model, x, 24)
    w = fc.upper_95 - fc.lower_95
    assert np.all(np.diff(w) >= -1e-12)
    # bounded by the width of the unconditional distribution
    phi = model.ar_coeffs[0]
    assert w[-1] <= 2 * 1.96 * math.sqrt(model.sigma2 / (1 - phi ** 2)) + 1e-9

    x = simulate((0, 1, 1), [0.3], 1.0, 200, seed=9)
    fc = forecast(fit(x, (0, 1, 1)), x, 12)
    assert np.all(np.diff(fc.upper_95 - fc.lower_95) > 0)


def test_forecast_errors():
    walk = ArimaFit((0, 1, 0), [], [], None, 1.0, [0.0], 0.0, 1)
    for horizon in (0, -1, 1.5):
        with pytest.raises(InvalidHorizon):
            forecast(walk, [1.0, 2.0], horizon)
    with pytest.raises(SeriesTooShort):
        forecast(ArimaFit((2, 1, 0), [0.1, 0.1], [], None, 1.0, [0.0], 0.0, 1), [1.0, 2.0], 1)


def test_simulate():
    assert simulate((0, 0, 0), [5.0], 0.0, 4, seed=1).data.tolist() == [5.0] * 4
    a = simulate((1, 1, 1), [0.3, 0.2], 2.0, 50, seed=123, start_month='2020-01')
    b = simulate((1, 1, 1), [0.3, 0.2], 2.0, 50, seed=123, start_month='2020-01')
    assert a == b
    assert str(a.start_month) == '2020-01'
    assert a != simulate((1, 1, 1), [0.3, 0.2], 2.0, 50, seed=124, start_month='2020-01')

    x = simulate((1, 0, 0), [0.0, 0.7], 1.0, 5000, seed=77)
    assert 0.65 <= acf(x, max_lag=1).coefficients[1] <= 0.75

    with pytest.raises(InadmissibleParams):
        simulate((1, 0, 0), [0.0, 1.2], 1.0, 10, seed=0)
    with pytest.raises(InadmissibleParams):
        simulate((0, 0, 1), [0.0, -1.0], 1.0, 10, seed=0)
    with pytest.raises(InvalidRange):
        simulate((0, 0, 0), [0.0], -1.0, 10, seed=0)
    with pytest.raises(InvalidRange):
        simulate((0, 0, 0), [0.0], 1.0, 0, seed=0)
