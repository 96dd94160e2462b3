"""
Constants used by MSL-BadGoods.
"""
HISTORY_COLUMNS = (
    'date',
    'bought_qty',
    'return_qty',
    'retailer_capacity',
    'freshness_in_months',
    'shelf_life_in_months',
)
""":class:`tuple` of :class:`str`: The canonical header of a history file."""

PLAN_COLUMNS = (
    'date',
    'demand_plan_qty',
    'freshness_in_months',
    'shelf_life_in_months',
)
""":class:`tuple` of :class:`str`: The required header of a plan file."""

PLAN_OVERRIDE_COLUMNS = ('return_rate_pct', 'retailer_capacity')
""":class:`tuple` of :class:`str`: The optional override columns of a plan file."""

RISK_TABLE_COLUMNS = (
    'date',
    'demand_plan_qty',
    'return_rate_pct',
    'expected_return_qty',
    'retailer_capacity',
    'freshness_in_months',
    'shelf_life_in_months',
    'freshness_ratio',
    'bg_risk_score',
    'risk_level',
)
""":class:`tuple` of :class:`str`: The header of a risk table."""

FORECAST_COLUMNS = ('date', 'point', 'lower_95', 'upper_95')
""":class:`tuple` of :class:`str`: The header of a forecast table."""

BACKTEST_COLUMNS = ('model', 'mae', 'rmse', 'mape', 'folds', 'horizon')
""":class:`tuple` of :class:`str`: The header of a backtest report."""

SERIES_FIELDS = ('bought_qty', 'return_qty', 'retailer_capacity', 'rate_of_return')
""":class:`tuple` of :class:`str`: The fields that can be forecast."""

CORRELATION_FIELDS = (
    'bought_qty',
    'return_qty',
    'rate_of_return',
    'retailer_capacity',
    'freshness_in_months',
    'shelf_life_in_months',
)
""":class:`tuple` of :class:`str`: The variables of a correlation matrix."""

LOW_UPPER = 0.4
""":class:`float`: Scores below this value are Low risk."""

HIGH_LOWER = 0.8
""":class:`float`: Scores at or above this value are High risk."""

DEFAULT_HORIZON = 12
""":class:`int`: The default number of months to forecast."""

P_MAX = 3
""":class:`int`: The default largest autoregressive order of an order search."""

D_MAX = 2
""":class:`int`: The default largest number of differences of an order search."""

Q_MAX = 3
""":class:`int`: The default largest moving-average order of an order search."""

AIC_TOLERANCE = 2.0
""":class:`float`: Candidates whose AIC is within this value of the smallest AIC are tied."""

CANCEL_DISTANCE = 0.1
""":class:`float`: AR and MA inverse roots closer than this cancel each other."""

MIN_EXTRA_OBSERVATIONS = 10
""":class:`int`: A fit needs ``n - d >= max(p, q) + MIN_EXTRA_OBSERVATIONS``."""

ROOT_MARGIN = 1e-6
""":class:`float`: Polynomial roots must satisfy ``|root| > 1 + ROOT_MARGIN``."""

UNIT_ROOT_MARGIN = 0.02
""":class:`float`: AR roots closer to the unit circle than this trigger more differencing."""

PENALTY = 1e12
""":class:`float`: Scale of the objective returned for inadmissible parameters."""

BURN_IN = 100
""":class:`int`: The number of simulated observations that are discarded."""

Z_95 = 1.96
""":class:`float`: The two-sided 95% quantile of the standard normal distribution."""

SEASONAL_PERIOD = 12
""":class:`int`: The number of months in a Holt-Winters season."""

MIN_TRAIN = 24
""":class:`int`: The default size of the first training window of a backtest."""

RECOMMEND_STEP = 50
""":class:`int`: The step size (units) when adjusting demand or capacity."""

MAX_DEMAND_REDUCTION = 0.3
""":class:`float`: The largest fraction by which a recommendation may lower the demand plan."""

MAX_CAPACITY_INCREASE = 0.3
""":class:`float`: The largest fraction by which a recommendation may raise retailer capacity."""
