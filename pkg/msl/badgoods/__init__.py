"""
Forecast monthly sales, returns and retailer capacity and score the
bad-goods risk of a demand plan.
"""
import re
from collections import namedtuple

from .arima import ArimaBounds
from .arima import ArimaFit
from .arima import ArimaOrder
from .arima import Forecast
from .arima import auto_fit
from .arima import difference
from .arima import fit
from .arima import forecast
from .arima import integrate
from .arima import select_order
from .arima import simulate
from .baselines import BacktestReport
from .baselines import forecast_baseline
from .baselines import hw_fit
from .baselines import rolling_origin_backtest
from .baselines import ses_fit
from .dataset import Dataset
from .dataset import TimeSeries
from .domain import MonthlyRecord
from .domain import PlanRow
from .domain import RiskLevel
from .domain import RiskRow
from .domain import bad_goods_risk_score
from .domain import classify_risk
from .domain import expected_return_qty
from .domain import freshness_ratio
from .domain import inventory_capacity
from .domain import return_rate
from .errors import BadGoodsError
from .ingest import GapPolicy
from .ingest import extract_series
from .ingest import parse_csv
from .ingest import parse_plan_csv
from .ingest import validate
from .risk import ScoringConfig
from .risk import build_plan
from .risk import emit_risk_table
from .risk import recommend
from .risk import score_plan
from .stats import acf
from .stats import correlation_matrix
from .stats import histogram
from .stats import pearson
from .utils import logger

__author__ = 'Measurement Standards Laboratory of New Zealand'
__copyright__ = '\xa9 2018 - 2025, ' + __author__
__version__ = '0.1.0.dev0'

_v = re.search(r'(\d+)\.(\d+)\.(\d+)[.-]?(.*)', __version__).groups()

version_info = namedtuple('version_info', 'major minor micro releaselevel')(int(_v[0]), int(_v[1]), int(_v[2]), _v[3])
""":obj:`~collections.namedtuple`: Contains the version information as a (major, minor, micro, releaselevel) tuple."""


def score_files(plan, history=None, config=None, gap_policy=GapPolicy.REJECT):
    """Read a plan file (and a history file) and score the plan.

    Parameters
    ----------
    plan : :term:`path-like <path-like object>` or :term:`file-like <file object>`
        The plan file.
    history : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
        The history file. Only required if the plan does not specify the
        return rate and the retailer capacity of every month.
    config : :class:`~msl.badgoods.risk.ScoringConfig`, optional
        The configuration. The horizon defaults to the number of plan months.
    gap_policy : :class:`~msl.badgoods.ingest.GapPolicy`, optional
        What to do with missing months in the history.

    Returns
    -------
    :class:`list` of :class:`~msl.badgoods.domain.RiskRow`
        The scored months.
    """
    inputs = parse_plan_csv(plan)
    dataset = None
    if history is not None:
        dataset = validate(parse_csv(history), gap_policy=gap_policy)
    if config is None:
        config = ScoringConfig(horizon=len(inputs))
    logger.debug('scoring %d plan months', len(inputs))
    rows = build_plan(dataset, inputs, config)
    return score_plan(rows, low_upper=config.low_upper, high_lower=config.high_lower)
