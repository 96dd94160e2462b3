"""
The ``msl-badgoods`` command-line interface.

Each command reads the history and/or the plan file and writes tables to
the ``--out`` directory (existing files are overwritten)

* ``analyze``: summary statistics, autocorrelation functions, histograms,
  the correlation matrix, the rate-of-return vs capacity pairs and the
  validated history
* ``forecast``: a forecast table for each field and the fitted models
* ``score``: the risk table and the recommendations
* ``backtest``: the accuracy of ARIMA, exponential smoothing and
  Holt-Winters for each field
* ``report``: all of the above, a plain-text summary and the log of the run

A run that fails prints one line to stderr::

    error: code=<exit code> type=<exception class> message=<message>
"""
import argparse
import logging
import os
import sys

import numpy as np

from . import __version__
from .baselines import rolling_origin_backtest
from .config import COMMANDS
from .config import build_config
from .constants import BACKTEST_COLUMNS
from .constants import CORRELATION_FIELDS
from .constants import FORECAST_COLUMNS
from .errors import BadGoodsError
from .ingest import extract_series
from .ingest import parse_csv
from .ingest import parse_plan_csv
from .ingest import to_csv
from .ingest import validate
from .risk import build_plan
from .risk import emit_recommendations
from .risk import emit_risk_table
from .risk import forecast_fields
from .risk import recommend_all
from .risk import score_plan
from .risk import summarize
from .runlog import RunLog
from .stats import acf
from .stats import correlation_matrix
from .stats import histogram
from .stats import scatter
from .stats import summary
from .utils import get_basename
from .utils import logger
from .utils import month_str
from .writers import CSVWriter
from .writers import JSONWriter

BACKTEST_MODELS = ('arima', 'ses', 'holtwinters')


def _number(value):
    if value is None or np.isnan(value):
        return ''
    return '{:.6f}'.format(value)


def _write_csv(config, name, header, rows):
    CSVWriter(os.path.join(config.output_dir, name), header=header, rows=rows).write(mode='w')
    logger.info('wrote %s', name)


def _write_json(config, name, obj):
    JSONWriter(os.path.join(config.output_dir, name), obj=obj).write(mode='w')
    logger.info('wrote %s', name)


def load_history(config):
    """Read and validate the history file of a run."""
    dataset = parse_csv(config.input_path, product_label=config.label)
    dataset = validate(dataset, gap_policy=config.gap_policy)
    logger.info('%s: %d months, %s to %s', get_basename(config.input_path), len(dataset),
                month_str(dataset.span[0]), month_str(dataset.span[1]))
    return dataset


def run_analyze(config, history):
    """Write the descriptive statistics.

    Every table that can be calculated is written.

    Returns
    -------
    :class:`list` of :class:`~msl.badgoods.errors.BadGoodsError`
        The errors of the tables that could not be calculated.
    """
    errors = []

    def attempt(name, func, *args):
        try:
            return func(*args)
        except BadGoodsError as e:
            logger.warning('%s: %s', name, e)
            errors.append(e)

    series = {}
    for field in CORRELATION_FIELDS:
        s = attempt(field, extract_series, history, field)
        if s is not None:
            series[field] = s

    rows = []
    for field, s in series.items():
        result = summary(s)
        rows.append((field, _number(result.mean), _number(result.std), _number(result.min),
                     _number(result.max), result.n))
    _write_csv(config, 'summary.csv', ('field', 'mean', 'std', 'min', 'max', 'n'), rows)

    for field, s in series.items():
        if np.ptp(s.data) == 0:
            logger.info('%s is constant, skipped its ACF', field)
            result = None
        else:
            result = attempt('acf {}'.format(field), acf, s)
        if result is not None:
            band = result.confidence_half_width
            _write_csv(config, 'acf_{}.csv'.format(field), ('lag', 'acf', 'lower_95', 'upper_95'),
                       [(int(k), _number(c), _number(-band), _number(band))
                        for k, c in zip(result.lags, result.coefficients)])

        result = attempt('histogram {}'.format(field), histogram, s)
        if result is not None:
            edges = result.bin_edges
            _write_csv(config, 'histogram_{}.csv'.format(field), ('bin_lower', 'bin_upper', 'count'),
                       [(_number(edges[i]), _number(edges[i + 1]), int(c)) for i, c in enumerate(result.counts)])

    matrix = attempt('correlation', correlation_matrix, history)
    if matrix is not None:
        names = matrix.variable_names
        _write_csv(config, 'correlation.csv', ('variable',) + names,
                   [(a,) + tuple(_number(matrix.entry(a, b)) for b in names) for a in names])

    pairs = attempt('scatter', scatter, history)
    if pairs is not None:
        months, x, y, r = pairs
        logger.info('rate_of_return vs retailer_capacity: r=%s', _number(r) or 'undefined')
        _write_csv(config, 'scatter_rate_capacity.csv', ('date', 'rate_of_return', 'retailer_capacity'),
                   [(month_str(m), _number(a), int(b)) for m, a, b in zip(months, x, y)])

    to_csv(history, os.path.join(config.output_dir, 'history.csv'), mode='w')
    return errors


def run_forecast(config, history):
    """Forecast the fields of the history and write the tables and the models."""
    forecasts = forecast_fields(history, config.fields, config.bounds, config.horizon)
    models = {}
    for item in forecasts:
        _write_csv(config, 'forecast_{}.csv'.format(item.field), FORECAST_COLUMNS,
                   [(date, _number(p), _number(lo), _number(hi)) for date, p, lo, hi in item.forecast.rows()])
        if item.fit is None:
            models[item.field] = {'constant': float(item.forecast.point[0])}
        else:
            models[item.field] = item.fit.to_dict()
    _write_json(config, 'models.json', models)
    return forecasts


def run_score(config, history):
    """Build and score the plan, then write the risk table and the recommendations."""
    plan = parse_plan_csv(config.plan_path)
    rows = build_plan(history, plan, config.scoring)
    scoring = config.scoring
    scored = score_plan(rows, low_upper=scoring.low_upper, high_lower=scoring.high_lower)
    name = 'risk_table.{}'.format(config.format)
    emit_risk_table(scored, format=config.format, file=os.path.join(config.output_dir, name), mode='w')
    logger.info('wrote %s', name)
    recommendations = recommend_all(scored, bounds=config.actions,
                                    low_upper=scoring.low_upper, high_lower=scoring.high_lower)
    emit_recommendations(recommendations, file=os.path.join(config.output_dir, 'recommendations.json'), mode='w')
    logger.info('wrote recommendations.json')
    return scored, recommendations


def run_backtest(config, history):
    """Backtest each model on each field and write the reports."""
    reports = {}
    for field in config.fields:
        series = extract_series(history, field)
        reports[field] = [rolling_origin_backtest(series, kind, horizon=config.backtest_horizon,
                                                  min_train=config.min_train, bounds=config.bounds)
                          for kind in BACKTEST_MODELS]
        _write_csv(config, 'backtest_{}.csv'.format(field), BACKTEST_COLUMNS,
                   [r.to_row() for r in reports[field]])
    return reports


def run_report(config, history):
    """Run every command, then write the summary and the log of the run."""
    with RunLog() as runlog:
        errors = run_analyze(config, history)
        run_forecast(config, history)
        scored, recommendations = run_score(config, history)
        run_backtest(config, history)
        notes = [
            'Run settings:',
            '  input: {}'.format(get_basename(config.input_path)),
            '  plan: {}'.format(get_basename(config.plan_path)),
            '  arima bounds: p<={} d<={} q<={}'.format(*config.bounds),
            '  thresholds: low < {} <= medium < {} <= high'.format(
                config.scoring.low_upper, config.scoring.high_lower),
            '  seed: {}'.format(config.seed),
        ]
        if errors:
            notes.append('Partial analysis, {} table(s) could not be calculated'.format(len(errors)))
        text = summarize(scored, recommendations, product_label=history.product_label, notes=notes)
        with open(os.path.join(config.output_dir, 'summary.txt'), mode='wt', encoding='utf-8', newline='\n') as fp:
            fp.write(text)
        logger.info('wrote summary.txt')
    runlog.to_csv(os.path.join(config.output_dir, 'run_log.csv'), mode='w')
    return errors


def run(config):
    """Run a command.

    Parameters
    ----------
    config : :class:`~msl.badgoods.config.RunConfig`
        The configuration.

    Returns
    -------
    :class:`int`
        0.

    Raises
    ------
    ~msl.badgoods.errors.BadGoodsError
        If the command fails. For ``analyze`` and ``report`` the tables that
        could be calculated are written before the first error is raised.
    """
    os.makedirs(config.output_dir, exist_ok=True)
    history = None
    if config.input_path:
        history = load_history(config)

    errors = []
    if config.command == 'analyze':
        errors = run_analyze(config, history)
    elif config.command == 'forecast':
        run_forecast(config, history)
    elif config.command == 'score':
        run_score(config, history)
    elif config.command == 'backtest':
        run_backtest(config, history)
    else:
        errors = run_report(config, history)

    if errors:
        logger.warning('partial output, %d table(s) could not be calculated', len(errors))
        raise errors[0]
    return 0


def create_parser():
    """Create the :class:`argparse.ArgumentParser` of ``msl-badgoods``."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', help='the history CSV file')
    common.add_argument('--plan', help='the plan CSV file')
    common.add_argument('--out', help='the directory to write the outputs to')
    common.add_argument('--config', help='an INI file of default options')
    common.add_argument('--horizon', type=int,
                        help='the months to forecast or score [default: 12], '
                             'for backtest the months forecast at each origin [default: 1]')
    common.add_argument('--max-p', type=int, help='the largest AR order [default: 3]')
    common.add_argument('--max-d', type=int, help='the largest differencing order [default: 2]')
    common.add_argument('--max-q', type=int, help='the largest MA order [default: 3]')
    common.add_argument('--gap-policy', choices=('reject', 'interpolate'),
                        help='what to do with missing months [default: reject]')
    common.add_argument('--format', choices=('csv', 'json'), help='the format of the risk table [default: csv]')
    common.add_argument('--seed', type=int, help='recorded in the report')
    common.add_argument('--label', help='the product label')
    common.add_argument('--min-train', type=int, help='the first training window of a backtest [default: 24]')
    common.add_argument('--field', action='append', dest='fields',
                        help='a field to forecast or backtest, can be repeated [default: all]')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG')
    common.add_argument('--quiet', action='store_true', help='only log errors')

    parser = argparse.ArgumentParser(
        prog='msl-badgoods',
        description='Forecast monthly sales, returns and capacity and score the bad-goods risk of a demand plan.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    descriptions = {
        'analyze': 'write descriptive statistics of the history',
        'forecast': 'forecast the fields of the history',
        'score': 'score the plan and recommend mitigations',
        'backtest': 'compare ARIMA, exponential smoothing and Holt-Winters',
        'report': 'run every command and write a summary',
    }
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common], help=descriptions[command],
                              description=descriptions[command])
    return parser


def configure_logging(verbose=0, quiet=False):
    """Configure logging to stderr."""
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    logging.basicConfig(level=level, handlers=[handler])


def format_error(error):
    """Return the single-line description of an error that ends a run."""
    code = error.exit_code if isinstance(error, BadGoodsError) else 1
    return 'error: code={} type={} message={}'.format(code, error.__class__.__name__, ' '.join(str(error).split()))


def main(argv=None):
    """The entry point of ``msl-badgoods``.

    Parameters
    ----------
    argv : :class:`list` of :class:`str`, optional
        The arguments. Default is :data:`sys.argv`.

    Returns
    -------
    :class:`int`
        The exit code.
    """
    args = create_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        config = build_config(
            args.command,
            config_file=args.config,
            input_path=args.input,
            plan_path=args.plan,
            output_dir=args.out,
            gap_policy=args.gap_policy,
            max_p=args.max_p,
            max_d=args.max_d,
            max_q=args.max_q,
            horizon=args.horizon,
            seed=args.seed,
            format=args.format,
            label=args.label,
            min_train=args.min_train,
            fields=tuple(args.fields) if args.fields else None,
        )
        return run(config)
    except BadGoodsError as e:
        print(format_error(e), file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.debug('unexpected error', exc_info=True)
        print(format_error(e), file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
