"""
The configuration of a command-line run.

The values are resolved in increasing precedence from the defaults, an
optional INI file and the command-line options. An example INI file
(every key is optional)

.. code-block:: ini

   [arima]
   max_p = 3
   max_d = 2
   max_q = 3

   [scoring]
   horizon = 12
   low_upper = 0.4
   high_lower = 0.8
   rate_source = forecast|plan
   capacity_source = forecast|plan
   gap_policy = reject|interpolate
   format = csv|json

   [recommend]
   max_demand_reduction = 0.3
   max_capacity_increase = 0.3
   step = 50
   allow_freshness = true

   [backtest]
   horizon = 1
   min_train = 24
"""
import os
from collections import namedtuple
from configparser import ConfigParser
from configparser import Error as ConfigParserError

from .arima import ArimaBounds
from .constants import D_MAX
from .constants import DEFAULT_HORIZON
from .constants import HIGH_LOWER
from .constants import LOW_UPPER
from .constants import MAX_CAPACITY_INCREASE
from .constants import MAX_DEMAND_REDUCTION
from .constants import MIN_TRAIN
from .constants import P_MAX
from .constants import Q_MAX
from .constants import RECOMMEND_STEP
from .constants import SERIES_FIELDS
from .errors import BadGoodsError
from .errors import ConfigError
from .ingest import GapPolicy
from .risk import ActionBounds
from .risk import ScoringConfig
from .risk import Source
from .utils import get_basename

COMMANDS = ('analyze', 'forecast', 'score', 'backtest', 'report')

BACKTEST_HORIZON = 1

_FORMATS = ('csv', 'json')

# (section, key) -> (option, converter name of a configparser.SectionProxy)
_INI_KEYS = {
    ('arima', 'max_p'): ('max_p', 'getint'),
    ('arima', 'max_d'): ('max_d', 'getint'),
    ('arima', 'max_q'): ('max_q', 'getint'),
    ('scoring', 'horizon'): ('horizon', 'getint'),
    ('scoring', 'low_upper'): ('low_upper', 'getfloat'),
    ('scoring', 'high_lower'): ('high_lower', 'getfloat'),
    ('scoring', 'rate_source'): ('rate_source', 'get'),
    ('scoring', 'capacity_source'): ('capacity_source', 'get'),
    ('scoring', 'gap_policy'): ('gap_policy', 'get'),
    ('scoring', 'format'): ('format', 'get'),
    ('recommend', 'max_demand_reduction'): ('max_demand_reduction', 'getfloat'),
    ('recommend', 'max_capacity_increase'): ('max_capacity_increase', 'getfloat'),
    ('recommend', 'step'): ('step', 'getint'),
    ('recommend', 'allow_freshness'): ('allow_freshness', 'getboolean'),
    ('backtest', 'horizon'): ('backtest_horizon', 'getint'),
    ('backtest', 'min_train'): ('min_train', 'getint'),
}

DEFAULTS = {
    'input_path': None,
    'plan_path': None,
    'output_dir': None,
    'gap_policy': GapPolicy.REJECT.value,
    'max_p': P_MAX,
    'max_d': D_MAX,
    'max_q': Q_MAX,
    'horizon': DEFAULT_HORIZON,
    'backtest_horizon': BACKTEST_HORIZON,
    'seed': None,
    'format': 'csv',
    'label': None,
    'min_train': MIN_TRAIN,
    'fields': SERIES_FIELDS,
    'low_upper': LOW_UPPER,
    'high_lower': HIGH_LOWER,
    'rate_source': Source.FORECAST.value,
    'capacity_source': Source.FORECAST.value,
    'max_demand_reduction': MAX_DEMAND_REDUCTION,
    'max_capacity_increase': MAX_CAPACITY_INCREASE,
    'step': RECOMMEND_STEP,
    'allow_freshness': True,
}


class RunConfig(namedtuple('RunConfig', 'command input_path plan_path output_dir gap_policy bounds '
                                        'horizon backtest_horizon seed format label min_train fields scoring actions')):
    """The validated configuration of a run.

    Create with :func:`build_config`.

    Attributes
    ----------
    command : :class:`str`
        One of ``analyze``, ``forecast``, ``score``, ``backtest`` or ``report``.
    input_path : :class:`str` or :data:`None`
        The history file.
    plan_path : :class:`str` or :data:`None`
        The plan file.
    output_dir : :class:`str`
        The directory that the outputs are written to.
    gap_policy : :class:`~msl.badgoods.ingest.GapPolicy`
        What to do with missing months in the history.
    bounds : :class:`~msl.badgoods.arima.ArimaBounds`
        The bounds of the ARIMA order selection.
    horizon : :class:`int`
        The number of months to forecast or score.
    backtest_horizon : :class:`int`
        The number of months forecast at each origin of a backtest.
    seed : :class:`int` or :data:`None`
        Recorded in the report, no command draws random numbers.
    format : :class:`str`
        ``csv`` or ``json``, the format of the risk table.
    label : :class:`str` or :data:`None`
        The product label.
    min_train : :class:`int`
        The first training window of a backtest.
    fields : :class:`tuple` of :class:`str`
        The fields to forecast or backtest.
    scoring : :class:`~msl.badgoods.risk.ScoringConfig`
        How the plan is built and scored.
    actions : :class:`~msl.badgoods.risk.ActionBounds`
        The limits of the recommendations.
    """
    __slots__ = ()


def read_ini(config):
    """Read the options in an INI file.

    Parameters
    ----------
    config : :term:`path-like <path-like object>` or :term:`file-like <file object>`
        The INI file.

    Returns
    -------
    :class:`dict`
        The options that the file specifies.

    Raises
    ------
    ~msl.badgoods.errors.ConfigError
        If the file cannot be read, or has an unknown section, key or an invalid value.
    """
    name = get_basename(config)
    try:
        if hasattr(config, 'read'):
            contents = config.read()
        else:
            with open(config, mode='rt', encoding='utf-8') as fp:
                contents = fp.read()
    except OSError as e:
        raise ConfigError('{}: {}'.format(name, e.strerror or e)) from None

    if isinstance(contents, bytes):
        contents = contents.decode('utf-8')

    cp = ConfigParser()
    try:
        cp.read_string(contents, source=name)
    except ConfigParserError as e:
        raise ConfigError('{}: {}'.format(name, ' '.join(str(e).split()))) from None

    options = {}
    for section in cp.sections():
        for key in cp[section]:
            try:
                option, getter = _INI_KEYS[(section, key)]
            except KeyError:
                raise ConfigError('{}: unknown key {!r} in section [{}]'.format(name, key, section)) from None
            try:
                options[option] = getattr(cp[section], getter)(key)
            except ValueError:
                raise ConfigError('{}: invalid value {!r} for {!r} in section [{}]'.format(
                    name, cp[section][key], key, section)) from None
    return options


def build_config(command, config_file=None, **options):
    """Create a :class:`RunConfig`.

    Parameters
    ----------
    command : :class:`str`
        The command to run.
    config_file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
        An INI file (see :func:`read_ini`).
    **options
        The command-line options. A value of :data:`None` means that the
        option was not specified.

    Returns
    -------
    :class:`RunConfig`
        The configuration.

    Raises
    ------
    ~msl.badgoods.errors.ConfigError
        If the configuration is invalid.
    """
    if command not in COMMANDS:
        raise ConfigError('Invalid command {!r}, must be one of {}'.format(command, ', '.join(COMMANDS)))

    values = dict(DEFAULTS)
    if config_file is not None:
        values.update(read_ini(config_file))
    for key, value in options.items():
        if key not in DEFAULTS:
            raise ConfigError('Unknown option {!r}'.format(key))
        if value is not None:
            if key == 'horizon' and command == 'backtest':
                key = 'backtest_horizon'
            values[key] = value

    if command in ('analyze', 'forecast', 'backtest', 'report') and not values['input_path']:
        raise ConfigError('The {} command requires --input'.format(command))
    if command in ('score', 'report') and not values['plan_path']:
        raise ConfigError('The {} command requires --plan'.format(command))
    for key in ('input_path', 'plan_path'):
        path = values[key]
        if path and not os.path.isfile(path):
            raise ConfigError('{} {!r} is not a file'.format(key.replace('_', ' ').capitalize(), path))
    if not values['output_dir']:
        raise ConfigError('The {} command requires --out'.format(command))
    if os.path.exists(values['output_dir']) and not os.path.isdir(values['output_dir']):
        raise ConfigError('--out {!r} is not a directory'.format(values['output_dir']))

    fmt = str(values['format']).lower()
    if fmt not in _FORMATS:
        raise ConfigError('Invalid format {!r}, must be csv or json'.format(values['format']))

    fields = tuple(values['fields'])
    for field in fields:
        if field not in SERIES_FIELDS:
            raise ConfigError('Invalid field {!r}, must be one of {}'.format(field, ', '.join(SERIES_FIELDS)))

    try:
        gap_policy = GapPolicy(str(values['gap_policy']).lower())
        bounds = ArimaBounds(values['max_p'], values['max_d'], values['max_q'])
        scoring = ScoringConfig(
            horizon=values['horizon'],
            capacity_source=str(values['capacity_source']).lower(),
            rate_source=str(values['rate_source']).lower(),
            low_upper=values['low_upper'],
            high_lower=values['high_lower'],
            bounds=bounds,
        )
        actions = ActionBounds(
            max_demand_reduction=values['max_demand_reduction'],
            max_capacity_increase=values['max_capacity_increase'],
            step=values['step'],
            allow_freshness=values['allow_freshness'],
        )
    except (BadGoodsError, ValueError, TypeError) as e:
        raise ConfigError(' '.join(str(e).split())) from None

    horizon = values['backtest_horizon']
    if int(horizon) != horizon or horizon < 1:
        raise ConfigError('The backtest horizon must be >= 1, got {!r}'.format(horizon))
    if int(values['min_train']) != values['min_train'] or values['min_train'] < 1:
        raise ConfigError('min_train must be >= 1, got {!r}'.format(values['min_train']))

    return RunConfig(
        command=command,
        input_path=values['input_path'],
        plan_path=values['plan_path'],
        output_dir=values['output_dir'],
        gap_policy=gap_policy,
        bounds=bounds,
        horizon=scoring.horizon,
        backtest_horizon=int(horizon),
        seed=values['seed'],
        format=fmt,
        label=values['label'],
        min_train=int(values['min_train']),
        fields=fields,
        scoring=scoring,
        actions=actions,
    )
