import datetime
import os
from io import StringIO

import numpy as np
import pytest

from msl.badgoods import utils


def test_to_month():
    assert str(utils.to_month('2025-01')) == '2025-01'
    assert str(utils.to_month('2025-1')) == '2025-01'
    assert str(utils.to_month(' 2025-01-31 ')) == '2025-01'
    assert str(utils.to_month(datetime.date(2024, 2, 29))) == '2024-02'
    assert str(utils.to_month(np.datetime64('2024-02-10'))) == '2024-02'
    assert utils.to_month('2025-01').dtype == np.dtype('datetime64[M]')
    for bad in ('2025', '2025-13', '2025-00', '25-01', 'Jan 2025', '2023-02-29', ''):
        with pytest.raises(ValueError):
            utils.to_month(bad)
    with pytest.raises(ValueError):
        utils.to_month(np.datetime64('NaT'))


def test_month_range():
    months = utils.month_range('2024-11', 3)
    assert [utils.month_str(m) for m in months] == ['2024-11', '2024-12', '2025-01']


@pytest.mark.parametrize(
    ('value', 'expected'),
    [(0.5, 1), (1.5, 2), (2.5, 3), (93.85, 94), (160.72, 161), (-0.5, -1), (4.49, 4), (301.8, 302)])
def test_round_half_up(value, expected):
    assert utils.round_half_up(value) == expected


def test_get_basename():
    assert utils.get_basename('/a/b/c.csv') == 'c.csv'
    assert utils.get_basename(StringIO()) == 'StringIO'

    class Named(object):
        name = os.path.join('x', 'plan.csv')

    assert utils.get_basename(Named()) == 'plan.csv'


def test_is_file_readable():
    assert utils.is_file_readable(__file__)
    assert not utils.is_file_readable('does-not-exist.csv')
    with pytest.raises(OSError):
        utils.is_file_readable('does-not-exist.csv', strict=True)


def test_register():

    @utils.register('Test-Only')
    def forecaster(train, horizon):
        return [train[-1]] * horizon

    try:
        assert utils.get_forecaster('testonly') is forecaster
        assert utils.get_forecaster('TEST_ONLY') is forecaster
    finally:
        utils._forecasters.pop('testonly', None)
    with pytest.raises(ValueError):
        utils.get_forecaster('test-only')
