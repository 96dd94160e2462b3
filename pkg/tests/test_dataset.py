import numpy as np
import pytest

from helper import make_dataset
from msl.badgoods.dataset import Dataset
from msl.badgoods.dataset import TimeSeries
from msl.badgoods.dataset import as_array
from msl.badgoods.domain import MonthlyRecord
from msl.badgoods.errors import EmptyInput
from msl.badgoods.errors import InvalidRange


def test_dataset_sorted_and_read_only():
    records = [
        MonthlyRecord('2024-03', 700, 140, 527, 3, 4),
        MonthlyRecord('2024-01', 500, 100, 520, 2, 4),
        ('2024-02', 600, 120, 590, 1, 4),
    ]
    dset = Dataset(records, product_label='Beer-G', source='beer.csv')
    assert len(dset) == 3
    assert dset.product_label == 'Beer-G'
    assert dset.metadata == {'source': 'beer.csv'}
    assert [str(m) for m in dset.months] == ['2024-01', '2024-02', '2024-03']
    assert dset.column('bought_qty').tolist() == [500, 600, 700]
    assert [str(m) for m in dset.span] == ['2024-01', '2024-03']
    assert repr(dset) == "<Dataset 'Beer-G' 2024-01..2024-03 (3 records)>"

    first = dset[0]
    assert isinstance(first, MonthlyRecord)
    assert first.return_qty == 100
    assert [r.bought_qty for r in dset] == [500, 600, 700]

    with pytest.raises(ValueError):
        dset.data['bought_qty'][0] = 1
    with pytest.raises(ValueError, match=r'Invalid column name'):
        dset.column('unknown')


def test_dataset_empty():
    dset = Dataset([])
    assert len(dset) == 0
    assert dset.span is None
    assert dset.records == []
    assert repr(dset) == '<Dataset None (0 records)>'


def test_dataset_replace_and_equal():
    dset = make_dataset([10, 20], [1, 2], 50)
    other = dset.replace(dset.records, gap_policy='reject')
    assert other == dset
    assert other.metadata['gap_policy'] == 'reject'
    assert other.product_label == 'test'
    assert dset != make_dataset([10, 21], [1, 2], 50)


def test_time_series():
    ts = TimeSeries([1, 2, 3.5], start_month='2024-11', field_name='bought_qty')
    assert len(ts) == 3
    assert ts.field_name == 'bought_qty'
    assert str(ts.start_month) == '2024-11'
    assert str(ts.end_month) == '2025-01'
    assert [str(m) for m in ts.months] == ['2024-11', '2024-12', '2025-01']
    assert ts.data.tolist() == [1.0, 2.0, 3.5]
    assert ts.values is ts.data
    assert ts[-1] == 3.5
    assert ts.max() == 3.5
    assert ts.mean() == pytest.approx(6.5 / 3)
    assert (ts * 2).tolist() == [2.0, 4.0, 7.0]
    assert (1 + ts).tolist() == [2.0, 3.0, 4.5]
    assert np.asarray(ts).tolist() == [1.0, 2.0, 3.5]
    assert repr(ts) == "<TimeSeries 'bought_qty' start='2024-11' size=3>"

    with pytest.raises(ValueError):
        ts.data[0] = 9

    with pytest.raises(AttributeError):
        ts.does_not_exist


def test_time_series_tail():
    ts = TimeSeries(range(5), start_month='2024-01')
    tail = ts.tail(2)
    assert tail.data.tolist() == [3.0, 4.0]
    assert str(tail.start_month) == '2024-04'
    assert ts.tail(10) == ts
    with pytest.raises(ValueError):
        ts.tail(0)


def test_time_series_invalid():
    with pytest.raises(EmptyInput):
        TimeSeries([])
    with pytest.raises(InvalidRange):
        TimeSeries([1, float('nan')])
    with pytest.raises(InvalidRange):
        TimeSeries([1, float('inf')])


def test_time_series_without_months():
    ts = TimeSeries([1, 2])
    assert ts.start_month is None
    assert ts.months is None
    assert ts.end_month is None
    assert repr(ts) == '<TimeSeries None start=None size=2>'


def test_as_array():
    assert as_array([1, 2]).tolist() == [1.0, 2.0]
    ts = TimeSeries([1, 2])
    assert as_array(ts) is ts.data
