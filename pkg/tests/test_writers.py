import json
import os
from io import BytesIO
from io import StringIO

import numpy as np
import pytest

from msl.badgoods.base import Reader
from msl.badgoods.base import Writer
from msl.badgoods.domain import RiskLevel
from msl.badgoods.errors import IoError
from msl.badgoods.writers import CSVWriter
from msl.badgoods.writers import JSONWriter


def test_csv_writer_text():
    w = CSVWriter(header=('date', 'point', 'lower_95'))
    w.add_row('2025-01', '1.000000', None)
    w.add_row('2025-02', 'a,b', 3)
    assert w.text() == 'date,point,lower_95\n2025-01,1.000000,\n2025-02,"a,b",3\n'
    assert w.header == ('date', 'point', 'lower_95')
    assert len(w.rows) == 2

    with pytest.raises(ValueError, match=r'Expected 3 cells'):
        w.add_row(1, 2)
    with pytest.raises(ValueError):
        CSVWriter(header=())


def test_csv_writer_rows_and_streams():
    w = CSVWriter(header=('a', 'b'), rows=[(1, 2), (3, 4)])
    s = StringIO()
    w.write(s)
    assert s.getvalue() == 'a,b\n1,2\n3,4\n'
    b = BytesIO()
    w.write(b)
    assert b.getvalue() == b'a,b\n1,2\n3,4\n'
    assert w.to_bytes() == b'a,b\n1,2\n3,4\n'


def test_writer_file_modes(tmpdir):
    path = os.path.join(str(tmpdir), 'table.csv')
    w = CSVWriter(path, header=('a',), rows=[(1,)])
    w.write()
    with pytest.raises(IoError, match=r"Specify mode='w'"):
        w.write()
    w.add_row(2)
    w.write(mode='w')
    assert Reader.get_lines(path) == ['a', '1', '2']
    with pytest.raises(ValueError, match=r'Invalid mode'):
        w.write(mode='a')
    with pytest.raises(ValueError, match=r'specify a file'):
        CSVWriter(header=('a',)).write()


def test_writer_context_manager(tmpdir):
    path = os.path.join(str(tmpdir), 'summary.json')
    with JSONWriter(path) as w:
        w.obj = {'horizon': 12}
    with open(path) as fp:
        assert json.load(fp) == {'horizon': 12}

    with JSONWriter(path) as w:
        w.obj = {'horizon': 6}
        w.update_context_kwargs(mode='w')
    with open(path) as fp:
        assert json.load(fp) == {'horizon': 6}


def test_writer_base():
    w = Writer('file.txt', source='x')
    assert w.file == 'file.txt'
    assert w.metadata == {'source': 'x'}
    assert repr(w) == "<Writer 'file.txt'>"
    with pytest.raises(NotImplementedError):
        w.text()


def test_json_writer_numpy_and_enums():
    obj = {
        'int': np.int64(3),
        'bool': np.bool_(True),
        'float': np.float64(0.5),
        'nan': float('nan'),
        'array': np.array([1.5, np.nan]),
        'months': np.array(['2025-01', '2025-02'], dtype='datetime64[M]'),
        'month': np.datetime64('2025-03', 'M'),
        'level': RiskLevel.HIGH,
        'nested': [{'x': (1, 2)}],
    }
    loaded = json.loads(JSONWriter(obj=obj).text())
    assert loaded == {
        'int': 3,
        'bool': True,
        'float': 0.5,
        'nan': None,
        'array': [1.5, None],
        'months': ['2025-01', '2025-02'],
        'month': '2025-03',
        'level': 'High',
        'nested': [{'x': [1, 2]}],
    }
    assert JSONWriter(obj=[1]).text(indent=None) == '[1]\n'

    with pytest.raises(TypeError):
        JSONWriter(obj={'x': object()}).text()


def test_reader_get_lines():
    lines = Reader.get_lines(StringIO('a\n\nb  \n'))
    assert lines == ['a', '', 'b']
    assert Reader.get_lines(StringIO('a\n\nb\n'), remove_empty_lines=True) == ['a', 'b']
    assert Reader.get_lines(BytesIO('\ufeff\u00e9\n'.encode('utf-8'))) == ['\u00e9']

    stream = StringIO('x\ny\n')
    stream.seek(2)
    assert Reader.get_lines(stream) == ['y']
    assert stream.tell() == 2

    with pytest.raises(IoError, match=r'cannot decode'):
        Reader.get_lines(BytesIO(b'\xff\xfe\xfa'))


def test_reader():
    r = Reader(StringIO())
    assert r.source == 'StringIO'
    assert repr(r) == "<Reader 'StringIO'>"
    with pytest.raises(NotImplementedError):
        r.read()
