"""
Writer for a comma-separated table. The first row is the header.
"""
import csv
from io import StringIO

from ..base import Writer


class CSVWriter(Writer):

    def __init__(self, file=None, header=None, rows=None, **metadata):
        """Create a CSV writer.

        Each cell is written with :class:`str`, so format floating-point
        values before adding them if a fixed number of decimal places is required.

        Parameters
        ----------
        file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
            The file to write to.
        header : :class:`list` of :class:`str`
            The column names.
        rows : iterable of iterables, optional
            The initial rows.
        **metadata
            Key-value pairs that describe the table.

        Examples
        --------
        >>> w = CSVWriter(header=('model', 'rmse'))
        >>> w.add_row('ses', '1.250')
        >>> print(w.text(), end='')
        model,rmse
        ses,1.250
        """
        super(CSVWriter, self).__init__(file, **metadata)
        if not header:
            raise ValueError('A CSVWriter requires a header')
        self._header = tuple(header)
        self._rows = []
        for row in rows or ():
            self.add_row(*row)

    @property
    def header(self):
        """:class:`tuple` of :class:`str`: The column names."""
        return self._header

    @property
    def rows(self):
        """:class:`list` of :class:`tuple`: The rows that have been added."""
        return self._rows

    def add_row(self, *cells):
        """Append a row to the table.

        Raises
        ------
        ValueError
            If the number of cells is not equal to the number of columns.
        """
        if len(cells) != len(self._header):
            raise ValueError('Expected {} cells, got {}'.format(len(self._header), len(cells)))
        self._rows.append(tuple(cells))

    def text(self, **kwargs):
        """Return the table as CSV text, with ``'\\n'`` line endings."""
        buffer = StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(self._header)
        for row in self._rows:
            writer.writerow(['' if cell is None else cell for cell in row])
        return buffer.getvalue()
