"""
A :class:`logging.Handler` that keeps the records of a run as a table.
"""
import logging

import numpy as np

from .utils import logger as package_logger
from .writers import CSVWriter


class RunLog(logging.Handler):

    def __init__(self, level=logging.INFO, attributes=('levelname', 'name', 'message'), logger=None):
        """Capture :ref:`logging records <log-record>` in a :class:`numpy.ndarray`.

        Only attributes that do not depend on the time of the run should be
        captured if the table must be identical for identical runs.

        Parameters
        ----------
        level : :class:`int` or :class:`str`, optional
            The :ref:`logging level <levels>` to use.
        attributes : :class:`tuple` of :class:`str`, optional
            The :ref:`attribute names <logrecord-attributes>` to capture for each record.
        logger : :class:`~logging.Logger`, optional
            The :class:`~logging.Logger` to add the handler to. Default is the
            logger of this package.
        """
        if not attributes or not all(isinstance(a, str) for a in attributes):
            raise ValueError('Must specify attribute names as strings, got: {}'.format(attributes))
        if isinstance(level, str):
            level = getattr(logging, level.upper())

        super(RunLog, self).__init__(level=level)
        self._attributes = tuple(attributes)
        self._dtype = np.dtype([(a, object) for a in self._attributes])
        self._data = np.empty((0,), dtype=self._dtype)
        self._logger = None
        self._previous_level = None
        self.set_logger(logger or package_logger)

    def __repr__(self):
        return '<RunLog {} records>'.format(self._data.size)

    def __len__(self):
        return self._data.size

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.remove_handler()

    @property
    def attributes(self):
        """:class:`tuple` of :class:`str`: The captured attribute names."""
        return self._attributes

    @property
    def data(self):
        """:class:`numpy.ndarray`: The captured records, as a structured array."""
        return self._data

    @property
    def logger(self):
        """:class:`~logging.Logger`: The logger that the handler is added to."""
        return self._logger

    def set_logger(self, logger):
        """Add the handler to a :class:`~logging.Logger`.

        The level of the `logger` is lowered to the level of the handler if necessary.
        """
        if not isinstance(logger, logging.Logger):
            raise TypeError('Must be a logging.Logger object')
        self.remove_handler()
        self._previous_level = logger.level
        if logger.level == logging.NOTSET or logger.level > self.level:
            logger.setLevel(self.level)
        logger.addHandler(self)
        self._logger = logger

    def remove_handler(self):
        """Remove the handler from its logger and restore the level of the logger."""
        if self._logger is not None:
            self._logger.removeHandler(self)
            self._logger.setLevel(self._previous_level)
            self._logger = None

    def emit(self, record):
        """Overrides the :meth:`~logging.Handler.emit` method."""
        record.message = record.getMessage()
        row = np.asarray(tuple(record.__dict__[a] for a in self._attributes), dtype=self._dtype)
        self._data = np.append(self._data, row)

    def to_csv(self, file=None, mode=None):
        """Write the captured records as CSV.

        Parameters
        ----------
        file : :term:`path-like <path-like object>` or :term:`file-like <file object>`, optional
            The file to write to. If :data:`None` then the text is returned.
        mode : :class:`str`, optional
            See :meth:`~msl.badgoods.base.Writer.write`.
        """
        writer = CSVWriter(file, header=self._attributes, rows=self._data.tolist())
        if file is None:
            return writer.text()
        writer.write(mode=mode)
