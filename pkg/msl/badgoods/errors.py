"""
Exceptions raised by MSL-BadGoods.

Every exception derives from :class:`BadGoodsError` and from the builtin
exception that describes it best, so ``except ValueError`` still works.
The :attr:`~BadGoodsError.exit_code` is what the command-line interface
returns when the exception ends a run.
"""


class BadGoodsError(Exception):
    "Base class for all errors raised by this package."
    exit_code = 1


class ConfigError(BadGoodsError, ValueError):
    "An invalid run configuration."
    exit_code = 2


class IoError(BadGoodsError, OSError):
    "A file cannot be read or written."
    exit_code = 3


class EmptyFile(BadGoodsError, ValueError):
    "A file has no header or no data rows."
    exit_code = 4

    def __init__(self, source=None):
        self.source = source
        super(EmptyFile, self).__init__('{}: the file is empty'.format(source or '<stream>'))


class MissingColumn(BadGoodsError, ValueError):
    "A required column is not in the header."
    exit_code = 5

    def __init__(self, name, source=None):
        self.name = name
        self.source = source
        super(MissingColumn, self).__init__(
            '{}: missing required column {!r}'.format(source or '<stream>', name))


class BadCell(BadGoodsError, ValueError):
    "A cell cannot be converted to the type of its column."
    exit_code = 6

    def __init__(self, row, column, reason, source=None):
        self.row = row
        self.column = column
        self.reason = reason
        self.source = source
        super(BadCell, self).__init__(
            '{}: line {}, column {!r}: {}'.format(source or '<stream>', row, column, reason))


class DuplicateMonth(BadGoodsError, ValueError):
    "The same month appears more than once."
    exit_code = 7

    def __init__(self, month, source=None):
        self.month = month
        self.source = source
        super(DuplicateMonth, self).__init__(
            '{}: duplicate month {}'.format(source or '<dataset>', month))


class GapFound(BadGoodsError, ValueError):
    "Months are missing between the first and last record."
    exit_code = 8

    def __init__(self, months, source=None):
        self.months = tuple(months)
        self.source = source
        super(GapFound, self).__init__('{}: missing months {}'.format(
            source or '<dataset>', ', '.join(str(m) for m in self.months)))


class InvariantViolation(BadGoodsError, ValueError):
    "A record breaks one of the per-record rules."
    exit_code = 9

    def __init__(self, row, rule, source=None):
        self.row = row
        self.rule = rule
        self.source = source
        super(InvariantViolation, self).__init__(
            '{}: {}: {}'.format(source or '<dataset>', row, rule))


class ZeroSales(BadGoodsError, ValueError):
    "A return rate was requested for a month without sales."
    exit_code = 10


class InvalidRange(BadGoodsError, ValueError):
    "A value is outside of its allowed range."
    exit_code = 11


class ZeroShelfLife(BadGoodsError, ValueError):
    "A freshness ratio was requested for a zero shelf life."
    exit_code = 12


class ZeroCapacity(BadGoodsError, ValueError):
    "A risk score was requested for a zero retailer capacity."
    exit_code = 13


class SeriesTooShort(BadGoodsError, ValueError):
    "A series has too few values for the requested computation."
    exit_code = 14


class ZeroVariance(BadGoodsError, ValueError):
    "A series is constant."
    exit_code = 15


class LengthMismatch(BadGoodsError, ValueError):
    "Two series do not have the same length."
    exit_code = 16


class EmptyInput(BadGoodsError, ValueError):
    "Nothing to compute with."
    exit_code = 17


class SeedMismatch(BadGoodsError, ValueError):
    "The number of seed values does not equal the differencing order."
    exit_code = 18


class OptimizerFailed(BadGoodsError, RuntimeError):
    "No start of the simplex search converged to admissible parameters."
    exit_code = 19


class AllCandidatesFailed(BadGoodsError, RuntimeError):
    "Every candidate order failed to fit."
    exit_code = 20


class InvalidHorizon(BadGoodsError, ValueError):
    "A forecast horizon is less than 1."
    exit_code = 21


class InadmissibleParams(BadGoodsError, ValueError):
    "ARMA parameters are not stationary or not invertible."
    exit_code = 22


class HorizonMismatch(BadGoodsError, ValueError):
    "The plan rows do not cover the scoring horizon."
    exit_code = 23


class AlreadyLow(BadGoodsError, ValueError):
    "A recommendation was requested for a Low risk month."
    exit_code = 24
