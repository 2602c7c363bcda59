"""Exception hierarchy shared by the whole package.

Three branches matter to the command line tool: usage problems exit 1,
data problems exit 2, anything else under the package root exits 3.
"""


class StockSentError(Exception):
    """Base class for every error raised by this package."""


class UsageError(StockSentError):
    """Bad invocation: unknown flag, missing argument, invalid option value."""


class DataError(StockSentError):
    """Input data violates a documented requirement."""


# usage branch

class InvalidSplit(UsageError):
    """validation_split outside [0, 1)."""


# data branch

class MissingColumn(DataError):
    """A required CSV column is absent."""


class MalformedRow(DataError):
    """A price row failed to parse (bad date or non-numeric field)."""


class EmptyDataset(DataError):
    """A loader produced zero usable rows."""


class EmptyCorpus(DataError):
    """No documents survived preprocessing, so no vocabulary exists."""


class DuplicateDate(DataError):
    """The same trading date appears twice in one price series."""


class NonPositiveClose(DataError):
    """A close price is zero or negative, so its log-return is undefined."""


class TooFewBars(DataError):
    """Fewer than two price rows: no return can be computed."""


class MissingModelLabel(DataError):
    """A label present in training data is absent from the fitted model."""


class UnsortedInput(DataError):
    """A date-keyed series is not in strictly ascending order."""


class ZeroVariance(DataError):
    """A correlation operand is constant (or too short), r is undefined."""


class LengthMismatch(DataError):
    """Paired series have different lengths."""


class EmptyInput(DataError):
    """An operation received zero rows where at least one is required."""


class ModelVersionMismatch(DataError):
    """A serialized model file has an unsupported format version."""


class EmptyData(DataError):
    """Aligned series are empty: nothing overlaps."""


# internal branch (exit 3)

class DimensionMismatch(StockSentError):
    """Array shape disagrees with the model that consumes it."""


class NonPositiveAlpha(StockSentError):
    """Laplace smoothing requires alpha > 0."""


class IdOutOfRange(StockSentError):
    """A token id falls outside the embedding table."""


class InternalError(StockSentError):
    """Invariant violation that indicates a bug, not bad input."""
