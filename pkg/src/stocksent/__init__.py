"""Tweet sentiment classification and market correlation toolkit.

Three from-scratch classifiers (Bernoulli naive Bayes, random forest,
bidirectional LSTM) over stemmed binary/sequence features, plus the glue
to turn per-tweet labels into a daily bullishness series and correlate
it against next-day log-returns.
"""

__version__ = "0.1.0"

from .errors import DataError, StockSentError, UsageError

__all__ = ["DataError", "StockSentError", "UsageError", "__version__"]
