"""Daily sentiment aggregation, log returns, alignment, correlation.

Bullishness for one day and one model is ln((1 + pos) / (1 + neg))
over that day's labeled texts. A day's return is 100 * ln(close /
previous close), dated at the later bar. Alignment pairs each return
with the most recent sentiment value from an earlier day (or the same
day when requested).
"""

import math
from dataclasses import dataclass
from datetime import date as _date

from .corpus import MODEL_NAMES
from .errors import (
    LengthMismatch,
    NonPositiveClose,
    TooFewBars,
    UnsortedInput,
    UsageError,
    ZeroVariance,
)


@dataclass(frozen=True)
class DailySentiment:
    date: _date
    lstm: float
    rf: float
    nb: float

    def value(self, model: str) -> float:
        return getattr(self, model)


@dataclass(frozen=True)
class DailyReturn:
    date: _date
    value: float


@dataclass(frozen=True)
class AlignedPair:
    sentiment_date: _date
    lstm: float
    rf: float
    nb: float
    return_date: _date
    return_value: float


def bullishness(n_pos: int, n_neg: int) -> float:
    return math.log((1.0 + n_pos) / (1.0 + n_neg))


def bullishness_series(tweets) -> list:
    """Per-day bullishness for each model, sorted by day."""
    by_day = {}
    for tweet in tweets:
        counts = by_day.setdefault(tweet.created_at,
                                   {name: [0, 0] for name in MODEL_NAMES})
        for name in MODEL_NAMES:
            counts[name][tweet.label_for(name)] += 1
    series = []
    for day in sorted(by_day):
        counts = by_day[day]
        series.append(DailySentiment(
            date=day,
            lstm=bullishness(counts["lstm"][1], counts["lstm"][0]),
            rf=bullishness(counts["rf"][1], counts["rf"][0]),
            nb=bullishness(counts["nb"][1], counts["nb"][0])))
    return series


def return_series(bars) -> list:
    """Log returns in percent; needs at least two bars, positive closes."""
    bars = list(bars)
    if len(bars) < 2:
        raise TooFewBars(f"need at least 2 price bars, got {len(bars)}")
    for bar in bars:
        if bar.close <= 0:
            raise NonPositiveClose(
                f"close must be positive, got {bar.close} on {bar.date}")
    out = []
    for prev, cur in zip(bars, bars[1:]):
        out.append(DailyReturn(
            date=cur.date,
            value=100.0 * (math.log(cur.close) - math.log(prev.close))))
    return out


def _check_ascending(dates, what):
    for a, b in zip(dates, dates[1:]):
        if not a < b:
            raise UnsortedInput(f"{what} dates must be strictly increasing")


def align(returns, sentiment, mode: str = "lagged") -> list:
    """Pair each return with prior-day (or same-day) sentiment.

    For every return dated d, lagged mode takes the latest sentiment
    strictly before the first sentiment day >= d; same-day mode takes
    the sentiment dated exactly d. Returns without a partner are
    dropped. Both inputs must be strictly ascending by date.
    """
    if mode not in ("lagged", "same-day"):
        raise UsageError(f"unknown alignment mode: {mode}")
    returns = list(returns)
    sentiment = list(sentiment)
    _check_ascending([r.date for r in returns], "return")
    _check_ascending([s.date for s in sentiment], "sentiment")
    pairs = []
    j = 0
    for ret in returns:
        while j < len(sentiment) and sentiment[j].date < ret.date:
            j += 1
        if mode == "lagged":
            if j >= len(sentiment) or j == 0:
                continue
            sent = sentiment[j - 1]
        else:
            if j >= len(sentiment) or sentiment[j].date != ret.date:
                continue
            sent = sentiment[j]
        pairs.append(AlignedPair(
            sentiment_date=sent.date, lstm=sent.lstm, rf=sent.rf, nb=sent.nb,
            return_date=ret.date, return_value=ret.value))
    return pairs


def pearson(xs, ys) -> float:
    """Sample Pearson correlation; rejects degenerate inputs."""
    xs = [float(x) for x in xs]
    ys = [float(y) for y in ys]
    if len(xs) != len(ys):
        raise LengthMismatch(f"{len(xs)} vs {len(ys)} values")
    n = len(xs)
    if n < 2:
        raise ZeroVariance(f"need at least 2 pairs, got {n}")
    if all(x == xs[0] for x in xs) or all(y == ys[0] for y in ys):
        raise ZeroVariance("correlation undefined for a constant series")
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    syy = math.fsum((y - my) ** 2 for y in ys)
    return sxy / math.sqrt(sxx * syy)


def correlations(pairs) -> dict:
    """Pearson r per model over aligned pairs, keyed by model name."""
    rets = [p.return_value for p in pairs]
    return {name: pearson([getattr(p, name) for p in pairs], rets)
            for name in MODEL_NAMES}
