"""CSV ingestion for tweets and OHLC price bars, plus ticker filtering.

Tweet rows are noisy: malformed rows are counted and skipped. Price rows
are load-bearing for return calculations, so any malformed price row is
fatal.
"""

import csv
import datetime as dt
from dataclasses import dataclass

from .errors import (
    DuplicateDate,
    EmptyDataset,
    MalformedRow,
    MissingColumn,
    MissingModelLabel,
    NonPositiveClose,
    UsageError,
)

MODEL_NAMES = ("lstm", "rf", "nb")

TWEET_COLUMNS = ("id", "created_at", "full_text")
LABEL_COLUMN = "label"
MODEL_LABEL_COLUMNS = ("Label_nb", "Label_rf", "Label_lstm")
OHLC_COLUMNS = ("Date", "Open", "High", "Low", "Close", "Adj Close", "Volume")


@dataclass(frozen=True)
class TweetRecord:
    id: str
    created_at: dt.date
    full_text: str


@dataclass(frozen=True)
class LabeledTweet:
    record: TweetRecord
    label: int
    source_model: str = "gold"

    @property
    def id(self):
        return self.record.id

    @property
    def created_at(self):
        return self.record.created_at

    @property
    def full_text(self):
        return self.record.full_text


@dataclass(frozen=True)
class MultiLabeledTweet:
    """One tweet carrying a prediction from each of the three models."""
    created_at: dt.date
    labels: tuple  # ((model, label), ...) in MODEL_NAMES order

    def label_for(self, model: str) -> int:
        for name, value in self.labels:
            if name == model:
                return value
        raise MissingModelLabel(f"no label from model {model!r}")


@dataclass(frozen=True)
class OhlcBar:
    date: dt.date
    open: float
    high: float
    low: float
    close: float
    adj_close: float
    volume: int


@dataclass(frozen=True)
class TickerFilter:
    ticker: str
    aliases: frozenset

    def __post_init__(self):
        if not self.aliases:
            raise UsageError("ticker filter needs at least one alias")
        for a in self.aliases:
            if a != a.lower():
                raise UsageError(f"ticker alias must be lowercase: {a!r}")


def parse_day(value: str):
    """Parse YYYY-MM-DD or an ISO-8601 timestamp down to a UTC day.

    Returns None when the value does not parse.
    """
    text = value.strip()
    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        pass
    try:
        stamp = dt.datetime.fromisoformat(text)
    except ValueError:
        return None
    if stamp.tzinfo is not None:
        stamp = stamp.astimezone(dt.timezone.utc)
    return stamp.date()


def _check_header(fieldnames, required, path):
    have = set(fieldnames or ())
    for col in required:
        if col not in have:
            raise MissingColumn(f"{path}: missing column {col!r}")


def load_tweets(path, with_labels: bool = False):
    """Load a tweet CSV. Returns (records, skipped_count).

    Records are TweetRecord, or LabeledTweet when with_labels is set; raw
    label 4 is remapped to 1 at ingestion. Rows with unparseable dates,
    empty text, or (when labeled) an unknown label are skipped and counted.
    """
    required = TWEET_COLUMNS + ((LABEL_COLUMN,) if with_labels else ())
    records = []
    skipped = 0
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        _check_header(reader.fieldnames, required, path)
        for row in reader:
            parsed = _parse_tweet_row(row, with_labels)
            if parsed is None:
                skipped += 1
            else:
                records.append(parsed)
    if not records:
        raise EmptyDataset(f"{path}: no usable tweet rows")
    return records, skipped


def _parse_tweet_row(row, with_labels):
    raw_id = row.get("id")
    raw_date = row.get("created_at")
    raw_text = row.get("full_text")
    if raw_id is None or raw_date is None or raw_text is None:
        return None
    text = raw_text.strip()
    if not text:
        return None
    day = parse_day(raw_date)
    if day is None:
        return None
    record = TweetRecord(id=raw_id, created_at=day, full_text=text)
    if not with_labels:
        return record
    try:
        label = int(row.get(LABEL_COLUMN, "").strip())
    except ValueError:
        return None
    if label == 4:
        label = 1
    if label not in (0, 1):
        return None
    return LabeledTweet(record=record, label=label)


def load_model_labeled(path):
    """Load the labeled CSV produced by the labeling step.

    Returns (list of MultiLabeledTweet, skipped_count).
    """
    required = TWEET_COLUMNS + MODEL_LABEL_COLUMNS
    tweets = []
    skipped = 0
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        _check_header(reader.fieldnames, required, path)
        for row in reader:
            day = parse_day(row.get("created_at") or "")
            if day is None:
                skipped += 1
                continue
            labels = []
            for model in MODEL_NAMES:
                raw = row.get(f"Label_{model}")
                if raw is None or raw.strip() not in ("0", "1"):
                    labels = None
                    break
                labels.append((model, int(raw)))
            if labels is None:
                skipped += 1
                continue
            tweets.append(MultiLabeledTweet(created_at=day,
                                            labels=tuple(labels)))
    if not tweets:
        raise EmptyDataset(f"{path}: no usable labeled rows")
    return tweets, skipped


def filter_by_ticker(records, ticker_filter: TickerFilter):
    """Keep records whose text contains any alias as a plain substring.

    Substring semantics over-match on purpose (alias "fb" matches "fbi");
    that is the documented matching rule.
    """
    kept = []
    for rec in records:
        text = rec.full_text.lower()
        if any(alias in text for alias in ticker_filter.aliases):
            kept.append(rec)
    return kept


def load_ohlc(path):
    """Load an OHLC CSV into bars sorted by date ascending.

    Any malformed row is fatal: returns depend on a gap-consistent series.
    """
    bars = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        _check_header(reader.fieldnames, OHLC_COLUMNS, path)
        for lineno, row in enumerate(reader, start=2):
            bars.append(_parse_ohlc_row(row, path, lineno))
    if not bars:
        raise EmptyDataset(f"{path}: no price rows")
    bars.sort(key=lambda b: b.date)
    for prev, cur in zip(bars, bars[1:]):
        if prev.date == cur.date:
            raise DuplicateDate(f"{path}: duplicate date {cur.date}")
    return bars


def _parse_ohlc_row(row, path, lineno):
    where = f"{path}:{lineno}"
    raw_date = (row.get("Date") or "").strip()
    try:
        date = dt.date.fromisoformat(raw_date)
    except ValueError:
        raise MalformedRow(f"{where}: bad date {raw_date!r}") from None
    values = {}
    for col in ("Open", "High", "Low", "Close", "Adj Close"):
        raw = row.get(col)
        try:
            values[col] = float(raw)
        except (TypeError, ValueError):
            raise MalformedRow(f"{where}: bad {col} value {raw!r}") from None
    if values["Close"] <= 0:
        raise NonPositiveClose(f"{where}: close {values['Close']} is not positive")
    for col in ("Open", "High", "Low", "Adj Close"):
        if values[col] <= 0:
            raise MalformedRow(f"{where}: {col} {values[col]} is not positive")
    lo, hi = values["Low"], values["High"]
    body_lo = min(values["Open"], values["Close"])
    body_hi = max(values["Open"], values["Close"])
    if not (lo <= body_lo <= body_hi <= hi):
        raise MalformedRow(f"{where}: open/close outside low/high range")
    raw_vol = row.get("Volume")
    try:
        vol = float(raw_vol)
    except (TypeError, ValueError):
        raise MalformedRow(f"{where}: bad Volume value {raw_vol!r}") from None
    if vol < 0 or vol != int(vol):
        raise MalformedRow(f"{where}: volume must be a non-negative integer")
    return OhlcBar(date=date, open=values["Open"], high=values["High"],
                   low=values["Low"], close=values["Close"],
                   adj_close=values["Adj Close"], volume=int(vol))
