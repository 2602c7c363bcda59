"""CSV ingestion, filtering, and validation behavior."""

import pytest

from helpers import day, model_labeled_csv, ohlc_csv, tweet_csv, write_csv
from stocksent import corpus
from stocksent.errors import (
    DuplicateDate,
    EmptyDataset,
    MalformedRow,
    MissingColumn,
    MissingModelLabel,
    NonPositiveClose,
    UsageError,
)


class TestLoadTweets:
    def test_label_four_remapped(self, tmp_path):
        p = tweet_csv(tmp_path / "t.csv",
                      [("1", "2020-04-09", "aapl to the moon", "4")],
                      labeled=True)
        records, skipped = corpus.load_tweets(p, with_labels=True)
        assert skipped == 0
        assert records[0].label == 1
        assert records[0].source_model == "gold"

    def test_header_only_is_empty(self, tmp_path):
        p = tweet_csv(tmp_path / "t.csv", [])
        with pytest.raises(EmptyDataset):
            corpus.load_tweets(p)

    def test_blank_text_skipped(self, tmp_path):
        p = tweet_csv(tmp_path / "t.csv", [
            ("1", "2020-04-09", "hello"),
            ("2", "2020-04-09", "   "),
            ("3", "2020-04-10", "world")])
        records, skipped = corpus.load_tweets(p)
        assert len(records) == 2
        assert skipped == 1

    def test_bad_date_skipped(self, tmp_path):
        p = tweet_csv(tmp_path / "t.csv", [
            ("1", "not-a-date", "hello"),
            ("2", "2020-04-10", "world")])
        records, skipped = corpus.load_tweets(p)
        assert [r.id for r in records] == ["2"]
        assert skipped == 1

    def test_bad_label_skipped(self, tmp_path):
        p = tweet_csv(tmp_path / "t.csv", [
            ("1", "2020-04-09", "hello", "2"),
            ("2", "2020-04-09", "bye", "0")], labeled=True)
        records, skipped = corpus.load_tweets(p, with_labels=True)
        assert [r.label for r in records] == [0]
        assert skipped == 1

    def test_missing_column(self, tmp_path):
        p = write_csv(tmp_path / "t.csv", ["id", "created_at"],
                      [("1", "2020-04-09")])
        with pytest.raises(MissingColumn):
            corpus.load_tweets(p)

    def test_missing_label_column_when_requested(self, tmp_path):
        p = tweet_csv(tmp_path / "t.csv", [("1", "2020-04-09", "x")])
        with pytest.raises(MissingColumn):
            corpus.load_tweets(p, with_labels=True)

    def test_timestamp_truncated_to_day(self, tmp_path):
        p = tweet_csv(tmp_path / "t.csv", [
            ("1", "2020-04-09T23:59:59Z", "late tweet"),
            ("2", "2020-04-10T01:00:00+02:00", "tz tweet")])
        records, _ = corpus.load_tweets(p)
        assert records[0].created_at == day("2020-04-09")
        # 01:00 at +02:00 is 23:00 the previous day in UTC
        assert records[1].created_at == day("2020-04-09")

    def test_label_domain_closure(self, tmp_path):
        rows = [(str(i), "2020-04-09", f"text {i}", str(lbl))
                for i, lbl in enumerate([0, 1, 4, 4, 0])]
        p = tweet_csv(tmp_path / "t.csv", rows, labeled=True)
        records, _ = corpus.load_tweets(p, with_labels=True)
        assert all(r.label in (0, 1) for r in records)


class TestParseDay:
    def test_plain_date(self):
        assert corpus.parse_day("2020-04-09") == day("2020-04-09")

    def test_garbage_is_none(self):
        assert corpus.parse_day("09/04/2020") is None
        assert corpus.parse_day("") is None


class TestFilterByTicker:
    def make(self, texts):
        return [corpus.TweetRecord(id=str(i), created_at=day("2020-04-09"),
                                   full_text=t) for i, t in enumerate(texts)]

    def test_substring_match(self):
        records = self.make(["buy aapl", "sell tsla", "aapl & msft"])
        f = corpus.TickerFilter(ticker="aapl", aliases=frozenset({"aapl"}))
        kept = corpus.filter_by_ticker(records, f)
        assert [r.id for r in kept] == ["0", "2"]

    def test_overmatching_documented(self):
        records = self.make(["my fbi story"])
        f = corpus.TickerFilter(ticker="fb", aliases=frozenset({"fb"}))
        assert len(corpus.filter_by_ticker(records, f)) == 1

    def test_empty_list(self):
        f = corpus.TickerFilter(ticker="x", aliases=frozenset({"x"}))
        assert corpus.filter_by_ticker([], f) == []

    def test_case_insensitive(self):
        records = self.make(["Buy $AAPL now"])
        f = corpus.TickerFilter(ticker="aapl", aliases=frozenset({"$aapl"}))
        assert len(corpus.filter_by_ticker(records, f)) == 1

    def test_idempotent_and_subset(self):
        records = self.make(["buy aapl", "sell tsla", "hold aapl"])
        f = corpus.TickerFilter(ticker="aapl", aliases=frozenset({"aapl"}))
        once = corpus.filter_by_ticker(records, f)
        twice = corpus.filter_by_ticker(once, f)
        assert twice == once
        assert set(r.id for r in once) <= set(r.id for r in records)

    def test_aliases_validated(self):
        with pytest.raises(UsageError):
            corpus.TickerFilter(ticker="x", aliases=frozenset())
        with pytest.raises(UsageError):
            corpus.TickerFilter(ticker="x", aliases=frozenset({"AAPL"}))


class TestLoadOhlc:
    def test_sorted_ascending(self, tmp_path):
        p = ohlc_csv(tmp_path / "p.csv",
                     [("2020-04-09", 101.0), ("2020-04-08", 100.0)])
        bars = corpus.load_ohlc(p)
        assert [b.date for b in bars] == [day("2020-04-08"), day("2020-04-09")]

    def test_zero_close_rejected(self, tmp_path):
        p = write_csv(tmp_path / "p.csv",
                      ["Date", "Open", "High", "Low", "Close",
                       "Adj Close", "Volume"],
                      [("2020-04-09", "1", "1", "1", "0", "1", "10")])
        with pytest.raises(NonPositiveClose):
            corpus.load_ohlc(p)

    def test_five_rows(self, tmp_path):
        closes = [("2020-04-0" + str(d), 100.0 + d) for d in range(1, 6)]
        bars = corpus.load_ohlc(ohlc_csv(tmp_path / "p.csv", closes))
        assert len(bars) == 5
        assert all(a.date < b.date for a, b in zip(bars, bars[1:]))

    def test_duplicate_date(self, tmp_path):
        p = ohlc_csv(tmp_path / "p.csv",
                     [("2020-04-09", 100.0), ("2020-04-09", 101.0)])
        with pytest.raises(DuplicateDate):
            corpus.load_ohlc(p)

    def test_malformed_price_fatal(self, tmp_path):
        p = write_csv(tmp_path / "p.csv",
                      ["Date", "Open", "High", "Low", "Close",
                       "Adj Close", "Volume"],
                      [("2020-04-09", "abc", "1", "1", "1", "1", "10")])
        with pytest.raises(MalformedRow):
            corpus.load_ohlc(p)

    def test_inconsistent_range_fatal(self, tmp_path):
        # close above high
        p = write_csv(tmp_path / "p.csv",
                      ["Date", "Open", "High", "Low", "Close",
                       "Adj Close", "Volume"],
                      [("2020-04-09", "100", "101", "99", "150", "150", "10")])
        with pytest.raises(MalformedRow):
            corpus.load_ohlc(p)

    def test_fractional_volume_fatal(self, tmp_path):
        p = write_csv(tmp_path / "p.csv",
                      ["Date", "Open", "High", "Low", "Close",
                       "Adj Close", "Volume"],
                      [("2020-04-09", "100", "101", "99", "100", "100", "1.5")])
        with pytest.raises(MalformedRow):
            corpus.load_ohlc(p)

    def test_missing_column(self, tmp_path):
        p = write_csv(tmp_path / "p.csv", ["Date", "Close"],
                      [("2020-04-09", "100")])
        with pytest.raises(MissingColumn):
            corpus.load_ohlc(p)


class TestModelLabeled:
    def test_roundtrip(self, tmp_path):
        p = model_labeled_csv(tmp_path / "l.csv", [
            ("1", "2020-04-09", "up we go", 1, 1, 0),
            ("2", "2020-04-09", "down we go", 0, 0, 0)])
        tweets, skipped = corpus.load_model_labeled(p)
        assert skipped == 0
        assert tweets[0].label_for("nb") == 1
        assert tweets[0].label_for("rf") == 1
        assert tweets[0].label_for("lstm") == 0

    def test_unknown_model_label(self, tmp_path):
        p = model_labeled_csv(tmp_path / "l.csv",
                              [("1", "2020-04-09", "x", 1, 1, 1)])
        tweets, _ = corpus.load_model_labeled(p)
        with pytest.raises(MissingModelLabel):
            tweets[0].label_for("svm")

    def test_bad_label_value_skipped(self, tmp_path):
        p = model_labeled_csv(tmp_path / "l.csv", [
            ("1", "2020-04-09", "x", 1, 2, 1),
            ("2", "2020-04-09", "y", 0, 1, 1)])
        tweets, skipped = corpus.load_model_labeled(p)
        assert len(tweets) == 1
        assert skipped == 1
