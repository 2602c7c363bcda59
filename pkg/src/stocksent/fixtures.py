"""Synthetic corpus and market generators for tests and demos.

Training rows use a planted sentiment lexicon under realistic noise
(urls, mentions, digits, stretched letters, mixed case). Market data
plants a latent daily sentiment that drives both the tweet stream and
the next trading day's return, so the downstream correlation has a
known sign and rough size.
"""

import csv
import datetime as dt
import math
import random

POSITIVE_WORDS = ("surge", "rally", "moon", "bullish", "gains",
                  "breakout", "upgrade", "strong", "winner", "profit")
NEGATIVE_WORDS = ("crash", "plunge", "bearish", "losses", "dump",
                  "selloff", "downgrade", "weak", "loser", "debt")
FILLER_WORDS = ("market", "shares", "trading", "chart", "price",
                "volume", "close", "open", "today", "watch")

_URLS = ("https://example.com/a1", "http://chart.example.net/x",
         "www.example.org/news")
_MENTIONS = ("@trader99", "@MarketWatcher", "@some_analyst")
_STRETCHED = ("wooow", "goooo", "yaaay", "hmmmm")


def _tweet_text(rng, label, extra=()):
    """One noisy tweet whose sentiment words match the label."""
    lexicon = POSITIVE_WORDS if label else NEGATIVE_WORDS
    words = list(extra)
    words += rng.sample(lexicon, rng.randint(2, 4))
    words += rng.sample(FILLER_WORDS, rng.randint(1, 3))
    if rng.random() < 0.3:
        words.append(rng.choice(_URLS))
    if rng.random() < 0.3:
        words.append(rng.choice(_MENTIONS))
    if rng.random() < 0.2:
        words.append(str(rng.randint(0, 9999)))
    if rng.random() < 0.15:
        words.append(rng.choice(_STRETCHED))
    rng.shuffle(words)
    if rng.random() < 0.25:
        words = [w.upper() if rng.random() < 0.5 else w for w in words]
    return " ".join(words)


def gen_training_corpus(path, n_rows: int = 2000, seed: int = 0):
    """Write a labeled tweet CSV (labels 0 and 4, like the raw feed)."""
    rng = random.Random(seed)
    start = dt.date(2020, 1, 1)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "created_at", "full_text", "label"])
        for i in range(n_rows):
            label = i % 2
            day = start + dt.timedelta(days=rng.randint(0, 59))
            stamp = day.isoformat()
            if rng.random() < 0.3:
                stamp += f"T{rng.randint(0, 23):02d}:{rng.randint(0, 59):02d}:00Z"
            writer.writerow([f"t{i:05d}", stamp,
                             _tweet_text(rng, label), 4 if label else 0])
    return path


def gen_market(out_tweets, out_prices, days: int = 90,
               start: dt.date = dt.date(2020, 4, 9),
               tweets_per_day: int = 40, ticker: str = "acme",
               kappa: float = 2.0, noise_sigma: float = 0.866,
               seed: int = 0):
    """Write an unlabeled tweet stream and a weekday OHLC series.

    Each calendar day draws a latent sentiment s in (-1, 1); a tweet that
    day is positive with probability (1 + s) / 2. A trading day's return
    is kappa * s_prev + noise (percent, log scale), prev being the
    previous calendar day, which is what a lagged join pairs it with.
    Returns the latent series keyed by day.
    """
    rng = random.Random(seed)
    sentiment = {start + dt.timedelta(days=d): rng.uniform(-1.0, 1.0)
                 for d in range(days)}

    tag = f"${ticker.upper()}"
    row_id = 0
    with open(out_tweets, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "created_at", "full_text"])
        for day in sorted(sentiment):
            p_pos = (1.0 + sentiment[day]) / 2.0
            for _ in range(tweets_per_day):
                if rng.random() < 0.1:
                    text = _tweet_text(rng, rng.randint(0, 1), extra=("$BORK",))
                else:
                    label = 1 if rng.random() < p_pos else 0
                    text = _tweet_text(rng, label, extra=(tag,))
                writer.writerow([f"m{row_id:05d}", day.isoformat(), text])
                row_id += 1

    closes = []
    close = 100.0
    for d in range(days):
        day = start + dt.timedelta(days=d)
        if day.weekday() >= 5:
            continue
        if closes:
            prev_day = day - dt.timedelta(days=1)
            ret = kappa * sentiment[prev_day] + rng.gauss(0.0, noise_sigma)
            close = closes[-1][1] * math.exp(ret / 100.0)
        closes.append((day, close))

    with open(out_prices, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["Date", "Open", "High", "Low", "Close",
                         "Adj Close", "Volume"])
        prev_close = closes[0][1]
        for day, close in closes:
            body_hi = max(prev_close, close)
            body_lo = min(prev_close, close)
            writer.writerow([
                day.isoformat(),
                f"{prev_close:.6f}",
                f"{body_hi * 1.005:.6f}",
                f"{body_lo * 0.995:.6f}",
                f"{close:.6f}",
                f"{close:.6f}",
                rng.randint(100_000, 1_000_000),
            ])
            prev_close = close
    return sentiment
