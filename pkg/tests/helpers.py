"""Shared CSV builders for tests."""

import csv
import datetime as dt


def write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def tweet_csv(path, rows, labeled=False):
    """rows: (id, created_at, text) or (id, created_at, text, label)."""
    header = ["id", "created_at", "full_text"] + (["label"] if labeled else [])
    return write_csv(path, header, rows)


def model_labeled_csv(path, rows):
    """rows: (id, created_at, text, nb, rf, lstm)."""
    header = ["id", "created_at", "full_text",
              "Label_nb", "Label_rf", "Label_lstm"]
    return write_csv(path, header, rows)


def ohlc_csv(path, dated_closes):
    """dated_closes: (iso_date, close); bars built consistently around it."""
    rows = []
    prev = dated_closes[0][1]
    for iso, close in dated_closes:
        body_hi = max(prev, close)
        body_lo = min(prev, close)
        rows.append([iso, f"{prev}", f"{body_hi * 1.01}", f"{body_lo * 0.99}",
                     f"{close}", f"{close}", 1000])
        prev = close
    return write_csv(path, ["Date", "Open", "High", "Low", "Close",
                            "Adj Close", "Volume"], rows)


def day(iso: str) -> dt.date:
    return dt.date.fromisoformat(iso)
