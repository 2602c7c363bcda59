"""Release gates for the full package, one printed line per criterion.

Each test checks one release criterion against a fixed tolerance and
time budget and prints a single PASS/FAIL line (run with ``pytest -s``
to see them). The slow criteria share one deterministic end-to-end
pipeline over the synthetic market fixture.
"""

import csv
import math
import time
from datetime import date
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

import oracles
from stocksent import corpus, features, fixtures, porter, textprep
from stocksent.cli import main
from stocksent.forest import fit_forest, fit_tree, predict_forest, predict_tree
from stocksent.lstm import init_network, train
from stocksent import lstm as lstm_mod
from stocksent.naive_bayes import fit_nb, predict_nb
from stocksent.signals import (
    DailyReturn,
    DailySentiment,
    align,
    bullishness,
    bullishness_series,
    pearson,
    return_series,
)

REFERENCE_VOCABULARY = Path(__file__).parent / "data" / "porter_reference.txt"


def report(num: int, ok: bool, detail: str):
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def run_cli(*argv):
    return main([str(a) for a in argv])


def run_pipeline(root: Path, training: Path, stream: Path, prices: Path,
                 **train_flags):
    """train -> label -> signals into root; returns the output paths."""
    flags = []
    for key, value in train_flags.items():
        flags += [f"--{key.replace('_', '-')}", value]
    assert run_cli("train", "--tweets", training,
                   "--models-dir", root / "models",
                   "--out-dir", root / "train_out", "--seed", 0,
                   *flags) == 0
    assert run_cli("label", "--tweets", stream,
                   "--models-dir", root / "models",
                   "--ticker", "acme", "--out-dir", root / "label_out") == 0
    assert run_cli("signals", "--tweets",
                   root / "label_out" / "acme_labeled.csv",
                   "--prices", prices, "--ticker", "acme",
                   "--out-dir", root / "signals_out") == 0
    return {
        "models": [root / "models" / name
                   for name in ("vocab.txt", "nb.model", "forest.model",
                                "lstm.model")],
        "csvs": [root / "label_out" / "acme_labeled.csv",
                 root / "signals_out" / "acme_aligned.csv",
                 root / "signals_out" / "acme_correlations.csv"],
        "report": root / "train_out" / "report.txt",
        "labeled": root / "label_out" / "acme_labeled.csv",
        "correlations": root / "signals_out" / "acme_correlations.csv",
    }


@pytest.fixture(scope="module")
def market_data(tmp_path_factory):
    root = tmp_path_factory.mktemp("market")
    training = root / "training.csv"
    stream = root / "stream.csv"
    prices = root / "prices.csv"
    fixtures.gen_training_corpus(training, n_rows=2000, seed=0)
    fixtures.gen_market(stream, prices, days=90, tweets_per_day=40,
                        ticker="acme", seed=0)
    return {"root": root, "training": training, "stream": stream,
            "prices": prices}


@pytest.fixture(scope="module")
def pipeline(market_data):
    started = time.monotonic()
    first = run_pipeline(market_data["root"] / "run_a",
                         market_data["training"], market_data["stream"],
                         market_data["prices"])
    elapsed = time.monotonic() - started
    second = run_pipeline(market_data["root"] / "run_b",
                          market_data["training"], market_data["stream"],
                          market_data["prices"])
    return {"first": first, "second": second, "elapsed": elapsed}


def test_criterion_01_formula_fidelity():
    started = time.monotonic()
    class Bar:
        def __init__(self, day, close):
            self.date = day
            self.close = close

    ok = abs(bullishness(9, 4) - math.log(2.0)) < 1e-9
    bars = [Bar(date(2020, 4, 9), 100.0), Bar(date(2020, 4, 10), 200.0)]
    ok &= abs(return_series(bars)[0].value - 100.0 * math.log(2.0)) < 1e-9
    closes = [100.0, 104.2, 97.3, 99.9, 121.4, 118.0]
    bars = [Bar(date(2020, 4, 9 + i), c) for i, c in enumerate(closes)]
    total = sum(r.value for r in return_series(bars))
    expected = 100.0 * (math.log(closes[-1]) - math.log(closes[0]))
    ok &= abs(total - expected) < 1e-9
    elapsed = time.monotonic() - started
    ok &= elapsed < 1.0
    report(1, ok, f"bullishness and log-return formulas reproduce "
                  f"hand values to 1e-9 ({elapsed:.2f}s < 1s)")


def test_criterion_02_naive_bayes_matches_rational_oracle():
    started = time.monotonic()
    rng = np.random.default_rng(2024)
    alphas = (Fraction(1), Fraction(1, 2), Fraction(2))
    mismatches = 0
    for case in range(200):
        n = int(rng.integers(1, 11))
        f = int(rng.integers(1, 6))
        X = (rng.random((n, f)) < 0.5).astype(int)
        y = (rng.random(n) < 0.5).astype(int)
        x = (rng.random(f) < 0.5).astype(int)
        alpha = alphas[case % len(alphas)]
        model = fit_nb(X, y, alpha=float(alpha))
        expected = oracles.nb_label_rational(X.tolist(), y.tolist(), alpha,
                                             x.tolist())
        if predict_nb(model, x)[0] != expected:
            mismatches += 1
    elapsed = time.monotonic() - started
    ok = mismatches == 0 and elapsed < 10.0
    report(2, ok, f"naive bayes labels match exact rational posteriors on "
                  f"200 corpora, {mismatches} mismatches "
                  f"({elapsed:.2f}s < 10s)")


def test_criterion_03_forest_matches_cart_and_vote_oracles():
    started = time.monotonic()
    rng = np.random.default_rng(3033)
    tree_mismatches = 0
    for _ in range(50):
        X = (rng.random((20, 4)) < 0.5).astype(np.uint8)
        y = (rng.random(20) < 0.5).astype(np.uint8)
        tree = fit_tree(X, y)
        ref = oracles.cart_fit(X.tolist(), y.tolist(), list(range(20)),
                               0, 60, 1)
        for row in X:
            if predict_tree(tree, row) != oracles.cart_predict(
                    ref, row.tolist()):
                tree_mismatches += 1
    vote_mismatches = 0
    for trial in range(10):
        X = (rng.random((30, 5)) < 0.5).astype(np.uint8)
        y = (rng.random(30) < 0.5).astype(np.uint8)
        woods = fit_forest(X, y, n_estimators=5 + trial, seed=trial)
        for q in (rng.random((10, 5)) < 0.5).astype(np.uint8):
            if predict_forest(woods, q)[0] != oracles.forest_vote(
                    woods.trees, q):
                vote_mismatches += 1
    elapsed = time.monotonic() - started
    ok = tree_mismatches == 0 and vote_mismatches == 0 and elapsed < 30.0
    report(3, ok, f"forest trees and votes match exhaustive oracles, "
                  f"{tree_mismatches}+{vote_mismatches} mismatches "
                  f"({elapsed:.2f}s < 30s)")


def test_criterion_04_lstm_gradient_check():
    started = time.monotonic()
    net = init_network(4, embedding_dim=3, max_length=6, hidden=4, dense=3,
                       seed=404)
    n_params = sum(v.size for v in net.params.values())
    assert n_params <= 500
    rng = np.random.default_rng(405)
    step = 1e-5
    worst = 0.0
    for _ in range(10):
        seqs = rng.integers(0, 5, size=(1, 6))
        y = rng.integers(0, 2, size=1).astype(np.float64)

        def loss():
            prob, _ = lstm_mod._forward_batch(net, seqs)
            return float(lstm_mod._bce_vec(prob, y).sum())

        _, cache = lstm_mod._forward_batch(net, seqs)
        grads = lstm_mod._backward_batch(net, cache, y)
        for name in lstm_mod.PARAM_NAMES:
            tensor = net.params[name]
            for i in range(tensor.size):
                orig = tensor.flat[i]
                tensor.flat[i] = orig + step
                up = loss()
                tensor.flat[i] = orig - step
                down = loss()
                tensor.flat[i] = orig
                numeric = (up - down) / (2.0 * step)
                analytic = grads[name].flat[i]
                # Below ~1e-6 the h=1e-5 central difference hits its
                # float64 noise floor, so the comparison degrades to an
                # absolute check at 1e-10 there.
                denom = max(abs(numeric) + abs(analytic), 1e-6)
                worst = max(worst, abs(numeric - analytic) / denom)
    elapsed = time.monotonic() - started
    ok = worst < 1e-4 and elapsed < 60.0
    report(4, ok, f"analytic gradients match central differences over "
                  f"{n_params} parameters x 10 inputs, max relative error "
                  f"{worst:.2e} < 1e-4 ({elapsed:.2f}s < 60s)")


def test_criterion_05_lstm_learning_checks():
    started = time.monotonic()
    net = init_network(50, embedding_dim=8, max_length=6, hidden=8, dense=8,
                       seed=0)
    _, history = train(net, [[1, 2, 3, 4, 5, 6]], [1], epochs=200,
                       validation_split=0.0, batch_size=1, lr=0.01, seed=0)
    overfit_loss = history.train_loss[-1]

    rng = np.random.default_rng(42)
    fillers = ["market", "shares", "trading", "price", "volume", "chart",
               "open", "close", "watch", "level", "range", "session"]
    texts, labels = [], []
    for _ in range(500):
        words = [fillers[j] for j in rng.integers(0, len(fillers), size=6)]
        label = int(rng.integers(0, 2))
        if label:
            words.insert(int(rng.integers(0, len(words) + 1)), "good")
        texts.append(" ".join(words))
        labels.append(label)
    tokens = [textprep.preprocess(t) for t in texts]
    vocab = features.build_vocabulary(tokens, 50)
    seqs = features.encode_sequence_matrix(tokens, vocab, 8)
    net = init_network(vocab.size, embedding_dim=8, max_length=8, hidden=16,
                       dense=8, seed=0)
    _, history = train(net, seqs, np.array(labels, dtype=np.float64),
                       epochs=2, validation_split=0.1, batch_size=8,
                       lr=0.01, seed=0)
    val_acc = history.val_acc[-1]
    improved = history.train_loss[-1] < history.train_loss[0]

    elapsed = time.monotonic() - started
    ok = overfit_loss < 0.01 and val_acc >= 0.9 and improved \
        and elapsed < 120.0
    report(5, ok, f"one-sample loss {overfit_loss:.4f} < 0.01 after 200 "
                  f"epochs; marker-word accuracy {val_acc:.2f} >= 0.90 "
                  f"after 2 epochs ({elapsed:.2f}s < 120s)")


def test_criterion_06_end_to_end_signal_recovery(pipeline):
    with open(pipeline["first"]["correlations"], newline="",
              encoding="utf-8") as fh:
        rows = list(csv.reader(fh))[1:]
    corr = {row[0]: float(row[1]) for row in rows}
    n_pairs = int(rows[0][2])
    elapsed = pipeline["elapsed"]
    ok = corr["nb"] >= 0.6 and corr["rf"] >= 0.6 and elapsed < 300.0
    report(6, ok, f"pipeline recovers planted sentiment-return link over "
                  f"{n_pairs} days: nb r={corr['nb']:.4f}, "
                  f"rf r={corr['rf']:.4f}, both >= 0.6 "
                  f"({elapsed:.1f}s < 300s)")


def test_criterion_07_alignment_matches_hand_trace():
    import random
    rng = random.Random(707)
    base = date(2020, 4, 1).toordinal()
    mismatches = 0
    for _ in range(20):
        # Sentiment on an arbitrary subset of days; returns only on
        # weekdays, stretched past both ends of the sentiment window so
        # boundary drops are exercised along with weekend gaps.
        s_days = sorted(rng.sample(range(5, 35), rng.randint(2, 14)))
        weekdays = [d for d in range(40)
                    if date.fromordinal(base + d).weekday() < 5]
        r_days = sorted(rng.sample(weekdays, rng.randint(2, 16)))
        r_days = sorted({0, 39} | set(r_days))
        sentiment = [DailySentiment(date=date.fromordinal(base + d),
                                    lstm=rng.uniform(-1, 1),
                                    rf=rng.uniform(-1, 1),
                                    nb=rng.uniform(-1, 1))
                     for d in s_days]
        returns = [DailyReturn(date=date.fromordinal(base + d),
                               value=rng.uniform(-5, 5))
                   for d in r_days]
        expected = oracles.align_trace(
            [(r.date, r.value) for r in returns],
            [(s.date, s) for s in sentiment])
        pairs = align(returns, sentiment)
        if len(pairs) != len(expected):
            mismatches += 1
            continue
        for pair, (s_date, s, r_date, r_value) in zip(pairs, expected):
            if (pair.sentiment_date, pair.return_date, pair.return_value,
                    pair.lstm, pair.rf, pair.nb) != \
                    (s_date, r_date, r_value, s.lstm, s.rf, s.nb):
                mismatches += 1
    ok = mismatches == 0
    report(7, ok, f"lagged alignment matches a hand trace on 20 randomized "
                  f"calendars, {mismatches} mismatches")


def test_criterion_08_stemmer_matches_reference_vocabulary():
    pairs = []
    with open(REFERENCE_VOCABULARY, encoding="ascii") as fh:
        for line in fh:
            word, expected = line.split()
            pairs.append((word, expected))
    assert len(pairs) >= 1000
    mismatches = sum(1 for word, expected in pairs
                     if porter.stem(word) != expected)
    ok = mismatches == 0
    report(8, ok, f"stemmer reproduces all {len(pairs)} reference "
                  f"vocabulary entries, {mismatches} mismatches")


def test_criterion_09_reruns_are_byte_identical(pipeline):
    first, second = pipeline["first"], pipeline["second"]
    differing = []
    for kind in ("models", "csvs"):
        for a, b in zip(first[kind], second[kind]):
            if a.read_bytes() != b.read_bytes():
                differing.append(a.name)
    if first["report"].read_bytes() != second["report"].read_bytes():
        differing.append("report.txt")
    checked = len(first["models"]) + len(first["csvs"]) + 1
    ok = not differing
    report(9, ok, f"two identically seeded runs produced {checked} "
                  f"byte-identical model/output files"
                  + (f" (differs: {differing})" if differing else ""))


def test_criterion_10_weak_forest_separates_from_the_pair(market_data):
    root = market_data["root"] / "weak"
    out = run_pipeline(root, market_data["training"],
                       market_data["stream"], market_data["prices"],
                       max_depth=1, n_estimators=5)
    tweets, _ = corpus.load_model_labeled(out["labeled"])
    series = bullishness_series(tweets)
    nb_series = [s.nb for s in series]
    lstm_series = [s.lstm for s in series]
    rf_series = [s.rf for s in series]
    r_nb_lstm = pearson(nb_series, lstm_series)
    r_nb_rf = pearson(nb_series, rf_series)
    r_lstm_rf = pearson(lstm_series, rf_series)
    ok = r_nb_lstm > r_nb_rf and r_nb_lstm > r_lstm_rf
    report(10, ok, f"with a depth-1 five-tree forest, nb and lstm "
                   f"bullishness agree more with each other "
                   f"(r={r_nb_lstm:.4f}) than either does with rf "
                   f"(r={r_nb_rf:.4f}, r={r_lstm_rf:.4f})")
