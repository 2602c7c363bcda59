"""Command line pipeline: train models, label tweets, derive signals.

Subcommands mirror the workflow stages. train fits the three
classifiers on a labeled corpus and reports held-out accuracy. label
applies saved models to a tweet stream. signals (alias: correlate)
aggregates per-day bullishness, joins it against price returns, and
writes aligned data, correlations, and SVG charts. preprocess dumps
the token pipeline output for inspection.

Every command writes a run manifest (effective config plus input file
checksums) into the output directory. Exit codes: 0 success, 1 usage
error, 2 data error, 3 internal invariant violation.
"""

import argparse
import csv
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import charts
from . import corpus
from . import features
from . import forest
from . import lstm
from . import metrics
from . import naive_bayes
from . import signals
from . import textprep
from .corpus import MODEL_NAMES, TickerFilter
from .errors import (
    DataError,
    EmptyDataset,
    InvalidSplit,
    StockSentError,
    UsageError,
)

MODEL_DISPLAY = {"lstm": "LSTM", "rf": "Random Forest", "nb": "Naive Bayes"}

VOCAB_FILE = "vocab.txt"
MODEL_FILES = {"nb": "nb.model", "rf": "forest.model", "lstm": "lstm.model"}


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad usage as UsageError (exit code 1)."""

    def error(self, message):
        raise UsageError(message)


def _add_common(p):
    p.add_argument("--out-dir", default="out",
                   help="directory for outputs and the run manifest")
    p.add_argument("--config", default=None,
                   help="JSON file of defaults; explicit flags still win")


def _add_text_opts(p):
    p.add_argument("--stopwords", default=None,
                   help="stopword file overriding the built-in list")


def build_parser() -> _Parser:
    parser = _Parser(prog="stocksent",
                     description="tweet sentiment vs stock returns pipeline")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)
    parser.subcommands = {}

    p = parser.subcommands["train"] = \
        sub.add_parser("train", help="fit the three classifiers")
    p.add_argument("--tweets", required=True, help="labeled training CSV")
    p.add_argument("--models-dir", default="models")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--train-frac", type=float, default=0.8)
    p.add_argument("--vocab-size", type=int, default=5000)
    p.add_argument("--max-length", type=int, default=30)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--uniform-prior", action="store_true")
    p.add_argument("--n-estimators", type=int, default=200)
    p.add_argument("--max-depth", type=int, default=60)
    p.add_argument("--min-samples-leaf", type=int, default=1)
    p.add_argument("--mtry", type=int, default=None)
    p.add_argument("--epochs", type=int, default=2)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--embedding-dim", type=int, default=32)
    p.add_argument("--lr", type=float, default=0.001)
    _add_text_opts(p)
    _add_common(p)

    p = parser.subcommands["label"] = \
        sub.add_parser("label", help="apply saved models to a tweet stream")
    p.add_argument("--tweets", required=True, help="unlabeled tweet CSV")
    p.add_argument("--models-dir", default="models")
    p.add_argument("--ticker", default=None,
                   help="keep only tweets mentioning this ticker")
    p.add_argument("--aliases", default=None,
                   help="comma-separated ticker aliases (default: the ticker)")
    _add_text_opts(p)
    _add_common(p)

    for name in ("signals", "correlate"):
        p = parser.subcommands[name] = \
            sub.add_parser(name, help="bullishness vs returns")
        p.add_argument("--tweets", required=True, help="model-labeled CSV")
        p.add_argument("--prices", required=True, help="OHLC price CSV")
        p.add_argument("--ticker", default="all",
                       help="name used in output files")
        p.add_argument("--align", choices=("lagged", "same-day"),
                       default="lagged")
        _add_common(p)

    p = parser.subcommands["preprocess"] = \
        sub.add_parser("preprocess", help="dump the token pipeline output")
    p.add_argument("--tweets", required=True)
    _add_text_opts(p)
    _add_common(p)
    return parser


def _apply_config(parser, args, argv):
    """Re-parse with config-file values as defaults; flags still win."""
    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.config}: invalid JSON ({exc})") from None
    if not isinstance(cfg, dict):
        raise UsageError(f"{args.config}: config must be a JSON object")
    known = set(vars(args))
    for key in cfg:
        if key in ("config", "command") or key not in known:
            raise UsageError(f"{args.config}: unknown config key {key!r}")
    parser.subcommands[args.command].set_defaults(**cfg)
    return parser.parse_args(argv)


def _sha256(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _write_manifest(args, input_paths):
    config = {k: v for k, v in vars(args).items() if k != "config"}
    del config["command"]
    manifest = {
        "command": args.command,
        "config": config,
        "inputs": {str(p): _sha256(p) for p in input_paths},
    }
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"manifest_{args.command}.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")


def _stopword_set(args):
    if args.stopwords:
        return textprep.load_stopwords(args.stopwords)
    return None


def _preprocessed(records, stopwords):
    return [textprep.preprocess(r.full_text, stopwords) for r in records]


def cmd_train(args) -> int:
    if not 0.0 < args.train_frac < 1.0:
        raise InvalidSplit(
            f"--train-frac must be strictly between 0 and 1, got {args.train_frac}")
    rows, skipped = corpus.load_tweets(args.tweets, with_labels=True)
    stopwords = _stopword_set(args)
    tokens = _preprocessed(rows, stopwords)
    labels = np.array([r.label for r in rows], dtype=np.int64)

    n = len(rows)
    n_train = int(args.train_frac * n)
    if n_train < 1 or n_train >= n:
        raise InvalidSplit(
            f"split leaves no train or no test rows (n={n}, frac={args.train_frac})")
    perm = np.random.default_rng(args.seed).permutation(n)
    train_idx, test_idx = perm[:n_train], perm[n_train:]
    print(f"loaded {n} rows ({skipped} skipped), "
          f"training on {n_train}, testing on {n - n_train}")

    vocab = features.build_vocabulary([tokens[i] for i in train_idx],
                                      args.vocab_size)
    bows = features.encode_binary_matrix(tokens, vocab)
    seqs = features.encode_sequence_matrix(tokens, vocab, args.max_length)

    nb_model = naive_bayes.fit_nb(bows[train_idx], labels[train_idx],
                                  alpha=args.alpha,
                                  uniform_prior=args.uniform_prior)
    rf_model = forest.fit_forest(bows[train_idx], labels[train_idx],
                                 n_estimators=args.n_estimators,
                                 max_depth=args.max_depth, mtry=args.mtry,
                                 min_samples_leaf=args.min_samples_leaf,
                                 seed=args.seed)
    net = lstm.init_network(vocab.size, embedding_dim=args.embedding_dim,
                            max_length=args.max_length, seed=args.seed)
    _, history = lstm.train(net, seqs[train_idx],
                            labels[train_idx].astype(np.float64),
                            epochs=args.epochs, validation_split=0.1,
                            batch_size=args.batch_size, lr=args.lr,
                            seed=args.seed)
    for e in range(len(history.train_loss)):
        print(f"lstm epoch {e + 1}: loss={history.train_loss[e]:.4f} "
              f"acc={history.train_acc[e]:.4f} "
              f"val_loss={history.val_loss[e]:.4f} "
              f"val_acc={history.val_acc[e]:.4f}")

    models_dir = Path(args.models_dir)
    models_dir.mkdir(parents=True, exist_ok=True)
    features.save_vocabulary(vocab, models_dir / VOCAB_FILE)
    naive_bayes.save_nb(nb_model, models_dir / MODEL_FILES["nb"])
    forest.save_forest(rf_model, models_dir / MODEL_FILES["rf"])
    lstm.save_lstm(net, models_dir / MODEL_FILES["lstm"])

    y_test = labels[test_idx]
    predictions = (
        ("nb", naive_bayes.predict_many(nb_model, bows[test_idx])),
        ("rf", forest.predict_many(rf_model, bows[test_idx])),
        ("lstm", lstm.predict_many(net, seqs[test_idx])),
    )
    sections = []
    for name, pred in predictions:
        cm = metrics.confusion(y_test.tolist(), pred.tolist())
        sections.append(f"model: {name}\n{metrics.format_confusion(cm)}")
    report = "\n\n".join(sections) + "\n"
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "report.txt").write_text(report, encoding="utf-8")
    print(report, end="")

    inputs = [args.tweets] + ([args.stopwords] if args.stopwords else [])
    _write_manifest(args, inputs)
    return 0


def _ticker_filter(args):
    if not args.ticker:
        return None
    if args.aliases:
        aliases = frozenset(a.strip().lower()
                            for a in args.aliases.split(",") if a.strip())
    else:
        aliases = frozenset((args.ticker.lower(),))
    return TickerFilter(ticker=args.ticker.lower(), aliases=aliases)


def cmd_label(args) -> int:
    records, skipped = corpus.load_tweets(args.tweets)
    ticker_filter = _ticker_filter(args)
    if ticker_filter is not None:
        records = corpus.filter_by_ticker(records, ticker_filter)
        if not records:
            raise EmptyDataset(
                f"no tweets mention ticker {ticker_filter.ticker!r}")

    models_dir = Path(args.models_dir)
    vocab = features.load_vocabulary(models_dir / VOCAB_FILE)
    nb_model = naive_bayes.load_nb(models_dir / MODEL_FILES["nb"])
    rf_model = forest.load_forest(models_dir / MODEL_FILES["rf"])
    net = lstm.load_lstm(models_dir / MODEL_FILES["lstm"])

    tokens = _preprocessed(records, _stopword_set(args))
    bows = features.encode_binary_matrix(tokens, vocab)
    seqs = features.encode_sequence_matrix(tokens, vocab, net.max_length)
    pred = {
        "nb": naive_bayes.predict_many(nb_model, bows),
        "rf": forest.predict_many(rf_model, bows),
        "lstm": lstm.predict_many(net, seqs),
    }

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = f"{args.ticker.lower()}_labeled.csv" if args.ticker else "labeled.csv"
    out_path = out_dir / name
    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "created_at", "full_text",
                         "Label_nb", "Label_rf", "Label_lstm"])
        for i, rec in enumerate(records):
            writer.writerow([rec.id, rec.created_at.isoformat(),
                             rec.full_text, int(pred["nb"][i]),
                             int(pred["rf"][i]), int(pred["lstm"][i])])
    print(f"labeled {len(records)} tweets ({skipped} skipped) -> {out_path}")

    inputs = [args.tweets, models_dir / VOCAB_FILE]
    inputs += [models_dir / MODEL_FILES[m] for m in ("nb", "rf", "lstm")]
    if args.stopwords:
        inputs.append(args.stopwords)
    _write_manifest(args, inputs)
    return 0


def cmd_signals(args) -> int:
    tweets, skipped = corpus.load_model_labeled(args.tweets)
    bars = corpus.load_ohlc(args.prices)
    sentiment = signals.bullishness_series(tweets)
    returns = signals.return_series(bars)
    pairs = signals.align(returns, sentiment, mode=args.align)
    if not pairs:
        raise EmptyDataset("no aligned sentiment/return pairs")
    corr = signals.correlations(pairs)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ticker = args.ticker.lower()

    with open(out_dir / f"{ticker}_aligned.csv", "w", newline="",
              encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["date", "lstm", "rf", "nb", "return"])
        for p in pairs:
            writer.writerow([p.sentiment_date.isoformat(), repr(p.lstm),
                             repr(p.rf), repr(p.nb), repr(p.return_value)])

    with open(out_dir / f"{ticker}_correlations.csv", "w", newline="",
              encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["model", "pearson_r", "n_pairs"])
        for model in MODEL_NAMES:
            writer.writerow([model, repr(corr[model]), len(pairs)])

    bull_series = [(MODEL_DISPLAY[m],
                    [(s.date, s.value(m)) for s in sentiment])
                   for m in MODEL_NAMES]
    charts.line_chart(f"{ticker} bullishness", bull_series,
                      out_dir / f"{ticker}_bullishness.svg")
    for model in MODEL_NAMES:
        overlay = [
            (f"{MODEL_DISPLAY[model]} bullishness",
             [(p.sentiment_date, getattr(p, model)) for p in pairs]),
            ("return",
             [(p.sentiment_date, p.return_value) for p in pairs]),
        ]
        charts.line_chart(f"{ticker} {MODEL_DISPLAY[model]} vs return",
                          overlay, out_dir / f"{ticker}_{model}_vs_return.svg")

    for model in MODEL_NAMES:
        print(f"{model}: r={corr[model]:.4f} over {len(pairs)} pairs")
    if skipped:
        print(f"({skipped} labeled rows skipped)")
    _write_manifest(args, [args.tweets, args.prices])
    return 0


def cmd_preprocess(args) -> int:
    records, skipped = corpus.load_tweets(args.tweets)
    stopwords = _stopword_set(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / "preprocessed.csv"
    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "created_at", "tokens"])
        for rec in records:
            toks = textprep.preprocess(rec.full_text, stopwords)
            writer.writerow([rec.id, rec.created_at.isoformat(),
                             " ".join(toks)])
    print(f"preprocessed {len(records)} tweets ({skipped} skipped) -> {out_path}")
    inputs = [args.tweets] + ([args.stopwords] if args.stopwords else [])
    _write_manifest(args, inputs)
    return 0


_HANDLERS = {
    "train": cmd_train,
    "label": cmd_label,
    "signals": cmd_signals,
    "correlate": cmd_signals,
    "preprocess": cmd_preprocess,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.config:
            args = _apply_config(parser, args, argv)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StockSentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
