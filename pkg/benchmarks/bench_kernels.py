"""Time the compiled kernels against the numpy fallback.

Runs each kernel on training-shaped inputs and prints the median wall
time per call for both backends. Usage:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import statistics
import time

import numpy as np

from stocksent.kernels import pure

try:
    from stocksent.kernels import _core
except ImportError:
    _core = None


def median_time(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def lstm_inputs(rng, batch=32, steps=30, emb=32, hidden=64):
    x = rng.standard_normal((batch, steps, emb))
    w = rng.standard_normal((emb, 4 * hidden)) * 0.1
    u = rng.standard_normal((hidden, 4 * hidden)) * 0.1
    b = rng.standard_normal(4 * hidden) * 0.1
    return x, w, u, b


def forest_inputs(rng, rows=2000, features=5000, mtry=71):
    X = (rng.random((rows, features)) < 0.05).astype(np.uint8)
    y = (rng.random(rows) < 0.5).astype(np.uint8)
    idx = np.sort(rng.integers(0, rows, size=rows)).astype(np.int64)
    feats = np.sort(rng.choice(features, size=mtry,
                               replace=False)).astype(np.int64)
    return X, y, idx, feats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=20,
                        help="timed calls per kernel (median reported)")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    x, w, u, b = lstm_inputs(rng)
    h_seq, c_seq, gates = pure.lstm_seq_forward(x, w, u, b)
    dh_last = rng.standard_normal((x.shape[0], u.shape[0]))
    X, y, idx, feats = forest_inputs(rng)

    cases = [
        ("lstm_seq_forward (32x30x32, h=64)",
         lambda impl: impl.lstm_seq_forward(x, w, u, b)),
        ("lstm_seq_backward (same shapes)",
         lambda impl: impl.lstm_seq_backward(x, w, u, gates, c_seq, h_seq,
                                             dh_last)),
        ("rf_split_counts (2000x5000, 71 feats)",
         lambda impl: impl.rf_split_counts(X, y, idx, feats)),
    ]

    backends = [("pure", pure)]
    if _core is not None:
        backends.append(("compiled", _core))
    else:
        print("compiled backend not built; timing the fallback only\n")

    width = max(len(name) for name, _ in cases)
    header = f"{'kernel':<{width}}" + "".join(
        f"  {name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>9}"
    print(header)
    for case_name, call in cases:
        row = f"{case_name:<{width}}"
        timings = []
        for _, impl in backends:
            call(impl)  # warm up
            t = median_time(lambda: call(impl), args.repeat)
            timings.append(t)
            row += f"  {t * 1e3:>10.3f}ms"
        if len(timings) == 2:
            row += f"  {timings[0] / timings[1]:>8.2f}x"
        print(row)


if __name__ == "__main__":
    main()
