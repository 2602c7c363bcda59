"""Numpy fallback implementations of the hot kernels.

Same contracts as the compiled module: full-sequence LSTM forward and
backward passes, and split-candidate counting for tree growth. The
split counter returns integer counts so impurity math downstream is
bit-identical no matter which backend produced them.
"""

import numpy as np


def _sigmoid(z):
    # split by sign so exp never overflows
    out = np.empty_like(z)
    pos = z >= 0
    neg = ~pos
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[neg])
    out[neg] = ez / (1.0 + ez)
    return out


def lstm_seq_forward(x, w, u, b):
    """Run one LSTM direction over a full batch of sequences.

    x: (B, T, E) inputs, w: (E, 4H), u: (H, 4H), b: (4H,) with gate
    blocks ordered [input | forget | cell | output].
    Returns (h_seq (B,T,H), c_seq (B,T,H), gates (B,T,4H)) where gates
    holds post-activation values.
    """
    B, T, _ = x.shape
    H = u.shape[0]
    h_seq = np.empty((B, T, H))
    c_seq = np.empty((B, T, H))
    gates = np.empty((B, T, 4 * H))
    h = np.zeros((B, H))
    c = np.zeros((B, H))
    for t in range(T):
        z = x[:, t, :] @ w + h @ u + b
        i = _sigmoid(z[:, :H])
        f = _sigmoid(z[:, H:2 * H])
        g = np.tanh(z[:, 2 * H:3 * H])
        o = _sigmoid(z[:, 3 * H:])
        c = f * c + i * g
        h = o * np.tanh(c)
        gates[:, t, :H] = i
        gates[:, t, H:2 * H] = f
        gates[:, t, 2 * H:3 * H] = g
        gates[:, t, 3 * H:] = o
        c_seq[:, t] = c
        h_seq[:, t] = h
    return h_seq, c_seq, gates


def lstm_seq_backward(x, w, u, gates, c_seq, h_seq, dh_last):
    """Exact gradients for one direction given the forward caches.

    dh_last (B, H) is the loss gradient arriving at the final hidden
    state; earlier steps only receive gradient through the recurrence.
    Returns (dx (B,T,E), dw, du, db).
    """
    B, T, _ = x.shape
    H = u.shape[0]
    dx = np.zeros_like(x)
    dw = np.zeros_like(w)
    du = np.zeros_like(u)
    db = np.zeros(4 * H)
    dh = dh_last.copy()
    dc = np.zeros((B, H))
    for t in range(T - 1, -1, -1):
        i = gates[:, t, :H]
        f = gates[:, t, H:2 * H]
        g = gates[:, t, 2 * H:3 * H]
        o = gates[:, t, 3 * H:]
        tc = np.tanh(c_seq[:, t])
        do = dh * tc
        dc = dc + dh * o * (1.0 - tc * tc)
        c_prev = c_seq[:, t - 1] if t > 0 else np.zeros((B, H))
        h_prev = h_seq[:, t - 1] if t > 0 else np.zeros((B, H))
        di = dc * g
        dg = dc * i
        df = dc * c_prev
        dz = np.empty((B, 4 * H))
        dz[:, :H] = di * i * (1.0 - i)
        dz[:, H:2 * H] = df * f * (1.0 - f)
        dz[:, 2 * H:3 * H] = dg * (1.0 - g * g)
        dz[:, 3 * H:] = do * o * (1.0 - o)
        dw += x[:, t, :].T @ dz
        du += h_prev.T @ dz
        db += dz.sum(axis=0)
        dx[:, t, :] = dz @ w.T
        dh = dz @ u.T
        dc = dc * f
    return dx, dw, du, db


def rf_split_counts(X, y, idx, feats):
    """Count, per candidate feature, the node samples with the bit set.

    X: (N, F) uint8, y: (N,) uint8, idx: (n,) int64 node sample indices
    (repeats allowed), feats: (m,) int64 candidate features.
    Returns (n1, pos1) int64 arrays of length m: total samples with
    feature = 1, and how many of those carry label 1.
    """
    sub = X[idx][:, feats]
    ysub = y[idx].astype(np.int64)
    n1 = sub.sum(axis=0, dtype=np.int64)
    pos1 = (sub.astype(np.int64) * ysub[:, None]).sum(axis=0)
    return n1, pos1
