"""Bidirectional LSTM sentiment network trained from scratch.

Architecture: trainable embedding (padding id 0 included), one LSTM cell
per direction (hidden 64), final hidden states concatenated into a
ReLU dense layer of 24 units, then a sigmoid output unit. Training is
exact backpropagation through time on mean binary cross-entropy with
Adam updates.

Gate blocks are ordered [input | forget | cell | output] in every 4H
tensor. All math is double precision.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import (
    DimensionMismatch,
    EmptyData,
    IdOutOfRange,
    InvalidSplit,
    ModelVersionMismatch,
)

LSTM_FORMAT = "lstmnet 1"
PROB_EPS = 1e-12

# tensor order is the serialization order and the Adam iteration order
PARAM_NAMES = ("embedding", "w_f", "u_f", "b_f", "w_b", "u_b", "b_b",
               "w1", "b1", "w2", "b2")


@dataclass
class LstmNetwork:
    params: dict
    vocab_size: int
    embedding_dim: int
    max_length: int
    hidden: int
    dense: int

    def copy(self):
        return LstmNetwork(
            params={k: v.copy() for k, v in self.params.items()},
            vocab_size=self.vocab_size, embedding_dim=self.embedding_dim,
            max_length=self.max_length, hidden=self.hidden, dense=self.dense)


@dataclass
class TrainHistory:
    train_loss: list = field(default_factory=list)
    train_acc: list = field(default_factory=list)
    val_loss: list = field(default_factory=list)
    val_acc: list = field(default_factory=list)


def init_network(vocab_size: int, embedding_dim: int = 32,
                 max_length: int = 30, hidden: int = 64, dense: int = 24,
                 seed: int = 0) -> LstmNetwork:
    """Fresh network: uniform embedding, Glorot weights, forget bias 1."""
    rng = np.random.default_rng(seed)

    def glorot(shape, fan_in, fan_out):
        limit = math.sqrt(6.0 / (fan_in + fan_out))
        return rng.uniform(-limit, limit, size=shape)

    def gate_bias():
        b = np.zeros(4 * hidden)
        b[hidden:2 * hidden] = 1.0
        return b

    params = {"embedding": rng.uniform(-0.05, 0.05,
                                       size=(vocab_size + 1, embedding_dim))}
    for tag in ("f", "b"):
        params[f"w_{tag}"] = glorot((embedding_dim, 4 * hidden),
                                    embedding_dim, 4 * hidden)
        params[f"u_{tag}"] = glorot((hidden, 4 * hidden), hidden, 4 * hidden)
        params[f"b_{tag}"] = gate_bias()
    params["w1"] = glorot((2 * hidden, dense), 2 * hidden, dense)
    params["b1"] = np.zeros(dense)
    params["w2"] = glorot((dense, 1), dense, 1)
    params["b2"] = np.zeros(1)
    return LstmNetwork(params=params, vocab_size=vocab_size,
                       embedding_dim=embedding_dim, max_length=max_length,
                       hidden=hidden, dense=dense)


def _check_sequences(net, seqs):
    seqs = np.asarray(seqs, dtype=np.int64)
    single = seqs.ndim == 1
    if single:
        seqs = seqs[None, :]
    if seqs.ndim != 2 or seqs.shape[1] != net.max_length:
        raise DimensionMismatch(
            f"sequences must have length {net.max_length}, got shape {seqs.shape}")
    if seqs.size and (seqs.min() < 0 or seqs.max() > net.vocab_size):
        raise IdOutOfRange(
            f"token ids must lie in [0, {net.vocab_size}]")
    return seqs, single


def _forward_batch(net, seqs):
    """Full forward pass; returns probabilities and the backward cache."""
    p = net.params
    x = p["embedding"][seqs]                      # (B, T, E)
    x_rev = np.ascontiguousarray(x[:, ::-1, :])
    h_f, c_f, g_f = kernels.lstm_seq_forward(x, p["w_f"], p["u_f"], p["b_f"])
    h_b, c_b, g_b = kernels.lstm_seq_forward(x_rev, p["w_b"], p["u_b"], p["b_b"])
    concat = np.concatenate([h_f[:, -1, :], h_b[:, -1, :]], axis=1)
    a1 = concat @ p["w1"] + p["b1"]
    r1 = np.maximum(a1, 0.0)
    z2 = r1 @ p["w2"] + p["b2"]
    prob = _sigmoid(z2[:, 0])
    prob = np.clip(prob, PROB_EPS, 1.0 - PROB_EPS)
    cache = {"seqs": seqs, "x": x, "x_rev": x_rev,
             "h_f": h_f, "c_f": c_f, "g_f": g_f,
             "h_b": h_b, "c_b": c_b, "g_b": g_b,
             "concat": concat, "a1": a1, "r1": r1, "prob": prob}
    return prob, cache


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    neg = ~pos
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[neg])
    out[neg] = ez / (1.0 + ez)
    return out


def _backward_batch(net, cache, y):
    """Gradients of mean BCE over the batch for every parameter."""
    p = net.params
    B = y.shape[0]
    H = net.hidden
    dz2 = ((cache["prob"] - y) / B)[:, None]          # (B, 1)
    grads = {}
    grads["w2"] = cache["r1"].T @ dz2
    grads["b2"] = dz2.sum(axis=0)
    dr1 = dz2 @ p["w2"].T
    da1 = dr1 * (cache["a1"] > 0)
    grads["w1"] = cache["concat"].T @ da1
    grads["b1"] = da1.sum(axis=0)
    dconcat = da1 @ p["w1"].T
    dx_f, dw_f, du_f, db_f = kernels.lstm_seq_backward(
        cache["x"], p["w_f"], p["u_f"], cache["g_f"], cache["c_f"],
        cache["h_f"], np.ascontiguousarray(dconcat[:, :H]))
    dx_b_rev, dw_b, du_b, db_b = kernels.lstm_seq_backward(
        cache["x_rev"], p["w_b"], p["u_b"], cache["g_b"], cache["c_b"],
        cache["h_b"], np.ascontiguousarray(dconcat[:, H:]))
    grads["w_f"], grads["u_f"], grads["b_f"] = dw_f, du_f, db_f
    grads["w_b"], grads["u_b"], grads["b_b"] = dw_b, du_b, db_b
    dx = dx_f + dx_b_rev[:, ::-1, :]
    demb = np.zeros_like(p["embedding"])
    np.add.at(demb, cache["seqs"].reshape(-1),
              dx.reshape(-1, net.embedding_dim))
    grads["embedding"] = demb
    return grads


def forward(net: LstmNetwork, seq) -> float:
    """Probability that the sequence is positive."""
    seqs, single = _check_sequences(net, seq)
    prob, _ = _forward_batch(net, seqs)
    return float(prob[0]) if single else prob


def predict_label(net: LstmNetwork, seq, threshold: float = 0.5) -> int:
    return 1 if forward(net, seq) >= threshold else 0


def predict_many(net: LstmNetwork, seqs, threshold: float = 0.5,
                 chunk: int = 256) -> np.ndarray:
    seqs, _ = _check_sequences(net, seqs)
    labels = np.empty(seqs.shape[0], dtype=np.int64)
    for start in range(0, seqs.shape[0], chunk):
        prob, _ = _forward_batch(net, seqs[start:start + chunk])
        labels[start:start + chunk] = (prob >= threshold).astype(np.int64)
    return labels


def bce_loss(p: float, y: int) -> float:
    """Binary cross-entropy with the probability clamped away from 0/1."""
    p = min(max(p, PROB_EPS), 1.0 - PROB_EPS)
    return -(y * math.log(p) + (1 - y) * math.log(1.0 - p))


def _bce_vec(prob, y):
    return -(y * np.log(prob) + (1.0 - y) * np.log(1.0 - prob))


class Adam:
    """Adam with bias correction; epsilon sits outside the square root."""

    def __init__(self, net, lr=0.001, beta1=0.9, beta2=0.999, eps=1e-8):
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.t = 0
        self.m = {k: np.zeros_like(v) for k, v in net.params.items()}
        self.v = {k: np.zeros_like(v) for k, v in net.params.items()}

    def step(self, net, grads):
        self.t += 1
        b1c = 1.0 - self.beta1 ** self.t
        b2c = 1.0 - self.beta2 ** self.t
        for name in PARAM_NAMES:
            g = grads[name]
            m = self.m[name]
            v = self.v[name]
            m *= self.beta1
            m += (1.0 - self.beta1) * g
            v *= self.beta2
            v += (1.0 - self.beta2) * (g * g)
            net.params[name] -= self.lr * (m / b1c) / (np.sqrt(v / b2c) + self.eps)


def train(net: LstmNetwork, sequences, labels, epochs: int = 2,
          validation_split: float = 0.1, batch_size: int = 32,
          lr: float = 0.001, beta1: float = 0.9, beta2: float = 0.999,
          eps: float = 1e-8, seed: int = 0):
    """Train in place; returns (net, TrainHistory).

    The trailing floor(split * n) examples are the validation holdout
    (no shuffling moves the boundary); the training portion is shuffled
    each epoch from a seeded stream.
    """
    seqs, _ = _check_sequences(net, sequences)
    y = np.asarray(labels, dtype=np.float64)
    if seqs.shape[0] == 0 or y.shape[0] == 0:
        raise EmptyData("no training examples")
    if seqs.shape[0] != y.shape[0]:
        raise DimensionMismatch(
            f"{seqs.shape[0]} sequences vs {y.shape[0]} labels")
    if not 0.0 <= validation_split <= 0.5:
        raise InvalidSplit(
            f"validation_split must be in [0, 0.5], got {validation_split}")

    n = seqs.shape[0]
    n_val = int(validation_split * n)
    n_train = n - n_val
    train_seqs, train_y = seqs[:n_train], y[:n_train]
    val_seqs, val_y = seqs[n_train:], y[n_train:]

    rng = np.random.default_rng(seed)
    adam = Adam(net, lr=lr, beta1=beta1, beta2=beta2, eps=eps)
    history = TrainHistory()
    for _ in range(epochs):
        perm = rng.permutation(n_train)
        loss_sum = 0.0
        correct = 0
        for start in range(0, n_train, batch_size):
            batch = perm[start:start + batch_size]
            prob, cache = _forward_batch(net, train_seqs[batch])
            yb = train_y[batch]
            loss_sum += float(_bce_vec(prob, yb).sum())
            correct += int(((prob >= 0.5) == (yb == 1.0)).sum())
            grads = _backward_batch(net, cache, yb)
            adam.step(net, grads)
        history.train_loss.append(loss_sum / n_train)
        history.train_acc.append(correct / n_train)
        if n_val:
            vprob = np.empty(n_val)
            for s in range(0, n_val, 256):
                vprob[s:s + 256], _ = _forward_batch(net, val_seqs[s:s + 256])
            history.val_loss.append(float(_bce_vec(vprob, val_y).mean()))
            history.val_acc.append(
                float(((vprob >= 0.5) == (val_y == 1.0)).mean()))
        else:
            history.val_loss.append(float("nan"))
            history.val_acc.append(float("nan"))
    return net, history


def save_lstm(net: LstmNetwork, path):
    """Binary container: ascii header lines, then raw float64 tensors."""
    header = [
        LSTM_FORMAT,
        f"vocab_size {net.vocab_size}",
        f"embedding_dim {net.embedding_dim}",
        f"max_length {net.max_length}",
        f"hidden {net.hidden}",
        f"dense {net.dense}",
    ]
    for name in PARAM_NAMES:
        dims = " ".join(str(d) for d in net.params[name].shape)
        header.append(f"tensor {name} {dims}")
    header.append("end")
    with open(path, "wb") as fh:
        fh.write(("\n".join(header) + "\n").encode("ascii"))
        for name in PARAM_NAMES:
            fh.write(np.ascontiguousarray(net.params[name], dtype="<f8").tobytes())


def load_lstm(path) -> LstmNetwork:
    with open(path, "rb") as fh:
        data = fh.read()
    nl = data.find(b"\nend\n")
    if nl < 0 or not data.startswith(LSTM_FORMAT.encode("ascii")):
        raise ModelVersionMismatch(f"{path}: unsupported model format")
    header_lines = data[:nl].decode("ascii").splitlines()
    blob = data[nl + len(b"\nend\n"):]
    hyper = {}
    shapes = []
    for line in header_lines[1:]:
        key, _, rest = line.partition(" ")
        if key == "tensor":
            parts = rest.split()
            shapes.append((parts[0], tuple(int(d) for d in parts[1:])))
        else:
            hyper[key] = int(rest)
    try:
        meta = {k: hyper[k] for k in
                ("vocab_size", "embedding_dim", "max_length", "hidden", "dense")}
    except KeyError as exc:
        raise ModelVersionMismatch(f"{path}: missing header field {exc}") from None
    if tuple(name for name, _ in shapes) != PARAM_NAMES:
        raise ModelVersionMismatch(f"{path}: unexpected tensor list")
    params = {}
    offset = 0
    for name, shape in shapes:
        count = int(np.prod(shape, dtype=np.int64)) if shape else 1
        nbytes = 8 * count
        if offset + nbytes > len(blob):
            raise ModelVersionMismatch(f"{path}: truncated tensor data")
        params[name] = np.frombuffer(
            blob[offset:offset + nbytes], dtype="<f8").reshape(shape).copy()
        offset += nbytes
    if offset != len(blob):
        raise ModelVersionMismatch(f"{path}: trailing bytes after tensors")
    return LstmNetwork(params=params, **meta)
