"""Bernoulli naive Bayes over binary presence features.

Fitting is a counting pass with Laplace smoothing; prediction compares
log-posteriors. Per-example log-likelihood sums use math.fsum, which is
correctly rounded and order independent, so ties between symmetric
classes resolve the same way every run.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyInput,
    ModelVersionMismatch,
    NonPositiveAlpha,
)

NB_FORMAT = "nbmodel 1"


@dataclass
class NbModel:
    class_log_prior: np.ndarray  # (2,), log P(c); -inf for an absent class
    log_p1: np.ndarray           # (2, F), log P(x_i=1 | c)
    log_p0: np.ndarray           # (2, F), log P(x_i=0 | c)
    alpha: float
    n_features: int


def fit_nb(X, y, alpha: float = 1.0, uniform_prior: bool = False) -> NbModel:
    """Estimate per-class Bernoulli likelihoods with additive smoothing.

    P(x_i=1|c) = (count(x_i=1, y=c) + alpha) / (count(y=c) + 2 alpha).
    Priors come from class frequencies unless uniform_prior is set; a
    class absent from y keeps prior 0 and is never predicted.
    """
    if alpha <= 0:
        raise NonPositiveAlpha(f"alpha must be positive, got {alpha}")
    X = np.asarray(X, dtype=np.uint8)
    y = np.asarray(y, dtype=np.int64)
    if X.ndim != 2:
        raise DimensionMismatch(f"X must be 2-d, got shape {X.shape}")
    if X.shape[0] != y.shape[0]:
        raise DimensionMismatch(
            f"{X.shape[0]} feature rows vs {y.shape[0]} labels")
    if X.shape[0] == 0:
        raise EmptyInput("cannot fit on zero examples")

    n = X.shape[0]
    class_counts = np.array([int((y == 0).sum()), int((y == 1).sum())],
                            dtype=np.float64)
    ones = np.zeros((2, X.shape[1]))
    for c in (0, 1):
        if class_counts[c] > 0:
            ones[c] = X[y == c].sum(axis=0, dtype=np.int64)
    p1 = (ones + alpha) / (class_counts[:, None] + 2.0 * alpha)
    with np.errstate(divide="ignore"):
        if uniform_prior:
            prior = np.log(np.array([0.5, 0.5]))
        else:
            prior = np.log(class_counts / n)
    return NbModel(class_log_prior=prior,
                   log_p1=np.log(p1),
                   log_p0=np.log1p(-p1),
                   alpha=float(alpha),
                   n_features=X.shape[1])


def log_posterior(model: NbModel, x) -> np.ndarray:
    """Unnormalized log-posterior for both classes."""
    x = np.asarray(x, dtype=np.uint8)
    if x.shape != (model.n_features,):
        raise DimensionMismatch(
            f"expected {model.n_features} features, got shape {x.shape}")
    on = x != 0
    out = np.empty(2)
    for c in (0, 1):
        terms = np.where(on, model.log_p1[c], model.log_p0[c])
        out[c] = model.class_log_prior[c] + math.fsum(terms.tolist())
    return out


def predict_nb(model: NbModel, x):
    """Label plus both log-posteriors; exact tie goes to label 0."""
    lp = log_posterior(model, x)
    label = 0 if lp[0] >= lp[1] else 1
    return label, lp


def predict_many(model: NbModel, X) -> np.ndarray:
    X = np.asarray(X, dtype=np.uint8)
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise DimensionMismatch(
            f"expected (n, {model.n_features}) features, got shape {X.shape}")
    labels = np.empty(X.shape[0], dtype=np.int64)
    for i in range(X.shape[0]):
        labels[i], _ = predict_nb(model, X[i])
    return labels


def _fmt(v: float) -> str:
    return "%.17g" % v


def save_nb(model: NbModel, path):
    lines = [
        NB_FORMAT,
        f"n_features {model.n_features}",
        f"alpha {_fmt(model.alpha)}",
        "prior " + " ".join(_fmt(v) for v in model.class_log_prior),
    ]
    for c in (0, 1):
        lines.append(f"logp1_{c} " + " ".join(_fmt(v) for v in model.log_p1[c]))
        lines.append(f"logp0_{c} " + " ".join(_fmt(v) for v in model.log_p0[c]))
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_nb(path) -> NbModel:
    with open(path, encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != NB_FORMAT:
        raise ModelVersionMismatch(f"{path}: unsupported model format")
    fields = {}
    for line in lines[1:]:
        if line:
            key, _, rest = line.partition(" ")
            fields[key] = rest
    try:
        n_features = int(fields["n_features"])
        alpha = float(fields["alpha"])
        prior = np.array([float(v) for v in fields["prior"].split()])
        log_p1 = np.array([[float(v) for v in fields[f"logp1_{c}"].split()]
                           for c in (0, 1)])
        log_p0 = np.array([[float(v) for v in fields[f"logp0_{c}"].split()]
                           for c in (0, 1)])
    except (KeyError, ValueError) as exc:
        raise ModelVersionMismatch(f"{path}: corrupt model file: {exc}") from None
    if log_p1.shape != (2, n_features) or log_p0.shape != (2, n_features):
        raise ModelVersionMismatch(f"{path}: tensor sizes disagree with header")
    return NbModel(class_log_prior=prior, log_p1=log_p1, log_p0=log_p0,
                   alpha=alpha, n_features=n_features)
