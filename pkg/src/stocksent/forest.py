"""Random forest of CART trees over binary features.

Each tree trains on a bootstrap sample with a per-node random feature
subset and greedy Gini splits. Per-tree RNG streams are spawned from the
forest seed, so training order (or parallel training) cannot change the
result.
"""

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import kernels
from .errors import DimensionMismatch, EmptyInput, ModelVersionMismatch

FOREST_FORMAT = "forest 1"


@dataclass
class Leaf:
    label: int
    counts: tuple  # (n_label0, n_label1) training samples at the leaf


@dataclass
class Split:
    feature: int
    left: Union["Leaf", "Split"]   # feature value 0
    right: Union["Leaf", "Split"]  # feature value 1


@dataclass
class Forest:
    trees: list
    n_estimators: int
    max_depth: int
    mtry: int
    min_samples_leaf: int
    seed: int
    n_features: int


def _gini(pos: int, n: int) -> float:
    p = pos / n
    return 2.0 * p * (1.0 - p)


def _leaf(pos, n):
    neg = n - pos
    return Leaf(label=1 if pos > neg else 0, counts=(neg, pos))


def _grow(X, y, idx, depth, max_depth, mtry, min_samples_leaf, rng):
    n = idx.shape[0]
    pos = int(y[idx].sum())
    if pos == 0 or pos == n or depth >= max_depth or n < 2 * min_samples_leaf:
        return _leaf(pos, n)

    n_features = X.shape[1]
    if mtry >= n_features:
        feats = np.arange(n_features, dtype=np.int64)
    else:
        feats = np.sort(rng.choice(n_features, size=mtry, replace=False))
        feats = feats.astype(np.int64)
    n1, pos1 = kernels.rf_split_counts(X, y, idx, feats)

    parent = _gini(pos, n)
    best_score = parent
    best = -1
    for j in range(feats.shape[0]):
        nr = int(n1[j])
        nl = n - nr
        if nl < min_samples_leaf or nr < min_samples_leaf:
            continue
        pos_r = int(pos1[j])
        pos_l = pos - pos_r
        score = (nl * _gini(pos_l, nl) + nr * _gini(pos_r, nr)) / n
        if score < best_score:
            best_score = score
            best = int(feats[j])
    if best < 0:
        return _leaf(pos, n)

    mask = X[idx, best] == 1
    return Split(
        feature=best,
        left=_grow(X, y, idx[~mask], depth + 1, max_depth, mtry,
                   min_samples_leaf, rng),
        right=_grow(X, y, idx[mask], depth + 1, max_depth, mtry,
                    min_samples_leaf, rng),
    )


def _check_xy(X, y):
    X = np.ascontiguousarray(X, dtype=np.uint8)
    y = np.ascontiguousarray(y, dtype=np.uint8)
    if X.ndim != 2:
        raise DimensionMismatch(f"X must be 2-d, got shape {X.shape}")
    if X.shape[0] != y.shape[0]:
        raise DimensionMismatch(
            f"{X.shape[0]} feature rows vs {y.shape[0]} labels")
    if X.shape[0] == 0:
        raise EmptyInput("cannot fit on zero examples")
    return X, y


def fit_tree(X, y, max_depth: int = 60, mtry: Optional[int] = None,
             min_samples_leaf: int = 1, rng=None):
    """Grow a single CART tree; greedy Gini splits, majority-label leaves."""
    X, y = _check_xy(X, y)
    if mtry is None:
        mtry = X.shape[1]
    if rng is None:
        rng = np.random.default_rng(0)
    idx = np.arange(X.shape[0], dtype=np.int64)
    return _grow(X, y, idx, 0, max_depth, mtry, min_samples_leaf, rng)


def fit_forest(X, y, n_estimators: int = 200, max_depth: int = 60,
               mtry: Optional[int] = None, min_samples_leaf: int = 1,
               seed: int = 0, bootstrap: bool = True) -> Forest:
    """Train n_estimators trees on bootstrap samples.

    Tree t draws from an independent RNG stream spawned from (seed, t),
    so the forest is identical whatever order the trees are grown in.
    """
    X, y = _check_xy(X, y)
    n, n_features = X.shape
    if mtry is None:
        mtry = math.isqrt(n_features)
        if mtry * mtry < n_features:
            mtry += 1
    trees = []
    for stream in np.random.SeedSequence(seed).spawn(n_estimators):
        rng = np.random.default_rng(stream)
        if bootstrap:
            idx = np.sort(rng.integers(0, n, size=n)).astype(np.int64)
        else:
            idx = np.arange(n, dtype=np.int64)
        trees.append(_grow(X, y, idx, 0, max_depth, mtry,
                           min_samples_leaf, rng))
    return Forest(trees=trees, n_estimators=n_estimators, max_depth=max_depth,
                  mtry=mtry, min_samples_leaf=min_samples_leaf, seed=seed,
                  n_features=n_features)


def predict_tree(node, x) -> int:
    while isinstance(node, Split):
        node = node.right if x[node.feature] == 1 else node.left
    return node.label


def predict_forest(forest: Forest, x):
    """Majority vote over trees; tie goes to label 0."""
    x = np.asarray(x, dtype=np.uint8)
    if x.shape != (forest.n_features,):
        raise DimensionMismatch(
            f"expected {forest.n_features} features, got shape {x.shape}")
    ones = sum(predict_tree(t, x) for t in forest.trees)
    zeros = len(forest.trees) - ones
    return (1 if ones > zeros else 0), (zeros, ones)


def _tree_predict_many(node, X, idx, out):
    if isinstance(node, Leaf):
        out[idx] = node.label
        return
    mask = X[idx, node.feature] == 1
    _tree_predict_many(node.left, X, idx[~mask], out)
    _tree_predict_many(node.right, X, idx[mask], out)


def predict_many(forest: Forest, X) -> np.ndarray:
    X = np.asarray(X, dtype=np.uint8)
    if X.ndim != 2 or X.shape[1] != forest.n_features:
        raise DimensionMismatch(
            f"expected (n, {forest.n_features}) features, got shape {X.shape}")
    votes = np.zeros(X.shape[0], dtype=np.int64)
    idx = np.arange(X.shape[0])
    scratch = np.empty(X.shape[0], dtype=np.int64)
    for tree in forest.trees:
        _tree_predict_many(tree, X, idx, scratch)
        votes += scratch
    return (2 * votes > len(forest.trees)).astype(np.int64)


def tree_depth(node) -> int:
    if isinstance(node, Leaf):
        return 0
    return 1 + max(tree_depth(node.left), tree_depth(node.right))


def _write_node(node, lines):
    if isinstance(node, Leaf):
        lines.append(f"L {node.label} {node.counts[0]} {node.counts[1]}")
    else:
        lines.append(f"S {node.feature}")
        _write_node(node.left, lines)
        _write_node(node.right, lines)


def save_forest(forest: Forest, path):
    lines = [
        FOREST_FORMAT,
        f"n_estimators {forest.n_estimators}",
        f"max_depth {forest.max_depth}",
        f"mtry {forest.mtry}",
        f"min_samples_leaf {forest.min_samples_leaf}",
        f"seed {forest.seed}",
        f"n_features {forest.n_features}",
    ]
    for i, tree in enumerate(forest.trees):
        lines.append(f"tree {i}")
        _write_node(tree, lines)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _read_node(it):
    line = next(it)
    if line.startswith("L "):
        _, label, c0, c1 = line.split()
        return Leaf(label=int(label), counts=(int(c0), int(c1)))
    if line.startswith("S "):
        feature = int(line.split()[1])
        left = _read_node(it)
        right = _read_node(it)
        return Split(feature=feature, left=left, right=right)
    raise ModelVersionMismatch(f"unexpected node line {line!r}")


def load_forest(path) -> Forest:
    with open(path, encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != FOREST_FORMAT:
        raise ModelVersionMismatch(f"{path}: unsupported model format")
    header = {}
    pos = 1
    while pos < len(lines) and not lines[pos].startswith("tree "):
        key, _, value = lines[pos].partition(" ")
        header[key] = int(value)
        pos += 1
    try:
        meta = {k: header[k] for k in
                ("n_estimators", "max_depth", "mtry", "min_samples_leaf",
                 "seed", "n_features")}
    except KeyError as exc:
        raise ModelVersionMismatch(f"{path}: missing header field {exc}") from None
    it = iter(lines[pos:])
    trees = []
    try:
        for i in range(meta["n_estimators"]):
            tag = next(it)
            if tag != f"tree {i}":
                raise ModelVersionMismatch(f"{path}: expected 'tree {i}', got {tag!r}")
            trees.append(_read_node(it))
    except StopIteration:
        raise ModelVersionMismatch(f"{path}: truncated tree data") from None
    return Forest(trees=trees, **meta)
