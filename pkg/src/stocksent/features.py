"""Vocabulary building and feature encoding.

Two encodings feed the models: binary presence vectors for the Bayes and
forest classifiers, and fixed-length padded id sequences for the
recurrent network. Id 0 is reserved for padding; real terms get 1-based
ids in frequency rank order.
"""

from collections import Counter

import numpy as np

from .errors import EmptyCorpus, ModelVersionMismatch

VOCAB_FORMAT = "vocabulary 1"


class Vocabulary:
    """Term ranking frozen at build time.

    Terms are ordered by descending corpus frequency with ties broken
    lexicographically, then truncated to max_terms.
    """

    def __init__(self, terms, frequencies, max_terms):
        self.terms = tuple(terms)
        self.frequencies = tuple(frequencies)
        self.max_terms = int(max_terms)
        self.index = {term: i + 1 for i, term in enumerate(self.terms)}

    @property
    def size(self):
        return len(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Vocabulary)
                and self.terms == other.terms
                and self.frequencies == other.frequencies
                and self.max_terms == other.max_terms)


def build_vocabulary(corpus, max_terms: int) -> Vocabulary:
    """Count tokens over the corpus and keep the max_terms most frequent."""
    if max_terms < 1:
        raise EmptyCorpus("max_terms must be at least 1")
    counts = Counter()
    for tokens in corpus:
        counts.update(tokens)
    if not counts:
        raise EmptyCorpus("corpus has no tokens to build a vocabulary from")
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:max_terms]
    return Vocabulary(terms=[t for t, _ in ranked],
                      frequencies=[c for _, c in ranked],
                      max_terms=max_terms)


def encode_binary(tokens, vocab: Vocabulary) -> np.ndarray:
    """Presence vector: bit i set iff vocab term i occurs in tokens."""
    bits = np.zeros(vocab.size, dtype=np.uint8)
    for tok in set(tokens):
        pos = vocab.index.get(tok)
        if pos is not None:
            bits[pos - 1] = 1
    return bits


def encode_sequence(tokens, vocab: Vocabulary, max_length: int) -> np.ndarray:
    """Map tokens to 1-based ids, drop OOV, truncate, post-pad with 0."""
    ids = []
    index = vocab.index
    for tok in tokens:
        pos = index.get(tok)
        if pos is not None:
            ids.append(pos)
            if len(ids) == max_length:
                break
    seq = np.zeros(max_length, dtype=np.int64)
    seq[:len(ids)] = ids
    return seq


def encode_binary_matrix(corpus, vocab: Vocabulary) -> np.ndarray:
    out = np.zeros((len(corpus), vocab.size), dtype=np.uint8)
    for i, tokens in enumerate(corpus):
        out[i] = encode_binary(tokens, vocab)
    return out


def encode_sequence_matrix(corpus, vocab: Vocabulary, max_length: int) -> np.ndarray:
    out = np.zeros((len(corpus), max_length), dtype=np.int64)
    for i, tokens in enumerate(corpus):
        out[i] = encode_sequence(tokens, vocab, max_length)
    return out


def save_vocabulary(vocab: Vocabulary, path):
    lines = [VOCAB_FORMAT, f"max_terms {vocab.max_terms}"]
    for term, freq in zip(vocab.terms, vocab.frequencies):
        lines.append(f"{term}\t{freq}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_vocabulary(path) -> Vocabulary:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != VOCAB_FORMAT:
        raise ModelVersionMismatch(f"{path}: unsupported vocabulary format")
    if len(lines) < 2 or not lines[1].startswith("max_terms "):
        raise ModelVersionMismatch(f"{path}: missing max_terms header")
    max_terms = int(lines[1].split()[1])
    terms = []
    freqs = []
    for line in lines[2:]:
        if not line:
            continue
        term, freq = line.split("\t")
        terms.append(term)
        freqs.append(int(freq))
    return Vocabulary(terms=terms, frequencies=freqs, max_terms=max_terms)
