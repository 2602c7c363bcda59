"""Tweet text cleaning, tokenization, lemmatization, and stemming.

The cleaning pipeline applies eight steps in a fixed order: lowercase,
URL token drop, @mention drop, punctuation to space, repeated-letter
collapse, digit-token drop, stopword drop, whitespace normalize. Order
matters: URL and mention checks need the raw token shape, so they run
before punctuation is stripped.
"""

import re
from pathlib import Path

from .porter import stem as stem_token

__all__ = [
    "DEFAULT_STOPWORDS", "load_stopwords", "clean_text", "tokenize",
    "stem_token", "lemmatize_token", "preprocess",
]

# pronouns, articles, conjunctions, prepositions, stative and auxiliary
# verbs, plus the orphaned contraction pieces left by punctuation removal
DEFAULT_STOPWORDS = frozenset("""
i me my myself we our ours ourselves you your yours yourself yourselves
he him his himself she her hers herself it its itself they them their
theirs themselves what which who whom this that these those am is are
was were be been being have has had having do does did doing a an the
and but if or because as until while of at by for with about against
between into through during before after above below to from up down
in out on off over under again further then once here there when where
why how all any both each few more most other some such no nor not only
own same so than too very can will just don should now
s t d ll m re ve
""".split())

_URL_PREFIXES = ("www.", "http://", "https://")
_NON_WORD_RE = re.compile(r"[^a-z0-9_ ]")
_LETTER_RUN_RE = re.compile(r"([a-z])\1{2,}")
_ALL_DIGITS_RE = re.compile(r"^[0-9]+$")
_TOKEN_RE = re.compile(r"\w+")


def load_stopwords(path) -> frozenset:
    """Read one stopword per line; blank lines and # comments ignored."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def clean_text(raw: str, stopwords=None) -> str:
    """Normalize raw tweet text to lowercase space-separated word tokens."""
    if stopwords is None:
        stopwords = DEFAULT_STOPWORDS
    text = raw.lower()
    kept = [t for t in text.split()
            if not t.startswith(_URL_PREFIXES) and not t.startswith("@")]
    text = " ".join(kept)
    text = _NON_WORD_RE.sub(" ", text)
    text = _LETTER_RUN_RE.sub(r"\1", text)
    final = [t for t in text.split()
             if not _ALL_DIGITS_RE.match(t) and t not in stopwords]
    return " ".join(final)


def tokenize(cleaned: str) -> list:
    """Split cleaned text into maximal runs of word characters."""
    return _TOKEN_RE.findall(cleaned)


# irregular plurals the suffix rules below would mangle or miss
_LEMMA_EXCEPTIONS = {
    "men": "man", "women": "woman", "children": "child", "people": "person",
    "feet": "foot", "teeth": "tooth", "geese": "goose", "mice": "mouse",
    "leaves": "leaf", "lives": "life", "knives": "knife", "wolves": "wolf",
    "shelves": "shelf", "selves": "self", "halves": "half", "oxen": "ox",
    "indices": "index",
}

_LEMMA_VOWELS = frozenset("aeiouy")


def _has_vowel(s):
    return any(ch in _LEMMA_VOWELS for ch in s)


def _undouble(stem):
    # running -> runn -> run, but keep ll/ss/zz (falling -> fall)
    if len(stem) >= 4 and stem[-1] == stem[-2] and stem[-1] not in "aeiou" \
            and stem[-1] not in "lsz":
        return stem[:-1]
    return stem


def lemmatize_token(token: str) -> str:
    """Reduce plural and -ing/-ed forms with ordered suffix rules."""
    hit = _LEMMA_EXCEPTIONS.get(token)
    if hit is not None:
        return hit
    if token.endswith("ies") and len(token) >= 5:
        return token[:-3] + "y"
    if token.endswith("ses") and len(token) >= 5:
        return token[:-1]
    if token.endswith("s") and len(token) >= 4 \
            and not token.endswith(("ss", "us", "is")):
        return token[:-1]
    if token.endswith("ing") and len(token) >= 6 and _has_vowel(token[:-3]):
        return _undouble(token[:-3])
    if token.endswith("ed") and len(token) >= 5 and _has_vowel(token[:-2]):
        return _undouble(token[:-2])
    return token


def preprocess(raw: str, stopwords=None) -> list:
    """Full pipeline: clean, tokenize, lemmatize, then stem each token."""
    return [stem_token(lemmatize_token(t))
            for t in tokenize(clean_text(raw, stopwords))]
