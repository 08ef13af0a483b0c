"""Order-k n-gram counts with stupid-backoff scoring.

Scores are unnormalized log estimates: good enough to rank "more common
constructions" first, which is all the generator needs. Counts cover all
n-gram lengths 1..k so any stored (context, word) has its context stored
too, keeping every positional term <= 0.
"""

import math
import struct
from dataclasses import dataclass, field

from .errors import EmptyCorpus
from .textutil import corpus_tokens

DEFAULT_ORDER = 3
DEFAULT_BACKOFF_ALPHA = 0.4

_MAGIC = b"HKNG"
_VERSION = 1


@dataclass
class NGramModel:
    order: int
    counts: dict = field(default_factory=dict)  # token tuple (len 1..k) -> count
    total_unigrams: int = 0
    backoff_alpha: float = DEFAULT_BACKOFF_ALPHA
    _vocab: list = field(default=None, repr=False)
    _children: dict = field(default=None, repr=False)

    def vocabulary(self):
        if self._vocab is None:
            self._vocab = sorted(k[0] for k in self.counts if len(k) == 1)
        return self._vocab

    def context_children(self):
        """Derived view of counts: context tuple -> {next word -> count}.
        Lets hot loops test membership without building key tuples."""
        if self._children is None:
            children = {}
            for key, count in self.counts.items():
                if len(key) > 1:
                    children.setdefault(key[:-1], {})[key[-1]] = count
            self._children = children
        return self._children


def build_ngram_model(corpus, k=DEFAULT_ORDER, backoff_alpha=DEFAULT_BACKOFF_ALPHA):
    """Count all 1..k-grams over lowercased tokens; sentence boundaries
    (., !, ?, newline) reset the context window."""
    if k < 1:
        raise ValueError(f"order must be >= 1, got {k}")
    if not isinstance(corpus, str):
        corpus = "\n".join(corpus)
    counts = {}
    total = 0
    for sentence in corpus_tokens(corpus):
        total += len(sentence)
        for i in range(len(sentence)):
            for n in range(1, k + 1):
                if i + n > len(sentence):
                    break
                key = tuple(sentence[i : i + n])
                counts[key] = counts.get(key, 0) + 1
    if total == 0:
        raise EmptyCorpus("text corpus has no tokens")
    return NGramModel(order=k, counts=counts, total_unigrams=total, backoff_alpha=backoff_alpha)


def conditional_estimate(m, context, word):
    """Stupid-backoff estimate of word given context (trimmed to k-1).

    Stored full-order n-gram: count(ctx + w) / count(ctx); otherwise
    alpha * estimate one order down. Base case count(w) / total, with an
    unseen-word floor of 1 / (2 * total). Always in (0, 1].
    """
    ctx = tuple(context)[-(m.order - 1) :] if m.order > 1 else ()
    factor = 1.0
    while ctx:
        full = ctx + (word,)
        if full in m.counts:
            return factor * m.counts[full] / m.counts[ctx]
        factor *= m.backoff_alpha
        ctx = ctx[1:]
    c = m.counts.get((word,), 0)
    if c:
        return factor * c / m.total_unigrams
    return factor / (2 * m.total_unigrams)


def ngram_score(m, tokens):
    """Sum of positional log estimates over the token stream; <= 0."""
    toks = [t.lower() for t in tokens]
    score = 0.0
    for i, word in enumerate(toks):
        score += math.log(conditional_estimate(m, toks[max(0, i - m.order + 1) : i], word))
    return score


def continuations(m, context, tag_filter=None, syllable_filter=None):
    """Vocabulary words passing both filters, best conditional estimate
    first; ties break lexicographically."""
    ctx = tuple(t.lower() for t in context)
    ranked = []
    for word in m.vocabulary():
        if tag_filter is not None and not tag_filter(word):
            continue
        if syllable_filter is not None and not syllable_filter(word):
            continue
        ranked.append((-conditional_estimate(m, ctx, word), word))
    ranked.sort()
    return [word for _, word in ranked]


def save_ngram_model(m, path):
    """Binary cache: versioned header, then records sorted by key."""
    with open(path, "wb") as f:
        f.write(_MAGIC)
        f.write(struct.pack("<IIdQQ", _VERSION, m.order, m.backoff_alpha, m.total_unigrams, len(m.counts)))
        for key in sorted(m.counts):
            f.write(struct.pack("<B", len(key)))
            for token in key:
                raw = token.encode("utf-8")
                f.write(struct.pack("<H", len(raw)))
                f.write(raw)
            f.write(struct.pack("<Q", m.counts[key]))


def load_ngram_model(path):
    with open(path, "rb") as f:
        blob = f.read()
    if blob[:4] != _MAGIC:
        raise ValueError(f"not an n-gram cache file: {path}")
    version, order, alpha, total, n_records = struct.unpack_from("<IIdQQ", blob, 4)
    if version != _VERSION:
        raise ValueError(f"unsupported n-gram cache version {version}")
    offset = 4 + struct.calcsize("<IIdQQ")
    counts = {}
    for _ in range(n_records):
        (arity,) = struct.unpack_from("<B", blob, offset)
        offset += 1
        key = []
        for _ in range(arity):
            (tlen,) = struct.unpack_from("<H", blob, offset)
            offset += 2
            key.append(blob[offset : offset + tlen].decode("utf-8"))
            offset += tlen
        (count,) = struct.unpack_from("<Q", blob, offset)
        offset += 8
        counts[tuple(key)] = count
    return NGramModel(order=order, counts=counts, total_unigrams=total, backoff_alpha=alpha)
