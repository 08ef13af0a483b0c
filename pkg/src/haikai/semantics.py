"""Word-vector topic space: load pre-trained vectors, sum words into
topic vectors, blend topics, compare by cosine.

Topics are plain sums of word vectors. Blending normalizes each topic to
unit length first so a 17-word haiku cannot drown a one-word prompt.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptySpace, NoVectorCoverage, ZeroTopic, ZeroVector
from .textutil import core


@dataclass
class VectorSpace:
    dimension: int = 0
    table: dict = field(default_factory=dict)  # lowercase word -> np.ndarray
    parse_issues: list = field(default_factory=list)

    def __contains__(self, word):
        return core(word).lower() in self.table

    def __len__(self):
        return len(self.table)

    def get(self, word):
        return self.table.get(core(word).lower())


@dataclass(frozen=True)
class TopicVector:
    components: np.ndarray
    contributing_words: tuple = ()
    missing_words: tuple = ()

    def __post_init__(self):
        if self.contributing_words and not self.components.any():
            raise ZeroTopic(f"words {self.contributing_words} sum to the zero vector")


def load_vectors(lines, expected_d=None):
    """Parse GloVe-format rows ``word v1 v2 ... vd``; dimension is taken
    from the first row unless given. Mis-sized or non-numeric rows are
    recorded in parse_issues and skipped."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    space = VectorSpace(dimension=expected_d or 0)
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts:
            continue
        word, values = parts[0], parts[1:]
        if not values:
            space.parse_issues.append(f"row {lineno}: no components")
            continue
        if space.dimension == 0:
            space.dimension = len(values)
        if len(values) != space.dimension:
            space.parse_issues.append(
                f"row {lineno}: expected {space.dimension} components, got {len(values)}"
            )
            continue
        try:
            vec = np.array([float(v) for v in values], dtype=np.float64)
        except ValueError:
            space.parse_issues.append(f"row {lineno}: non-numeric component")
            continue
        space.table[word.lower()] = vec
    if not space.table:
        raise EmptySpace("no vectors loaded")
    return space


def load_vector_file(path, expected_d=None):
    with open(path, encoding="utf-8") as f:
        return load_vectors(f, expected_d)


def topic_vector(space, words):
    """Componentwise sum of the vectors of in-vocabulary words."""
    found, missing = [], []
    total = np.zeros(space.dimension, dtype=np.float64)
    for word in words:
        vec = space.get(word)
        if vec is None:
            missing.append(word)
        else:
            found.append(core(word).lower())
            total = total + vec
    if not found:
        raise NoVectorCoverage(f"no vector for any of {list(words)!r}")
    return TopicVector(components=total, contributing_words=tuple(found), missing_words=tuple(missing))


def _as_array(v):
    return v.components if isinstance(v, TopicVector) else np.asarray(v, dtype=np.float64)


def blend(topics, weights):
    """Weighted sum of unit-normalized topics: sum(w_i * t_i / |t_i|)."""
    if len(topics) != len(weights) or not topics:
        raise ValueError("need equally many topics and weights, at least one each")
    if any(w < 0 for w in weights) or not any(weights):
        raise ValueError("weights must be nonnegative and not all zero")
    total = None
    words = []
    for t, w in zip(topics, weights):
        arr = _as_array(t)
        norm = np.linalg.norm(arr)
        if norm == 0.0:
            raise ZeroTopic("cannot blend a zero-length topic")
        part = (w / norm) * arr
        total = part if total is None else total + part
        if isinstance(t, TopicVector):
            words.extend(t.contributing_words)
    return TopicVector(components=total, contributing_words=tuple(words))


def similarity(a, b):
    """Cosine of the angle between two nonzero vectors, in [-1, 1]."""
    va, vb = _as_array(a), _as_array(b)
    na, nb = np.linalg.norm(va), np.linalg.norm(vb)
    if na == 0.0 or nb == 0.0:
        raise ZeroVector("cosine undefined for a zero vector")
    return float(np.dot(va, vb) / (na * nb))
