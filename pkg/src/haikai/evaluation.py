"""Haiku scoring (sense, topic, emotion, word variety) and batch
filtration: pick one haiku from a candidate list by a named criterion.
"""

from dataclasses import dataclass, field

from .errors import EmptyCandidates, EmptyLexicon, NoVectorCoverage
from .ngram import ngram_score
from .semantics import similarity, topic_vector
from .textutil import core

MOST_POSITIVE = "most_positive"
LEAST_VARIETY = "least_variety"
MOST_COHERENT = "most_coherent"
CRITERIA = (MOST_POSITIVE, LEAST_VARIETY, MOST_COHERENT)

VALENCE_MIN, VALENCE_MAX = -5, 5


@dataclass
class AffectLexicon:
    words: dict = field(default_factory=dict)  # lowercase word -> valence
    parse_issues: list = field(default_factory=list)

    def __len__(self):
        return len(self.words)

    def valence(self, token):
        return self.words.get(core(token).lower(), 0)


@dataclass(frozen=True)
class ScoreReport:
    sense: float  # mean per-token log estimate
    topic: float  # cosine to the target topic
    emotion: int  # summed valence
    variety: float  # mean normalized pairwise edit distance, in [0, 1]


def parse_afinn(lines):
    """Parse ``word<TAB>valence`` rows; valences outside [-5, 5] or
    non-integer rows are recorded in parse_issues and skipped."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    lex = AffectLexicon()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            lex.parse_issues.append(f"row {lineno}: not word<TAB>score: {line!r}")
            continue
        try:
            score = int(parts[1])
        except ValueError:
            lex.parse_issues.append(f"row {lineno}: non-integer score {parts[1]!r}")
            continue
        if not VALENCE_MIN <= score <= VALENCE_MAX:
            lex.parse_issues.append(f"row {lineno}: valence {score} out of range")
            continue
        lex.words[parts[0].lower()] = score
    if not lex.words:
        raise EmptyLexicon("no affect entries parsed")
    return lex


def load_afinn(path):
    with open(path, encoding="utf-8") as f:
        return parse_afinn(f)


def sense_score(m, haiku):
    """Per-token n-gram log score of the concatenated lines."""
    tokens = haiku.tokens()
    if not tokens:
        return 0.0
    return ngram_score(m, tokens) / len(tokens)


def topic_score(space, haiku, topic):
    """Cosine between the haiku's summed word vectors and the topic;
    0.0 when no haiku word is in the space."""
    try:
        return similarity(topic_vector(space, haiku.tokens()), topic)
    except NoVectorCoverage:
        return 0.0


def emotion_score(affect, haiku):
    return sum(affect.valence(tok) for tok in haiku.tokens())


def levenshtein(a, b):
    """Minimal number of unit-cost insertions, deletions, substitutions."""
    if a == b:
        return 0
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def word_variety(haiku):
    """Mean over unordered pairs of token positions of the normalized
    edit distance levenshtein(ti, tj) / max(|ti|, |tj|)."""
    tokens = haiku.tokens()
    if len(tokens) < 2:
        return 0.0
    total = 0.0
    pairs = 0
    for i in range(len(tokens)):
        for j in range(i + 1, len(tokens)):
            total += levenshtein(tokens[i], tokens[j]) / max(len(tokens[i]), len(tokens[j]))
            pairs += 1
    return total / pairs


def link_coherence(space, h_prev, h_next):
    """Cosine of the two haikus' topic vectors; 0.0 on coverage failure."""
    try:
        return similarity(
            topic_vector(space, h_prev.tokens()), topic_vector(space, h_next.tokens())
        )
    except NoVectorCoverage:
        return 0.0


def select(candidates, criterion, affect=None, space=None, prev=None):
    """One haiku from the batch: argmax emotion, argmin variety, or
    argmax coherence with prev. Ties go to the lowest index."""
    if not candidates:
        raise EmptyCandidates("cannot select from an empty batch")
    if criterion == MOST_POSITIVE:
        scores = [emotion_score(affect, h) for h in candidates]
        best = max(scores)
    elif criterion == LEAST_VARIETY:
        scores = [word_variety(h) for h in candidates]
        best = min(scores)
    elif criterion == MOST_COHERENT:
        scores = [link_coherence(space, prev, h) for h in candidates]
        best = max(scores)
    else:
        raise ValueError(f"unknown filter criterion {criterion!r}")
    return candidates[scores.index(best)]


def score_report(models, haiku, topic):
    return ScoreReport(
        sense=sense_score(models.ngram, haiku),
        topic=topic_score(models.space, haiku, topic),
        emotion=emotion_score(models.affect, haiku),
        variety=word_variety(haiku),
    )
