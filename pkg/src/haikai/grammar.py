"""POS tagging and grammatical skeleton extraction from a haiku corpus.

Tagging is lexicon-first with ordered suffix rules (Penn-style tags), so
the whole pipeline stays deterministic and needs no trained model. Each
corpus line becomes a skeleton fragment: closed-class tokens are kept
verbatim, open-class tokens become (tag, syllable budget) slots. Only
lines totalling exactly 5 or 7 syllables survive.
"""

import random
from dataclasses import dataclass, field

from .errors import EmptyCorpus, InsufficientFragments, NoFiveFragments, NoSevenFragments
from .phonology import syllable_count
from .textutil import core, is_punctuation, tokenize

# Glue words survive into templates; content words get replaced.
CLOSED_CLASS_TAGS = {"DT", "IN", "CC", "PRP", "PRP$", "TO", "MD", "WDT"}

DEFAULT_TAG = "NN"

# (suffix, tag); matching is longest-suffix-first regardless of list order.
DEFAULT_SUFFIX_RULES = [
    ("ing", "VBG"),
    ("ness", "NN"),
    ("ment", "NN"),
    ("tion", "NN"),
    ("sion", "NN"),
    ("ity", "NN"),
    ("ship", "NN"),
    ("hood", "NN"),
    ("ly", "RB"),
    ("ful", "JJ"),
    ("ous", "JJ"),
    ("ive", "JJ"),
    ("able", "JJ"),
    ("ible", "JJ"),
    ("less", "JJ"),
    ("ish", "JJ"),
    ("est", "JJS"),
    ("ed", "VBD"),
    ("s", "NNS"),
]


@dataclass
class TagLexicon:
    words: dict = field(default_factory=dict)  # lowercase word -> tag
    suffix_rules: list = field(default_factory=lambda: list(DEFAULT_SUFFIX_RULES))

    def __post_init__(self):
        self.suffix_rules = sorted(self.suffix_rules, key=lambda r: -len(r[0]))

    def __contains__(self, word):
        return core(word).lower() in self.words

    def __len__(self):
        return len(self.words)


def parse_tag_lexicon(lines, suffix_rules=None):
    """Parse ``word<TAB>TAG`` lines; '#' lines and blanks are skipped."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    words = {}
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        if len(parts) >= 2:
            words[parts[0].lower()] = parts[1]
    rules = suffix_rules if suffix_rules is not None else list(DEFAULT_SUFFIX_RULES)
    return TagLexicon(words=words, suffix_rules=rules)


def load_tag_lexicon(path):
    with open(path, encoding="utf-8") as f:
        return parse_tag_lexicon(f)


def tag_token(tl, token):
    word = core(token).lower()
    if word in tl.words:
        return tl.words[word]
    for suffix, tag in tl.suffix_rules:
        if len(word) > len(suffix) and word.endswith(suffix):
            return tag
    return DEFAULT_TAG


def tag_tokens(tl, tokens):
    return [(tok, tag_token(tl, tok)) for tok in tokens]


@dataclass(frozen=True)
class Slot:
    kind: str  # "fixed" | "open"
    syllables: int
    token: str = ""  # fixed slots only
    tag: str = ""  # open slots only


@dataclass(frozen=True)
class SkeletonFragment:
    slots: tuple
    total_syllables: int
    source_line: str


@dataclass(frozen=True)
class HaikuTemplate:
    lines: tuple  # exactly 3 fragments, totals (5, 7, 5)

    def __post_init__(self):
        totals = tuple(f.total_syllables for f in self.lines)
        if totals != (5, 7, 5):
            raise ValueError(f"template totals must be (5, 7, 5), got {totals}")


@dataclass
class SkeletonPool:
    five: list = field(default_factory=list)
    seven: list = field(default_factory=list)


def line_to_fragment(line, tl, lex):
    """Skeleton of one verse line, or None for a blank line."""
    tokens = tokenize(line)
    if not tokens:
        return None
    slots = []
    total = 0
    for tok in tokens:
        if is_punctuation(tok):
            slots.append(Slot(kind="fixed", syllables=0, token=tok))
            continue
        syl = syllable_count(lex, tok).count
        tag = tag_token(tl, tok)
        total += syl
        if tag in CLOSED_CLASS_TAGS:
            slots.append(Slot(kind="fixed", syllables=syl, token=tok))
        else:
            slots.append(Slot(kind="open", syllables=syl, tag=tag))
    return SkeletonFragment(slots=tuple(slots), total_syllables=total, source_line=line)


def extract_skeletons(corpus, tl, lex):
    """Fragment pool from a haiku corpus (3-line haikus, blank-line
    separated, '#' comments). Lines not totalling 5 or 7 are dropped."""
    if isinstance(corpus, str):
        corpus = corpus.splitlines()
    pool = SkeletonPool()
    saw_line = False
    for raw in corpus:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        saw_line = True
        frag = line_to_fragment(line, tl, lex)
        if frag is None:
            continue
        if frag.total_syllables == 5:
            pool.five.append(frag)
        elif frag.total_syllables == 7:
            pool.seven.append(frag)
    if not saw_line:
        raise EmptyCorpus("haiku corpus has no content lines")
    if not pool.five:
        raise NoFiveFragments("no 5-syllable fragments extracted")
    if not pool.seven:
        raise NoSevenFragments("no 7-syllable fragments extracted")
    return pool


def assemble_template(pool, rng_seed):
    """Uniformly sample a (5, 7, 5) template; the two 5-lines may coincide."""
    if not pool.five or not pool.seven:
        raise InsufficientFragments(
            f"pool has {len(pool.five)} five- and {len(pool.seven)} seven-fragments"
        )
    rng = random.Random(rng_seed)
    first = rng.choice(pool.five)
    middle = rng.choice(pool.seven)
    last = rng.choice(pool.five)
    return HaikuTemplate(lines=(first, middle, last))
