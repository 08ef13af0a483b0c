"""Pronouncing lexicon and syllable counting.

Words found in the lexicon are counted by stress-bearing phonemes of
their first listed pronunciation; out-of-vocabulary words fall back to a
deterministic orthographic heuristic (vowel groups, silent final 'e').
"""

from dataclasses import dataclass, field

from .errors import EmptyLexicon, EmptyToken
from .textutil import core, is_punctuation

VOWEL_LETTERS = set("aeiouy")


@dataclass(frozen=True)
class SyllableCount:
    count: int
    source: str  # "lexicon" | "heuristic"


@dataclass
class PronouncingLexicon:
    """word (uppercase) -> list of pronunciations, each a tuple of phonemes."""

    entries: dict = field(default_factory=dict)
    parse_issues: list = field(default_factory=list)

    def __contains__(self, word):
        return core(word).upper() in self.entries

    def __len__(self):
        return len(self.entries)

    def pronunciations(self, word):
        return self.entries.get(core(word).upper(), [])


def parse_pronouncing_lexicon(lines):
    """Parse CMU-dict-format lines into a PronouncingLexicon.

    One entry per line: ``WORD  PH1 PH2 ...``; comment lines begin ';;;';
    alternate pronunciations ``WORD(n)`` merge under WORD. Lines with no
    phonemes are recorded in parse_issues and skipped.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    lex = PronouncingLexicon()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) < 2:
            lex.parse_issues.append(f"line {lineno}: no phonemes: {line!r}")
            continue
        word = parts[0].upper()
        if "(" in word:  # alternate like READ(1)
            word = word[: word.index("(")]
        lex.entries.setdefault(word, []).append(tuple(parts[1:]))
    if not lex.entries:
        raise EmptyLexicon("no entries parsed from pronouncing lexicon")
    return lex


def load_pronouncing_lexicon(path):
    # latin-1 tolerates stray bytes in upstream CMU comment lines
    with open(path, encoding="latin-1") as f:
        return parse_pronouncing_lexicon(f)


def _stress_bearing(pronunciation):
    return sum(1 for ph in pronunciation if ph and ph[-1].isdigit())


def heuristic_syllables(word):
    """Count maximal orthographic vowel groups (a,e,i,o,u,y), dropping a
    terminal silent 'e' after a consonant; never below 1."""
    w = word.lower()
    groups = 0
    in_group = False
    for c in w:
        if c in VOWEL_LETTERS:
            if not in_group:
                groups += 1
            in_group = True
        else:
            in_group = False
    if len(w) >= 2 and w.endswith("e") and w[-2] not in VOWEL_LETTERS and w[-2].isalpha():
        groups -= 1
    return max(groups, 1)


def syllable_count(lex, word):
    stripped = core(word)
    if not stripped:
        raise EmptyToken(f"no word content in token {word!r}")
    prons = lex.pronunciations(stripped)
    if prons:
        return SyllableCount(max(_stress_bearing(prons[0]), 1), "lexicon")
    return SyllableCount(heuristic_syllables(stripped), "heuristic")


def line_syllables(lex, tokens):
    """Total syllables of a verse line; punctuation tokens count zero."""
    return sum(
        syllable_count(lex, tok).count for tok in tokens if not is_punctuation(tok)
    )
