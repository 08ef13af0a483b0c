import sys
from pathlib import Path
from types import SimpleNamespace

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from haikai.evaluation import load_afinn, parse_afinn
from haikai.grammar import extract_skeletons, load_tag_lexicon, parse_tag_lexicon
from haikai.ngram import build_ngram_model
from haikai.phonology import load_pronouncing_lexicon, parse_pronouncing_lexicon
from haikai.pipeline import ModelSet
from haikai.semantics import load_vector_file, load_vectors

DATA = ROOT / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def models():
    """Full model set from the shipped seed data."""
    lex = load_pronouncing_lexicon(DATA / "cmudict.txt")
    taglex = load_tag_lexicon(DATA / "tag_lexicon.tsv")
    ngram = build_ngram_model((DATA / "text_corpus.txt").read_text(), k=3)
    space = load_vector_file(DATA / "vectors.txt")
    pool = extract_skeletons((DATA / "haiku_corpus.txt").read_text(), taglex, lex)
    affect = load_afinn(DATA / "afinn.txt")
    return ModelSet(lex=lex, taglex=taglex, ngram=ngram, space=space, pool=pool, affect=affect)


TINY_CMUDICT = """\
THE  DH AH0
A  AH0
IN  IH0 N
ON  AA1 N
COLD  K OW1 L D
RAIN  R EY1 N
FALLS  F AO1 L Z
STONE  S T OW1 N
MOON  M UW1 N
FROG  F R AO1 G
POND  P AA1 N D
DARK  D AA1 R K
OLD  OW1 L D
SUN  S AH1 N
AUTUMN  AO1 T AH0 M
SHINES  SH AY1 N Z
SLEEPS  S L IY1 P S
GARDEN  G AA1 R D AH0 N
QUIET  K W AY1 AH0 T
LOVE  L AH1 V
"""

TINY_TAGS = """\
the\tDT
a\tDT
in\tIN
on\tIN
cold\tJJ
rain\tNN
falls\tVBZ
stone\tNN
moon\tNN
frog\tNN
pond\tNN
dark\tJJ
old\tJJ
sun\tNN
autumn\tNN
shines\tVBZ
sleeps\tVBZ
garden\tNN
quiet\tJJ
love\tNN
"""

TINY_TEXT = """\
the cold rain falls on the old stone. the moon shines on the dark pond.
the frog sleeps in the quiet garden. autumn rain falls on the pond.
the sun shines in the garden. the moon shines on the frog pond.
love falls on the cold stone. the dark moon sleeps.
"""

TINY_HAIKUS = """\
cold rain falls on stone
the moon shines on the dark pond
old pond in the rain

the quiet garden
autumn rain falls on the stone
a frog sleeps in sun
"""

TINY_VECTORS = """\
moon 1.0 0.0
frog 0.0 1.0
pond 0.2 0.9
autumn 0.7 0.3
love 0.5 0.5
rain 0.1 0.8
stone 0.6 0.1
sun 0.9 0.2
garden 0.3 0.4
cold 0.2 0.2
dark 0.4 0.6
old 0.5 0.3
quiet 0.3 0.7
shines 0.8 0.4
sleeps 0.1 0.3
falls 0.2 0.5
"""

TINY_AFINN = "love\t3\nquiet\t1\ncold\t-1\ndark\t-1\n"


@pytest.fixture()
def tiny():
    """Small hand-checkable model set."""
    lex = parse_pronouncing_lexicon(TINY_CMUDICT)
    taglex = parse_tag_lexicon(TINY_TAGS)
    ngram = build_ngram_model(TINY_TEXT, k=3)
    space = load_vectors(TINY_VECTORS)
    pool = extract_skeletons(TINY_HAIKUS, taglex, lex)
    affect = parse_afinn(TINY_AFINN)
    return SimpleNamespace(
        lex=lex, taglex=taglex, ngram=ngram, space=space, pool=pool, affect=affect
    )
