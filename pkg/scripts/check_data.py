"""Validate the shipped seed data against the engine's own parsers.

Reports haiku-corpus lines that do not scan 5 or 7, vocabulary missing
from the pronouncing or tag lexicons, and text-corpus coverage of the
generation vocabulary. Run from the repository root:

    python3 scripts/check_data.py
"""

import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from haikai.evaluation import load_afinn
from haikai.grammar import extract_skeletons, load_tag_lexicon, tag_token
from haikai.ngram import build_ngram_model
from haikai.phonology import line_syllables, load_pronouncing_lexicon, syllable_count
from haikai.textutil import core, is_punctuation

DATA = Path(__file__).resolve().parent.parent / "data"


def main():
    lex = load_pronouncing_lexicon(DATA / "cmudict.txt")
    taglex = load_tag_lexicon(DATA / "tag_lexicon.tsv")
    affect = load_afinn(DATA / "afinn.txt")
    print(f"pronouncing lexicon: {len(lex)} words ({len(lex.parse_issues)} issues)")
    print(f"tag lexicon: {len(taglex)} words")
    print(f"affect lexicon: {len(affect)} words ({len(affect.parse_issues)} issues)")

    corpus = (DATA / "haiku_corpus.txt").read_text()
    bad = 0
    words = set()
    for lineno, raw in enumerate(corpus.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        words.update(core(t).lower() for t in tokens if not is_punctuation(t))
        total = line_syllables(lex, tokens)
        if total not in (5, 7):
            bad += 1
            print(f"  haiku line {lineno}: {total} syllables: {line!r}")
    print(f"haiku corpus: {bad} lines off 5/7")

    missing_pron = sorted(w for w in words if w not in lex)
    missing_tag = sorted(w for w in words if w not in taglex)
    if missing_pron:
        print(f"haiku words missing pronunciations: {missing_pron}")
    if missing_tag:
        print(f"haiku words missing tags: {missing_tag}")

    model = build_ngram_model((DATA / "text_corpus.txt").read_text(), k=3)
    vocab = set(model.vocabulary())
    print(f"text corpus: {model.total_unigrams} tokens, {len(vocab)} distinct")

    uncovered = sorted(set(taglex.words) - vocab)
    if uncovered:
        print(f"lexicon words absent from text corpus ({len(uncovered)}): {uncovered}")
    pron_missing = sorted(w for w in vocab if w not in lex)
    if pron_missing:
        print(f"text-corpus words missing pronunciations: {pron_missing}")

    pool = extract_skeletons(corpus, taglex, lex)
    print(f"skeleton pool: {len(pool.five)} five-fragments, {len(pool.seven)} seven-fragments")

    cells = Counter()
    for w in vocab:
        if w in taglex and w in lex:
            cells[(tag_token(taglex, w), syllable_count(lex, w).count)] += 1
    print("candidate cells (tag, syllables) -> count:")
    for (tag, syl), n in sorted(cells.items()):
        print(f"  {tag:5s} {syl}: {n}")


if __name__ == "__main__":
    main()
