"""Tokenization helpers shared by the corpus, grammar, and renga layers."""

import re

_EDGE_PUNCT = re.compile(r"^[^A-Za-z0-9]+|[^A-Za-z0-9]+$")
_NON_WORD = re.compile(r"[^a-z'\-]")
_SENTENCE_SPLIT = re.compile(r"[.!?\n]+")


def tokenize(line):
    """Split a verse line on whitespace, keeping punctuation tokens like '--'."""
    return line.split()


def core(token):
    """Token with leading/trailing punctuation stripped ('pond.' -> 'pond')."""
    return _EDGE_PUNCT.sub("", token)


def is_punctuation(token):
    """True when the token carries no letters once edge punctuation is gone."""
    return not any(c.isalpha() for c in core(token))


def corpus_tokens(text):
    """Lowercased word tokens of a prose stream, one list per sentence.

    Whitespace tokenization after dropping characters outside
    [letters, apostrophe, hyphen]; tokens without letters are discarded.
    Sentences break at ., !, ? and newlines.
    """
    sentences = []
    for chunk in _SENTENCE_SPLIT.split(text):
        toks = []
        for raw in chunk.lower().split():
            word = _NON_WORD.sub("", raw).strip("'-")
            if word and any(c.isalpha() for c in word):
                toks.append(word)
        if toks:
            sentences.append(toks)
    return sentences
