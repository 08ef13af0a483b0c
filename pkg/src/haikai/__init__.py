"""Corpus-driven haiku and renga generation.

Pipeline: a haiku corpus is reduced to grammatical skeleton fragments,
a general text corpus provides an n-gram model and a word-vector topic
space, and templates assembled from the fragments are filled under exact
syllable constraints, preferring common constructions and close topic
matches. Linked verse (renga) chains haikus by blending the previous
link with a per-link constraint prompt, generating a candidate batch,
and filtering by a scoring criterion.
"""

__version__ = "0.1.0"
