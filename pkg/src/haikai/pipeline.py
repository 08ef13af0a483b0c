"""Build, cache, and reload the full model set.

A model directory is self-contained: versioned n-gram cache, skeleton
pool, vector matrix, and normalized lexicon files, plus a manifest. The
generation commands load from it in milliseconds instead of re-parsing
corpora.
"""

import json
import os
from dataclasses import dataclass, field

import numpy as np

from .evaluation import AffectLexicon, load_afinn
from .generator import CandidateIndex
from .grammar import (
    SkeletonFragment,
    SkeletonPool,
    Slot,
    TagLexicon,
    extract_skeletons,
    load_tag_lexicon,
)
from .ngram import DEFAULT_ORDER, build_ngram_model, load_ngram_model, save_ngram_model
from .phonology import PronouncingLexicon, load_pronouncing_lexicon
from .semantics import VectorSpace, load_vector_file

MANIFEST_NAME = "manifest.json"
FORMAT_VERSION = 1


@dataclass
class ModelSet:
    lex: PronouncingLexicon
    taglex: TagLexicon
    ngram: object
    space: VectorSpace
    pool: SkeletonPool
    affect: AffectLexicon
    _index: CandidateIndex = field(default=None, repr=False)

    @property
    def index(self):
        if self._index is None:
            self._index = CandidateIndex(self.ngram, self.taglex, self.lex)
        return self._index


def build_model_set(haiku_corpus, text_corpus, vectors, cmudict, afinn, tag_lexicon, ngram_order=DEFAULT_ORDER):
    """Parse and validate every artifact from its source file."""
    lex = load_pronouncing_lexicon(cmudict)
    taglex = load_tag_lexicon(tag_lexicon)
    with open(text_corpus, encoding="utf-8") as f:
        model = build_ngram_model(f.read(), k=ngram_order)
    space = load_vector_file(vectors)
    with open(haiku_corpus, encoding="utf-8") as f:
        pool = extract_skeletons(f.read(), taglex, lex)
    affect = load_afinn(afinn)
    return ModelSet(lex=lex, taglex=taglex, ngram=model, space=space, pool=pool, affect=affect)


def _fragment_to_dict(frag):
    return {
        "source": frag.source_line,
        "total": frag.total_syllables,
        "slots": [
            {"kind": s.kind, "syllables": s.syllables, "token": s.token, "tag": s.tag}
            for s in frag.slots
        ],
    }


def _fragment_from_dict(d):
    return SkeletonFragment(
        slots=tuple(Slot(**s) for s in d["slots"]),
        total_syllables=d["total"],
        source_line=d["source"],
    )


def save_model_set(models, out_dir):
    os.makedirs(out_dir, exist_ok=True)

    save_ngram_model(models.ngram, os.path.join(out_dir, "ngram.bin"))

    with open(os.path.join(out_dir, "skeletons.json"), "w", encoding="utf-8") as f:
        json.dump(
            {
                "five": [_fragment_to_dict(fr) for fr in models.pool.five],
                "seven": [_fragment_to_dict(fr) for fr in models.pool.seven],
            },
            f,
        )

    words = sorted(models.space.table)
    np.save(os.path.join(out_dir, "vectors.npy"), np.stack([models.space.table[w] for w in words]))
    with open(os.path.join(out_dir, "vector_words.json"), "w", encoding="utf-8") as f:
        json.dump(words, f)

    with open(os.path.join(out_dir, "cmudict.txt"), "w", encoding="latin-1") as f:
        for word in sorted(models.lex.entries):
            for i, pron in enumerate(models.lex.entries[word]):
                name = word if i == 0 else f"{word}({i})"
                f.write(f"{name}  {' '.join(pron)}\n")

    with open(os.path.join(out_dir, "tag_lexicon.tsv"), "w", encoding="utf-8") as f:
        for word in sorted(models.taglex.words):
            f.write(f"{word}\t{models.taglex.words[word]}\n")

    with open(os.path.join(out_dir, "afinn.txt"), "w", encoding="utf-8") as f:
        for word in sorted(models.affect.words):
            f.write(f"{word}\t{models.affect.words[word]}\n")

    manifest = {
        "format": "haikai-models",
        "version": FORMAT_VERSION,
        "ngram_order": models.ngram.order,
        "stats": {
            "pronouncing_entries": len(models.lex),
            "tagged_words": len(models.taglex),
            "ngram_keys": len(models.ngram.counts),
            "vector_words": len(models.space),
            "vector_dimension": models.space.dimension,
            "five_fragments": len(models.pool.five),
            "seven_fragments": len(models.pool.seven),
            "affect_entries": len(models.affect),
        },
    }
    with open(os.path.join(out_dir, MANIFEST_NAME), "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2)
    return manifest


def load_model_set(model_dir):
    manifest_path = os.path.join(model_dir, MANIFEST_NAME)
    if not os.path.exists(manifest_path):
        raise FileNotFoundError(f"no model manifest at {manifest_path}; run build-models first")
    with open(manifest_path, encoding="utf-8") as f:
        manifest = json.load(f)
    if manifest.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported model directory version {manifest.get('version')}")

    ngram = load_ngram_model(os.path.join(model_dir, "ngram.bin"))

    with open(os.path.join(model_dir, "skeletons.json"), encoding="utf-8") as f:
        raw = json.load(f)
    pool = SkeletonPool(
        five=[_fragment_from_dict(d) for d in raw["five"]],
        seven=[_fragment_from_dict(d) for d in raw["seven"]],
    )

    matrix = np.load(os.path.join(model_dir, "vectors.npy"))
    with open(os.path.join(model_dir, "vector_words.json"), encoding="utf-8") as f:
        words = json.load(f)
    space = VectorSpace(dimension=int(matrix.shape[1]) if len(words) else 0)
    for word, row in zip(words, matrix):
        space.table[word] = row

    lex = load_pronouncing_lexicon(os.path.join(model_dir, "cmudict.txt"))
    taglex = load_tag_lexicon(os.path.join(model_dir, "tag_lexicon.tsv"))
    affect = load_afinn(os.path.join(model_dir, "afinn.txt"))
    return ModelSet(lex=lex, taglex=taglex, ngram=ngram, space=space, pool=pool, affect=affect)
