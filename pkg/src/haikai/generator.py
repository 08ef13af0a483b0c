"""Template filling under POS and exact-syllable constraints.

Left-to-right beam search over the 17-syllable slot sequence. Each open
slot draws candidates sharing the slot's tag and syllable budget; beam
extensions are scored by a weighted sum of the n-gram positional log
estimate and cosine similarity to the topic vector. Candidate words must
be known to all three lexicons (n-gram vocabulary, tag lexicon,
pronouncing lexicon) so every constraint is checkable.
"""

import math
import random
from dataclasses import dataclass, replace

import numpy as np

from .errors import NoVectorCoverage, SlotUnfillable, ZeroVector
from .grammar import assemble_template, tag_token
from .ngram import conditional_estimate
from .phonology import syllable_count
from .semantics import blend, similarity, topic_vector


@dataclass
class GenConfig:
    lambda_ngram: float = 1.0
    lambda_topic: float = 1.0
    beam_width: int = 32
    dither_temperature: float = 0.0  # 0 = argmax over completed beams
    rng_seed: int = 0
    batch_size: int = 10

    def __post_init__(self):
        if self.lambda_ngram < 0 or self.lambda_topic < 0:
            raise ValueError("score weights must be nonnegative")
        if self.lambda_ngram + self.lambda_topic == 0:
            raise ValueError("at least one score weight must be positive")
        if self.beam_width < 1:
            raise ValueError("beam width must be >= 1")
        if self.dither_temperature < 0:
            raise ValueError("dither temperature must be >= 0")


@dataclass(frozen=True)
class Provenance:
    sources: tuple  # template source lines
    seed: int


@dataclass(frozen=True)
class Haiku:
    lines: tuple  # 3 tuples of tokens
    score_breakdown: tuple = (0.0, 0.0)  # (ngram_total, topic_cosine)
    provenance: Provenance = None

    def tokens(self):
        return [tok for line in self.lines for tok in line]

    def text(self):
        return "\n".join(" ".join(line) for line in self.lines)


def haiku_from_lines(token_lines, score_breakdown=(0.0, 0.0), provenance=None):
    return Haiku(
        lines=tuple(tuple(line) for line in token_lines),
        score_breakdown=score_breakdown,
        provenance=provenance,
    )


def coarse_tag(tag):
    """Tag family used by the one-shot relaxation pass (NN -> NN*, VB -> VB*)."""
    return tag[:2]


class CandidateIndex:
    """(tag, syllables) -> sorted candidate words, over the vocabulary
    shared by the n-gram model, tag lexicon, and pronouncing lexicon."""

    def __init__(self, ngram_model, taglex, lex):
        self.by_tag = {}
        self.by_coarse = {}
        self.unigram_counts = {}
        for word in ngram_model.vocabulary():
            if word not in taglex or word not in lex:
                continue
            tag = tag_token(taglex, word)
            syl = syllable_count(lex, word).count
            self.unigram_counts[word] = ngram_model.counts[(word,)]
            self.by_tag.setdefault((tag, syl), []).append(word)
            self.by_coarse.setdefault((coarse_tag(tag), syl), []).append(word)
        for index in (self.by_tag, self.by_coarse):
            for words in index.values():
                words.sort()

    def candidates(self, tag, syllables):
        exact = self.by_tag.get((tag, syllables))
        if exact:
            return exact
        return self.by_coarse.get((coarse_tag(tag), syllables), [])


def _slot_similarities(space, topic, words, cache):
    topic_arr = topic.components if hasattr(topic, "components") else np.asarray(topic, float)
    topic_norm = np.linalg.norm(topic_arr)
    for word in words:
        if word in cache:
            continue
        vec = space.get(word)
        if vec is None or topic_norm == 0.0:
            cache[word] = 0.0
        else:
            norm = np.linalg.norm(vec)
            cache[word] = 0.0 if norm == 0.0 else float(np.dot(vec, topic_arr) / (norm * topic_norm))
    return cache


def fill_template(template, models, topic, cfg, index=None):
    """Best beam-search completion of the template toward the topic.

    With dither_temperature > 0 the final pick among completed beams is
    softmax-sampled at that temperature using the seeded generator.
    """
    if index is None:
        index = getattr(models, "index", None) or CandidateIndex(models.ngram, models.taglex, models.lex)
    m = models.ngram
    counts = m.counts
    children = m.context_children()
    alpha = m.backoff_alpha
    tail_len = m.order - 1
    total = m.total_unigrams
    base_counts = index.unigram_counts
    log = math.log
    sim_cache = {}
    slots = [(i, slot) for i, frag in enumerate(template.lines) for slot in frag.slots]

    # beam: (lowercased context so far, ngram total, topic total)
    beams = [((), 0.0, 0.0)]
    lambda_ngram, lambda_topic = cfg.lambda_ngram, cfg.lambda_topic
    for _, slot in slots:
        extensions = []
        if slot.kind == "fixed":
            word = slot.token.lower()
            for ctx, ll, ts in beams:
                est = conditional_estimate(m, ctx, word)
                extensions.append((ctx + (word,), ll + log(est), ts))
            # contexts differ, so a forced token can still reorder the beams
            extensions.sort(key=lambda b: (-(lambda_ngram * b[1] + lambda_topic * b[2]), b[0]))
            beams = extensions
            continue

        words = index.candidates(slot.tag, slot.syllables)
        if not words:
            raise SlotUnfillable(slot)
        sims = _slot_similarities(models.space, topic, words, sim_cache)
        scored = []
        for beam_idx, (ctx, ll, ts) in enumerate(beams):
            # backoff ladder for this context, longest stored suffix first
            ladder = []
            factor = 1.0
            suffix = ctx[-tail_len:] if tail_len else ()
            while suffix:
                child_map = children.get(suffix)
                if child_map is not None:
                    ladder.append((factor, child_map, counts[suffix]))
                factor *= alpha
                suffix = suffix[1:]
            base_factor = factor
            for word in words:
                est = None
                for level_factor, child_map, denom in ladder:
                    c = child_map.get(word)
                    if c is not None:
                        est = level_factor * c / denom
                        break
                if est is None:
                    est = base_factor * base_counts[word] / total
                new_ll = ll + log(est)
                new_ts = ts + sims[word]
                scored.append(
                    (-(lambda_ngram * new_ll + lambda_topic * new_ts), ctx, word, beam_idx, new_ll, new_ts)
                )
        scored.sort(key=lambda e: e[:3])
        beams = [
            (beams[beam_idx][0] + (word,), new_ll, new_ts)
            for _, _, word, beam_idx, new_ll, new_ts in scored[: cfg.beam_width]
        ]

    if cfg.dither_temperature > 0 and len(beams) > 1:
        rng = random.Random(cfg.rng_seed)
        scores = [lambda_ngram * b[1] + lambda_topic * b[2] for b in beams]
        top = max(scores)
        weights = [math.exp((s - top) / cfg.dither_temperature) for s in scores]
        chosen = rng.choices(range(len(beams)), weights=weights, k=1)[0]
    else:
        chosen = 0
    ctx, ngram_total, _ = beams[chosen]

    lines = [[], [], []]
    for (line_idx, slot), low in zip(slots, ctx):
        lines[line_idx].append(slot.token if slot.kind == "fixed" else low)
    haiku_tokens = [tok for line in lines for tok in line]
    try:
        topic_cosine = similarity(topic_vector(models.space, haiku_tokens), topic)
    except (NoVectorCoverage, ZeroVector):
        topic_cosine = 0.0
    return haiku_from_lines(
        lines,
        score_breakdown=(ngram_total, topic_cosine),
        provenance=Provenance(sources=tuple(f.source_line for f in template.lines), seed=cfg.rng_seed),
    )


def generate_batch(prompts, n, models, cfg, weights=None, index=None):
    """n haikus for the blended prompts, each from an independently
    assembled template with derived seed; dither is forced >= 0.5 so the
    batch members differ."""
    topics = [topic_vector(models.space, words) for words in prompts]
    target = blend(topics, weights if weights is not None else [1.0] * len(topics))
    if index is None:
        index = getattr(models, "index", None) or CandidateIndex(models.ngram, models.taglex, models.lex)
    batch = []
    for i in range(n):
        seed_i = cfg.rng_seed + i
        template = assemble_template(models.pool, seed_i)
        cfg_i = replace(cfg, rng_seed=seed_i, dither_temperature=max(cfg.dither_temperature, 0.5))
        batch.append(fill_template(template, models, target, cfg_i, index=index))
    return batch
