"""Linked-verse sessions: per-link constraint prompts, topic blending of
the previous link with the current constraint, candidate filtration, and
repetition checking over a sliding window.

The checker plays renga master: submissions that break form or repeat a
content word within the window are rejected wholesale, leaving the
session untouched.
"""

from dataclasses import dataclass, field, replace

from . import evaluation
from .errors import AllCandidatesViolate, InvalidRuleset, SessionComplete
from .generator import GenConfig, generate_batch, haiku_from_lines
from .grammar import CLOSED_CLASS_TAGS, tag_token
from .phonology import line_syllables
from .textutil import core, is_punctuation, tokenize

MACHINE = "machine"
HUMAN = "human"

MIN_LINKS, MAX_LINKS = 2, 100
FORM = (5, 7, 5)

# Seed stride per link; leaves room for batch member seeds and the retry offset.
LINK_SEED_STRIDE = 10_000

# Copulas/auxiliaries carry no imagery; the no-repetition rule ignores them
# even though their tags (VBZ/VBD/VBP/VB) are open class.
AUXILIARY_FORMS = {
    "be", "been", "being", "is", "are", "am", "was", "were",
    "do", "does", "did", "has", "have", "had",
}


@dataclass(frozen=True)
class LinkConstraint:
    prompt: tuple  # constraint words
    criterion: str  # evaluation.CRITERIA member


@dataclass(frozen=True)
class RengaRuleset:
    initial_prompt: tuple
    link_constraints: tuple
    repetition_window: int = 2
    initial_criterion: str = None  # None: first link's criterion (or most_positive)
    blend_weights: tuple = (1.0, 1.0)

    @property
    def total_links(self):
        return 1 + len(self.link_constraints)

    def criterion_for(self, link_index):
        if link_index == 0:
            if self.initial_criterion:
                return self.initial_criterion
            first = self.link_constraints[0].criterion
            return first if first != evaluation.MOST_COHERENT else evaluation.MOST_POSITIVE
        return self.link_constraints[link_index - 1].criterion

    def validate(self):
        if not self.initial_prompt:
            raise InvalidRuleset("initial prompt must not be empty")
        if not MIN_LINKS <= self.total_links <= MAX_LINKS:
            raise InvalidRuleset(
                f"renga length {self.total_links} outside [{MIN_LINKS}, {MAX_LINKS}]"
            )
        if self.repetition_window < 0:
            raise InvalidRuleset("repetition window must be >= 0")
        if self.initial_criterion == evaluation.MOST_COHERENT:
            raise InvalidRuleset("the starting verse has no previous link to cohere with")
        if self.initial_criterion and self.initial_criterion not in evaluation.CRITERIA:
            raise InvalidRuleset(f"unknown filter criterion {self.initial_criterion!r}")
        for lc in self.link_constraints:
            if not lc.prompt:
                raise InvalidRuleset("link constraint prompt must not be empty")
            if lc.criterion not in evaluation.CRITERIA:
                raise InvalidRuleset(f"unknown filter criterion {lc.criterion!r}")
        return self


def _prompt_words(value):
    if isinstance(value, str):
        return tuple(value.split())
    return tuple(value)


def ruleset_from_dict(d):
    """Ruleset from its JSON form (see docs/rulesets.md)."""
    try:
        links = tuple(
            LinkConstraint(prompt=_prompt_words(item["prompt"]), criterion=item["filter"])
            for item in d.get("links", [])
        )
        ruleset = RengaRuleset(
            initial_prompt=_prompt_words(d["initial_prompt"]),
            link_constraints=links,
            repetition_window=d.get("window", 2),
            initial_criterion=d.get("initial_filter"),
            blend_weights=tuple(d.get("blend_weights", (1.0, 1.0))),
        )
    except (KeyError, TypeError) as exc:
        raise InvalidRuleset(f"bad ruleset shape: {exc}") from exc
    return ruleset.validate()


def ruleset_to_dict(ruleset):
    d = {
        "initial_prompt": list(ruleset.initial_prompt),
        "links": [
            {"prompt": list(lc.prompt), "filter": lc.criterion}
            for lc in ruleset.link_constraints
        ],
        "window": ruleset.repetition_window,
        "blend_weights": list(ruleset.blend_weights),
    }
    if ruleset.initial_criterion:
        d["initial_filter"] = ruleset.initial_criterion
    return d


@dataclass(frozen=True)
class Violation:
    kind: str  # "form" | "repetition" | "session_complete"
    message: str
    line: int = 0
    expected: int = 0
    got: int = 0
    word: str = ""
    link_index: int = -1

    def to_dict(self):
        d = {"kind": self.kind, "message": self.message}
        if self.kind == "form":
            d.update(line=self.line, expected=self.expected, got=self.got)
        elif self.kind == "repetition":
            d.update(word=self.word, link_index=self.link_index)
        return d


@dataclass
class Link:
    haiku: object
    author: str  # MACHINE | HUMAN
    constraint: tuple = ()
    criterion: str = ""
    candidate_count: int = 0  # size of the generated batch (machine links)
    eligible_count: int = 0  # candidates surviving the constraint check


@dataclass
class RengaSession:
    ruleset: RengaRuleset
    seed: int
    links: list = field(default_factory=list)
    status: str = "open"

    @property
    def cursor(self):
        return len(self.links)

    def is_complete(self):
        return self.cursor >= self.ruleset.total_links


def new_session(ruleset, seed=0):
    ruleset.validate()
    return RengaSession(ruleset=ruleset, seed=seed)


def content_lemma(word):
    """Cheap normal form for repetition checks: lowercase, possessive and
    plural endings folded."""
    w = core(word).lower()
    if w.endswith("'s"):
        w = w[:-2]
    if len(w) > 3 and w.endswith("s") and not w.endswith("ss"):
        w = w[:-1]
    return w


def content_lemmas(tokens, taglex):
    return {
        content_lemma(tok)
        for tok in tokens
        if not is_punctuation(tok)
        and core(tok).lower() not in AUXILIARY_FORMS
        and tag_token(taglex, tok) not in CLOSED_CLASS_TAGS
    }


def check_constraints(session, token_lines, models):
    """Violations of form (5/7/5 per line) and of the no-repetition rule
    against the previous `window` links. Empty list = clean."""
    violations = []
    if len(token_lines) != 3:
        violations.append(
            Violation(
                kind="form",
                message=f"a haiku has 3 lines, got {len(token_lines)}",
                line=0,
                expected=3,
                got=len(token_lines),
            )
        )
        return violations
    for i, (line_tokens, expected) in enumerate(zip(token_lines, FORM), start=1):
        got = line_syllables(models.lex, line_tokens)
        if got != expected:
            violations.append(
                Violation(
                    kind="form",
                    message=f"line {i} has {got} syllables, needs {expected}",
                    line=i,
                    expected=expected,
                    got=got,
                )
            )
    window = session.ruleset.repetition_window
    if window > 0:
        flat = [tok for line in token_lines for tok in line]
        lemmas = content_lemmas(flat, models.taglex)
        start = max(0, len(session.links) - window)
        for idx in range(start, len(session.links)):
            earlier = content_lemmas(session.links[idx].haiku.tokens(), models.taglex)
            for word in sorted(lemmas & earlier):
                violations.append(
                    Violation(
                        kind="repetition",
                        message=f"content word {word!r} already used in link {idx}",
                        word=word,
                        link_index=idx,
                    )
                )
    return violations


def next_link(session, models, cfg=None):
    """Generate, filter, and append the machine's next link.

    Link 0 takes its topic from the initial prompt; link i > 0 blends the
    previous haiku with constraint prompt i. A batch of cfg.batch_size
    candidates is generated, constraint violators are dropped, and the
    link's filter criterion picks the winner.
    """
    if session.is_complete():
        raise SessionComplete(f"renga already has {session.cursor} links")
    cfg = cfg or GenConfig()
    idx = session.cursor
    if idx == 0:
        prompts = [list(session.ruleset.initial_prompt)]
        weights = [1.0]
        constraint = session.ruleset.initial_prompt
    else:
        constraint = session.ruleset.link_constraints[idx - 1].prompt
        prompts = [session.links[-1].haiku.tokens(), list(constraint)]
        weights = list(session.ruleset.blend_weights)
    criterion = session.ruleset.criterion_for(idx)
    prev = session.links[-1].haiku if session.links else None

    link_seed = session.seed + idx * LINK_SEED_STRIDE
    eligible = []
    for attempt_seed in (link_seed, link_seed + cfg.batch_size):
        batch = generate_batch(prompts, cfg.batch_size, models, replace(cfg, rng_seed=attempt_seed), weights=weights)
        eligible = [h for h in batch if not check_constraints(session, h.lines, models)]
        if eligible:
            break
    if not eligible:
        raise AllCandidatesViolate(
            f"no candidate for link {idx} survived the constraint check after a retry"
        )
    chosen = evaluation.select(
        eligible, criterion, affect=models.affect, space=models.space, prev=prev
    )
    session.links.append(
        Link(
            haiku=chosen,
            author=MACHINE,
            constraint=tuple(constraint),
            criterion=criterion,
            candidate_count=cfg.batch_size,
            eligible_count=len(eligible),
        )
    )
    if session.is_complete():
        session.status = "complete"
    return chosen, session


def submit_link(session, lines, models, author=HUMAN):
    """Validate and append a submitted verse; on any violation the session
    is left untouched and the violations are returned."""
    if session.is_complete():
        raise SessionComplete(f"renga already has {session.cursor} links")
    token_lines = [tokenize(line) if isinstance(line, str) else list(line) for line in lines]
    violations = check_constraints(session, token_lines, models)
    if violations:
        return violations
    idx = session.cursor
    constraint = (
        session.ruleset.initial_prompt
        if idx == 0
        else session.ruleset.link_constraints[idx - 1].prompt
    )
    session.links.append(
        Link(haiku=haiku_from_lines(token_lines), author=author, constraint=tuple(constraint))
    )
    if session.is_complete():
        session.status = "complete"
    return []


def run_renga(ruleset, models, seed=0, cfg=None):
    """Machine-only free run: drive next_link until the session completes."""
    session = new_session(ruleset, seed=seed)
    while not session.is_complete():
        next_link(session, models, cfg)
    return session


def haiku_to_dict(haiku):
    ngram_total, topic_cosine = haiku.score_breakdown
    return {
        "lines": [list(line) for line in haiku.lines],
        "text": haiku.text(),
        "scores": {"ngram": ngram_total, "topic": topic_cosine},
    }


def link_to_dict(link):
    d = haiku_to_dict(link.haiku)
    d.update(
        author=link.author,
        constraint=list(link.constraint),
        criterion=link.criterion,
        candidate_count=link.candidate_count,
    )
    return d


def session_to_dict(session):
    ruleset = session.ruleset
    next_constraint = None
    if not session.is_complete():
        next_constraint = list(
            ruleset.initial_prompt
            if session.cursor == 0
            else ruleset.link_constraints[session.cursor - 1].prompt
        )
    return {
        "status": session.status,
        "seed": session.seed,
        "cursor": session.cursor,
        "total_links": ruleset.total_links,
        "next_constraint": next_constraint,
        "ruleset": ruleset_to_dict(ruleset),
        "links": [link_to_dict(link) for link in session.links],
    }
