"""Error types shared across the engine.

Every error carries a stable machine-readable ``code`` so the HTTP layer
can map module failures 1:1 onto API error payloads.
"""


class EngineError(Exception):
    code = "engine_error"

    def __init__(self, message=""):
        super().__init__(message or self.__class__.__name__)


class EmptyToken(EngineError):
    code = "empty_token"


class EmptyLexicon(EngineError):
    code = "empty_lexicon"


class EmptyCorpus(EngineError):
    code = "empty_corpus"


class NoFiveFragments(EngineError):
    code = "no_five_fragments"


class NoSevenFragments(EngineError):
    code = "no_seven_fragments"


class InsufficientFragments(EngineError):
    code = "insufficient_fragments"


class EmptySpace(EngineError):
    code = "empty_space"


class NoVectorCoverage(EngineError):
    code = "no_vector_coverage"


class ZeroTopic(EngineError):
    code = "zero_topic"


class ZeroVector(EngineError):
    code = "zero_vector"


class SlotUnfillable(EngineError):
    code = "slot_unfillable"

    def __init__(self, slot, message=""):
        self.slot = slot
        super().__init__(message or f"no candidate fills slot {slot!r}")


class EmptyCandidates(EngineError):
    code = "empty_candidates"


class InvalidRuleset(EngineError):
    code = "invalid_ruleset"


class SessionComplete(EngineError):
    code = "session_complete"


class AllCandidatesViolate(EngineError):
    code = "all_candidates_violate"


class ModelsNotLoaded(EngineError):
    code = "models_not_loaded"
