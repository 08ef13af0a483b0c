"""HTTP facade: haiku batches, free-run rengas, and interactive sessions.

Thin JSON mapping over the engine modules. Sessions live in an in-memory
store with one lock per session (turns are serialized); an optional
append-only JSONL log records accepted links. Request/response shapes
are documented in docs/api.md.
"""

import json
import random
import threading
import uuid

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.requests import Request

from . import __version__
from .errors import EngineError, ModelsNotLoaded
from .generator import GenConfig, generate_batch
from .renga import (
    haiku_to_dict,
    link_to_dict,
    new_session,
    next_link,
    ruleset_from_dict,
    run_renga,
    session_to_dict,
    submit_link,
)

DEFAULT_BATCH = 10

STATUS_BY_CODE = {
    "no_vector_coverage": 422,
    "invalid_ruleset": 422,
    "models_not_loaded": 503,
    "session_complete": 409,
    "empty_token": 422,
    "all_candidates_violate": 500,
    "insufficient_fragments": 500,
    "slot_unfillable": 500,
    "empty_candidates": 500,
}


def _error_response(exc: EngineError):
    status = STATUS_BY_CODE.get(exc.code, 400)
    return JSONResponse(
        status_code=status, content={"error": {"code": exc.code, "message": str(exc)}}
    )


def _bad_request(code, message):
    return JSONResponse(status_code=400, content={"error": {"code": code, "message": message}})


class SessionStore:
    """In-memory sessions; per-session locks keep turn handling
    single-writer while distinct sessions proceed concurrently."""

    def __init__(self, log_path=None):
        self._sessions = {}
        self._locks = {}
        self._store_lock = threading.Lock()
        self.log_path = log_path

    def create(self, session):
        session_id = uuid.uuid4().hex[:12]
        with self._store_lock:
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        return session_id

    def get(self, session_id):
        with self._store_lock:
            return self._sessions.get(session_id)

    def lock(self, session_id):
        with self._store_lock:
            return self._locks[session_id]

    def log_link(self, session_id, link):
        if not self.log_path:
            return
        record = {"session_id": session_id, "event": "link_accepted", "link": link_to_dict(link)}
        with open(self.log_path, "a", encoding="utf-8") as f:
            f.write(json.dumps(record) + "\n")


def create_app(models=None, session_log=None):
    app = FastAPI(title="haikai", version=__version__)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = SessionStore(log_path=session_log)
    app.state.models = models
    app.state.store = store

    def require_models():
        if app.state.models is None:
            raise ModelsNotLoaded("model directory not loaded")
        return app.state.models

    @app.exception_handler(EngineError)
    async def engine_error_handler(request: Request, exc: EngineError):
        return _error_response(exc)

    @app.get("/health")
    async def health():
        return {"status": "ok", "models_loaded": app.state.models is not None}

    @app.post("/haiku")
    async def haiku_batch(payload: dict):
        t1 = (payload.get("t1") or "").strip()
        if not t1:
            return _bad_request("missing_t1", "t1 (primary topic words) is required")
        t2 = (payload.get("t2") or "").strip()
        n = int(payload.get("n", DEFAULT_BATCH))
        if n < 0:
            return _bad_request("bad_n", "n must be >= 0")
        seed = payload.get("seed")
        if seed is None:
            seed = random.randrange(2**31)
        deps = require_models()
        prompts = [t1.split()] + ([t2.split()] if t2 else [])
        batch = generate_batch(prompts, n, deps, GenConfig(rng_seed=int(seed), batch_size=n))
        return {"seed": int(seed), "haikus": [haiku_to_dict(h) for h in batch]}

    @app.post("/renga")
    async def renga_free_run(payload: dict):
        deps = require_models()
        ruleset = ruleset_from_dict(payload.get("ruleset") or {})
        seed = payload.get("seed")
        if seed is None:
            seed = random.randrange(2**31)
        session = run_renga(ruleset, deps, seed=int(seed))
        return {"seed": int(seed), "links": [link_to_dict(link) for link in session.links]}

    @app.post("/session")
    async def create_session(payload: dict):
        require_models()
        ruleset = ruleset_from_dict(payload.get("ruleset") or {})
        seed = payload.get("seed")
        if seed is None:
            seed = random.randrange(2**31)
        session = new_session(ruleset, seed=int(seed))
        session_id = store.create(session)
        state = session_to_dict(session)
        state["session_id"] = session_id
        return state

    @app.get("/session/{session_id}")
    async def get_session(session_id: str):
        session = store.get(session_id)
        if session is None:
            return JSONResponse(
                status_code=404,
                content={"error": {"code": "unknown_session", "message": session_id}},
            )
        state = session_to_dict(session)
        state["session_id"] = session_id
        return state

    @app.post("/session/{session_id}/link")
    async def post_link(session_id: str, payload: dict):
        deps = require_models()
        session = store.get(session_id)
        if session is None:
            return JSONResponse(
                status_code=404,
                content={"error": {"code": "unknown_session", "message": session_id}},
            )
        with store.lock(session_id):
            if payload.get("machine"):
                next_link(session, deps)
                store.log_link(session_id, session.links[-1])
            else:
                lines = payload.get("lines")
                if not isinstance(lines, list):
                    return _bad_request("missing_lines", 'body needs "lines" or "machine": true')
                violations = submit_link(session, lines, deps)
                if violations:
                    return JSONResponse(
                        status_code=422,
                        content={"violations": [v.to_dict() for v in violations]},
                    )
                store.log_link(session_id, session.links[-1])
            state = session_to_dict(session)
            state["session_id"] = session_id
            return state

    return app


def app_from_model_dir(model_dir, session_log=None):
    from .pipeline import load_model_set

    return create_app(models=load_model_set(model_dir), session_log=session_log)
