"""Local HTTP service exposing computist sessions.

Each service session wraps one library session; requests within a session
are serialized in arrival order by a per-session lock.  Payloads carry
configurations and instructions in the display grammar, and malformed
ones are answered with 409.  A blinded session never serializes its
hidden kind until the irreversible reveal, which also returns the
static-explanation certificate for everything observed so far.
"""

from __future__ import annotations

import threading
import time
import uuid
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .syntax import (
    SyntaxError_,
    DeterminismError,
    format_configuration,
    parse_configuration,
    parse_instruction,
    parse_procedure,
)
from .session import (
    DEFAULT_MAX_STEPS,
    EnvironmentKind,
    Session,
    SessionClosedError,
    open_session,
)
from .verification import consistency_certificate


class ServiceSession:
    def __init__(self, session: Session, kind: EnvironmentKind):
        self.id = uuid.uuid4().hex[:12]
        self.session = session
        self.kind = kind
        self.created = time.time()
        self.lock = threading.Lock()
        self.revealed: Optional[str] = None


def create_app() -> FastAPI:
    app = FastAPI(title="compenv service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry: dict = {}

    def fail(status: int, message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=status)

    def get_session(session_id: str):
        handle = registry.get(session_id)
        if handle is None:
            return None
        return handle

    @app.post("/sessions")
    async def create_session(request: Request):
        body = await request.json()
        kind_text = body.get("kind", "et")
        try:
            kind = EnvironmentKind(kind_text)
        except ValueError:
            return fail(409, f"unknown environment kind: {kind_text!r}")
        seed = body.get("seed")
        if seed is not None and not isinstance(seed, int):
            return fail(409, "seed must be an integer")
        handle = ServiceSession(open_session(kind, seed), kind)
        registry[handle.id] = handle
        return {"id": handle.id, "kind": kind.value}

    @app.post("/sessions/{session_id}/tbox")
    async def tbox(session_id: str, request: Request):
        handle = get_session(session_id)
        if handle is None:
            return fail(404, "no such session")
        body = await request.json()
        try:
            config = parse_configuration(body.get("config", ""))
            instruction = parse_instruction(body.get("instruction", ""))
        except SyntaxError_ as exc:
            return fail(409, str(exc))
        with handle.lock:
            try:
                result = handle.session.query_tbox(config, instruction)
            except SessionClosedError as exc:
                return fail(409, str(exc))
        return {"answer": None if result is None else format_configuration(result)}

    @app.post("/sessions/{session_id}/sbox")
    async def sbox(session_id: str, request: Request):
        handle = get_session(session_id)
        if handle is None:
            return fail(404, "no such session")
        body = await request.json()
        try:
            config = parse_configuration(body.get("config", ""))
        except SyntaxError_ as exc:
            return fail(409, str(exc))
        with handle.lock:
            try:
                verdict = handle.session.query_sbox(config)
            except SessionClosedError as exc:
                return fail(409, str(exc))
        return {"verdict": "YES" if verdict else "NO"}

    @app.post("/sessions/{session_id}/run")
    async def run(session_id: str, request: Request):
        handle = get_session(session_id)
        if handle is None:
            return fail(404, "no such session")
        body = await request.json()
        text = body.get("procedure", "")
        if isinstance(text, list):
            text = "\n".join(text)
        try:
            procedure = parse_procedure(text.replace(";", "\n"))
        except (SyntaxError_, DeterminismError) as exc:
            return fail(409, str(exc))
        x = body.get("input", "")
        max_steps = body.get("max_steps", DEFAULT_MAX_STEPS)
        if not isinstance(max_steps, int) or max_steps < 1:
            return fail(409, "max_steps must be a positive integer")
        with handle.lock:
            try:
                outcome = handle.session.run_procedure(procedure, x, max_steps)
            except SessionClosedError as exc:
                return fail(409, str(exc))
            except SyntaxError_ as exc:
                return fail(409, str(exc))
        return {
            "outcome": "success" if outcome.success else outcome.reason,
            "time": outcome.time,
            "path": [format_configuration(c) for c in outcome.path],
        }

    @app.get("/sessions/{session_id}/transcript")
    async def transcript(session_id: str):
        handle = get_session(session_id)
        if handle is None:
            return fail(404, "no such session")
        with handle.lock:
            body = handle.session.export_transcript().to_jsonl()
        return PlainTextResponse(body, media_type="application/jsonl")

    @app.post("/sessions/{session_id}/reveal")
    async def reveal(session_id: str, request: Request):
        handle = get_session(session_id)
        if handle is None:
            return fail(404, "no such session")
        if handle.kind != EnvironmentKind.BLINDED:
            return fail(409, "reveal applies to blinded sessions only")
        try:
            body = await request.json()
        except Exception:
            body = {}
        guess = body.get("guess")
        if guess is not None and guess not in ("static", "evolving"):
            return fail(409, "guess must be 'static' or 'evolving'")
        with handle.lock:
            if handle.revealed is not None:
                return fail(409, "session already revealed")
            certificate = consistency_certificate(handle.session)
            kind = handle.session.reveal()
            handle.revealed = kind.value
        actual = "static" if kind == EnvironmentKind.ET else "evolving"
        return {
            "kind": kind.value,
            "actual": actual,
            "guess": guess,
            "guess_matched": None if guess is None else guess == actual,
            "certificate": certificate,
        }

    app.state.registry = registry
    return app


def serve(host: str = "127.0.0.1", port: int = 8787):
    """Run the service with uvicorn (blocking)."""
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port)
