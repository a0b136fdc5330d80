"""HTTP play service: classification queries, winning-move hints, sessions.

Sessions live in memory with a sliding TTL.  Requests for one session are
serialized by a per-session lock, and every applied move bumps the session
version, so a replayed or raced move request is rejected rather than applied
twice.  All positions travel as {"x": int, "y": int}; errors travel as
{"error": code, "detail": text}.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Any

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .game import MoveKind, Position, TerminalSpec, is_terminal, move_kind
from .sequences import PClass, classify, p_membership, p_positions_below, pair_index
from .solver import best_move, fallback_move, winning_moves

DEFAULT_BOUND = 512
MAX_BOUND = 4096
MAX_QUERY_BOUND = 100_000
SESSION_TTL_SECONDS = 3600.0


class PositionBody(BaseModel):
    x: int
    y: int


class CreateSessionBody(BaseModel):
    k: int = 0
    bound: int = DEFAULT_BOUND
    start: PositionBody
    engine_first: bool = False


class MoveBody(BaseModel):
    to: PositionBody
    version: int | None = None


@dataclass
class Session:
    id: str
    k: int
    bound: int
    current: Position
    status: str = "in-progress"
    version: int = 0
    history: list[dict[str, Any]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    touched: float = field(default_factory=time.monotonic, repr=False)


class SessionStore:
    """In-memory sessions; stale ones are swept on access."""

    def __init__(self, ttl: float) -> None:
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _sweep(self, now: float) -> None:
        dead = [sid for sid, s in self._sessions.items() if now - s.touched > self.ttl]
        for sid in dead:
            del self._sessions[sid]

    def create(self, k: int, bound: int, start: Position) -> Session:
        now = time.monotonic()
        with self._lock:
            self._sweep(now)
            sid = secrets.token_hex(16)
            session = Session(id=sid, k=k, bound=bound, current=start)
            self._sessions[sid] = session
            return session

    def get(self, sid: str) -> Session | None:
        now = time.monotonic()
        with self._lock:
            self._sweep(now)
            session = self._sessions.get(sid)
            if session is not None:
                session.touched = now
            return session


def _pos_json(p: Position) -> dict[str, int]:
    return {"x": p.x, "y": p.y}


def _session_json(s: Session) -> dict[str, Any]:
    return {
        "id": s.id,
        "k": s.k,
        "bound": s.bound,
        "current": _pos_json(s.current),
        "status": s.status,
        "version": s.version,
        "history": list(s.history),
    }


def _error(status_code: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status_code, content={"error": code, "detail": detail})


def _apply_move(session: Session, mover: str, target: Position) -> None:
    session.history.append(
        {"mover": mover, "from": _pos_json(session.current), "to": _pos_json(target)}
    )
    session.current = target
    session.version += 1
    if is_terminal(target, TerminalSpec(session.k)):
        session.status = f"{mover}-won"


def _engine_reply(session: Session) -> None:
    spec = TerminalSpec(session.k)
    is_p = p_membership(session.k)
    target = best_move(is_p, session.current, spec)
    if target is None:
        target = fallback_move(is_p, session.current, spec)
    _apply_move(session, "engine", target)


def create_app(session_ttl: float = SESSION_TTL_SECONDS) -> FastAPI:
    app = FastAPI(title="wythoff play service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(session_ttl)
    app.state.store = store

    @app.get("/healthz")
    def healthz() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/sessions")
    def create_session(body: CreateSessionBody):
        if body.k < 0:
            return _error(400, "invalid_k", f"k must be non-negative, got {body.k}")
        if not 1 <= body.bound <= MAX_BOUND:
            return _error(400, "invalid_bound", f"bound must lie in 1..{MAX_BOUND}")
        start = Position(body.start.x, body.start.y)
        if not (0 <= start.x <= body.bound and 0 <= start.y <= body.bound):
            return _error(400, "off_board", f"start {tuple(start)} is outside the board")
        if is_terminal(start, TerminalSpec(body.k)):
            return _error(400, "terminal_start", f"start {tuple(start)} is already terminal")
        session = store.create(body.k, body.bound, start)
        if body.engine_first:
            with session.lock:
                _engine_reply(session)
        return _session_json(session)

    @app.post("/sessions/{sid}/move")
    def play_move(sid: str, body: MoveBody):
        session = store.get(sid)
        if session is None:
            return _error(404, "unknown_session", f"no session {sid!r}")
        with session.lock:
            if session.status != "in-progress":
                return _error(409, "session_finished", f"session is {session.status}")
            if body.version is not None and body.version != session.version:
                return _error(
                    409,
                    "version_conflict",
                    f"request targets version {body.version}, session is at {session.version}",
                )
            target = Position(body.to.x, body.to.y)
            p = session.current
            if not (0 <= target.x <= session.bound and 0 <= target.y <= session.bound):
                return _error(409, "illegal_move", "off-board")
            if target.x > p.x or target.y > p.y:
                return _error(409, "illegal_move", "coordinate increased")
            if move_kind(p, target) is MoveKind.ILLEGAL:
                return _error(409, "illegal_move", "not a queen move")
            _apply_move(session, "human", target)
            if session.status == "in-progress":
                _engine_reply(session)
            return _session_json(session)

    @app.get("/sessions/{sid}/hints")
    def hints(sid: str):
        session = store.get(sid)
        if session is None:
            return _error(404, "unknown_session", f"no session {sid!r}")
        wins = winning_moves(p_membership(session.k), session.current, TerminalSpec(session.k))
        return {"winning_moves": [_pos_json(q) for q in wins]}

    @app.get("/classify")
    def classify_position(k: int, x: int, y: int):
        if k < 0 or x < 0 or y < 0:
            return _error(400, "invalid_query", "k, x, and y must be non-negative")
        p = Position(x, y)
        return {"class": classify(k, p).value, "pair_index": pair_index(k, p)}

    @app.get("/ppositions")
    def ppositions(k: int, bound: int):
        if k < 0:
            return _error(400, "invalid_k", f"k must be non-negative, got {k}")
        if not 0 <= bound <= MAX_QUERY_BOUND:
            return _error(400, "invalid_bound", f"bound must lie in 0..{MAX_QUERY_BOUND}")
        return [_pos_json(p) for p in p_positions_below(k, bound)]

    return app


app = create_app()
