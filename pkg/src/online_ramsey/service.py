"""Session-oriented HTTP API for live matches against the machine strategies.

Endpoints (all JSON bodies use the schemas documented in the README):

    POST /sessions                     create a session
    GET  /sessions/{id}                current snapshot
    POST /sessions/{id}/move           submit a color (painter) or an edge (builder)
    GET  /sessions/{id}/transcript     transcript document
    GET  /sessions/{id}/events         server-sent events with snapshots

Sessions live in memory and are evicted after an idle timeout; terminal
transcripts are also written to the data directory when one is configured.
"""

from __future__ import annotations

import asyncio
import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse

from .builders import budget as theorem_budget
from .builders import constructive_builder
from .engine import (
    FRESH,
    GameState,
    GameStatus,
    Outcome,
    apply_move,
    new_game,
    resolve_fresh,
    transcript_to_json,
)
from .graph import BLUE, RED, Color, find_target_witness
from .painters import blocking_painter, random_painter
from .verify import star_path_targets


class ServiceError(Exception):
    status_code = 400
    code = "bad_request"


class BadParamsError(ServiceError):
    status_code = 422
    code = "bad_params"


class UnknownSessionError(ServiceError):
    status_code = 404
    code = "unknown_session"


class SessionClosedError(ServiceError):
    status_code = 410
    code = "session_closed"


class NotYourTurnError(ServiceError):
    status_code = 403
    code = "not_your_turn"


class IllegalEdgeRequestError(ServiceError):
    status_code = 400
    code = "illegal_edge"


_LEGAL_OPPONENTS = {"painter": ("constructive",), "builder": ("blocking", "random")}


@dataclass
class Session:
    id: str
    l: int
    role: str  # the human's role
    opponent: str
    seed: int
    state: GameState
    machine: object
    budget: int
    pending: tuple[int, int] | None = None
    revision: int = 1
    last_access: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def closed(self) -> bool:
        return self.state.status is not GameStatus.ONGOING or self.state.rounds >= self.budget

    def descriptor(self) -> dict:
        board = self.state.board
        witness = None
        if self.state.status is GameStatus.RED_TARGET_HIT:
            witness = find_target_witness(board, RED, self.state.targets.red)
        elif self.state.status is GameStatus.BLUE_TARGET_HIT:
            witness = find_target_witness(board, BLUE, self.state.targets.blue)
        return {
            "id": self.id,
            "l": self.l,
            "role": self.role,
            "opponent": self.opponent,
            "budget": self.budget,
            "status": self.state.status.value,
            "rounds": self.state.rounds,
            "closed": self.closed,
            "board": board.to_json(),
            "moves": [
                {"r": m.round, "u": m.u, "v": m.v, "c": m.color.letter}
                for m in self.state.transcript
            ],
            "pending": (
                {"u": self.pending[0], "v": self.pending[1]} if self.pending is not None else None
            ),
            "witness": [[u, v] for u, v in witness] if witness else None,
            "revision": self.revision,
        }

    def transcript_doc(self) -> dict:
        outcome = Outcome(self.state.status, self.state.rounds, self.state.transcript)
        return transcript_to_json(outcome, self.state.targets, self.budget)


class SessionStore:
    def __init__(self, max_l: int, data_dir: str | None, idle_timeout: float = 3600.0):
        self.max_l = max_l
        self.data_dir = Path(data_dir) if data_dir else None
        self.idle_timeout = idle_timeout
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        if self.data_dir:
            self.data_dir.mkdir(parents=True, exist_ok=True)

    def create(self, l: int, role: str, opponent: str, seed: int = 0) -> Session:
        if not isinstance(l, int) or l < 2 or l > self.max_l:
            raise BadParamsError(f"l must be an integer in [2, {self.max_l}]")
        if role not in _LEGAL_OPPONENTS:
            raise BadParamsError("role must be 'painter' or 'builder'")
        if opponent not in _LEGAL_OPPONENTS[role]:
            raise BadParamsError(
                f"a human {role} plays against one of {_LEGAL_OPPONENTS[role]}"
            )
        if role == "painter":
            machine = constructive_builder(l)
        elif opponent == "blocking":
            machine = blocking_painter(l)
        else:
            machine = random_painter(seed)
        session = Session(
            id=uuid.uuid4().hex,
            l=l,
            role=role,
            opponent=opponent,
            seed=seed,
            state=new_game(star_path_targets(l)),
            machine=machine,
            budget=theorem_budget(l),
        )
        if role == "painter":
            session.pending = resolve_fresh(
                session.state.board, machine.next_move(session.state)
            )
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        self._evict_idle()
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSessionError(f"no session {session_id}")
        session.last_access = time.monotonic()
        return session

    def _evict_idle(self) -> None:
        now = time.monotonic()
        with self._lock:
            stale = [
                sid
                for sid, s in self._sessions.items()
                if now - s.last_access > self.idle_timeout
            ]
            for sid in stale:
                del self._sessions[sid]

    def persist(self, session: Session) -> None:
        if self.data_dir is None:
            return
        out = self.data_dir / f"{session.id}.json"
        out.write_text(json.dumps(session.transcript_doc(), indent=2), encoding="utf-8")


def _submit_painter(session: Session, action: dict) -> None:
    if "color" not in action:
        raise NotYourTurnError("you are the painter; submit {'color': 'R'|'B'}")
    if session.pending is None:
        raise NotYourTurnError("no pending proposal")
    try:
        color = Color.from_letter(str(action["color"]).upper())
    except ValueError as e:
        raise BadParamsError(str(e)) from e
    u, v = session.pending
    session.state = apply_move(session.state, u, v, color)
    session.pending = None
    if not session.closed:
        session.machine.observe(session.state)
        session.pending = resolve_fresh(
            session.state.board, session.machine.next_move(session.state)
        )


def _submit_builder(session: Session, action: dict) -> None:
    if "u" not in action or "v" not in action:
        raise NotYourTurnError("you are the builder; submit {'u': int, 'v': int} (-1 for a fresh vertex)")
    try:
        pair = tuple(FRESH if int(x) < 0 else int(x) for x in (action["u"], action["v"]))
    except (TypeError, ValueError) as e:
        raise BadParamsError(f"bad vertex ids: {e}") from e
    u, v = resolve_fresh(session.state.board, pair)
    if u == v or session.state.board.has_edge(u, v):
        raise IllegalEdgeRequestError(f"({u}, {v}) is not a legal new edge")
    color = session.machine.choose_color(session.state, (u, v))
    session.state = apply_move(session.state, u, v, color)


def create_app(max_l: int = 30, data_dir: str | None = None, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="online-ramsey play service")
    store = SessionStore(max_l=max_l, data_dir=data_dir)
    app.state.store = store

    @app.exception_handler(ServiceError)
    async def _service_error(request: Request, exc: ServiceError):
        return JSONResponse(
            status_code=exc.status_code, content={"error": exc.code, "detail": str(exc)}
        )

    @app.post("/sessions")
    async def create_session(body: dict):
        l = body.get("l")
        role = body.get("role", "painter")
        opponent = body.get("opponent", "constructive" if role == "painter" else "blocking")
        seed = int(body.get("seed", 0))
        if not isinstance(l, int):
            raise BadParamsError("body must include an integer 'l'")
        session = store.create(l, role, opponent, seed)
        return session.descriptor()

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str):
        return store.get(session_id).descriptor()

    @app.post("/sessions/{session_id}/move")
    async def submit(session_id: str, body: dict):
        session = store.get(session_id)
        with session.lock:
            if session.closed:
                raise SessionClosedError("session is over; fetch the transcript")
            if session.role == "painter":
                _submit_painter(session, body)
            else:
                _submit_builder(session, body)
            session.revision += 1
            if session.closed:
                store.persist(session)
            return session.descriptor()

    @app.get("/sessions/{session_id}/transcript")
    async def transcript(session_id: str):
        return store.get(session_id).transcript_doc()

    @app.get("/sessions/{session_id}/events")
    async def events(session_id: str):
        session = store.get(session_id)

        async def stream():
            last = -1
            while True:
                if session.revision != last:
                    last = session.revision
                    with session.lock:
                        doc = session.descriptor()
                    yield f"data: {json.dumps(doc)}\n\n"
                    if doc["closed"]:
                        return
                await asyncio.sleep(0.2)

        return StreamingResponse(stream(), media_type="text/event-stream")

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
