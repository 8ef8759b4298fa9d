"""Session API for live games: a human plays Painter against an engine
Builder strategy, or Builder against an engine Painter.

The wire protocol is JSON over a websocket (plus REST for creation and
transcript download). The service adds no game semantics of its own: every
move goes through the same engine calls as scripted runs, so a recorded human
color script replays identically through adversaries.Scripted.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse, PlainTextResponse

from .adversaries import AllBlue, AllRed, GreedyAvoid, RandomSeeded
from .core import (
    Color,
    Edge,
    GameState,
    IllegalMove,
    TargetSpec,
    play_edge,
    transcript_jsonl,
)
from .solver import OptimalPainter
from .strategies import BuilderStrategy, PreconditionViolation, named_setup

IDLE_EVICT_SECONDS = 30 * 60

PAINTER_ENGINES = {
    "greedy-avoid": lambda params, target, budget: GreedyAvoid(int(params.get("depth", 1))),
    "all-red": lambda params, target, budget: AllRed(),
    "all-blue": lambda params, target, budget: AllBlue(),
    "random-seeded": lambda params, target, budget: RandomSeeded(int(params.get("seed", 0))),
    "optimal": lambda params, target, budget: _optimal_painter(target, budget),
}


def _optimal_painter(target: TargetSpec, budget: int) -> OptimalPainter:
    if budget > 8 or max(target.red.size, target.blue.size) > 5:
        raise PreconditionViolation(
            "optimal painter is only offered for tiny targets (budget <= 8, sizes <= 5)")
    return OptimalPainter(target, budget)


@dataclass
class Session:
    id: str
    role: str  # "painter" | "builder"
    target: TargetSpec
    budget: int
    state: GameState
    strategy: Optional[BuilderStrategy] = None  # engine Builder (painter role)
    painter: object = None  # engine Painter (builder role)
    pending: Optional[Edge] = None
    done: bool = False
    last_active: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def touch(self):
        self.last_active = time.monotonic()


class SessionError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _state_message(session: Session) -> dict:
    edges = sorted(([u, v, c.value] for (u, v), c in session.state.board.edges.items()),
                   key=lambda row: (row[0], row[1]))
    return {"type": "state", "round": session.state.round, "edges": edges}


def _terminal_message(session: Session) -> dict:
    t = session.state.terminal
    if t is not None:
        return {"type": "terminal", "result": t.result,
                "witness": t.witness.to_dict(), "rounds": session.state.round}
    return {"type": "terminal", "result": "budget_exceeded", "witness": None,
            "rounds": session.state.round}


class SessionRegistry:
    def __init__(self, idle_seconds: float = IDLE_EVICT_SECONDS):
        self.idle_seconds = idle_seconds
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _evict(self) -> None:
        now = time.monotonic()
        stale = [sid for sid, s in self._sessions.items()
                 if now - s.last_active > self.idle_seconds]
        for sid in stale:
            del self._sessions[sid]

    def add(self, session: Session) -> None:
        with self._lock:
            self._evict()
            self._sessions[session.id] = session

    def get(self, sid: str) -> Session:
        with self._lock:
            self._evict()
            session = self._sessions.get(sid)
        if session is None:
            raise SessionError("unknown_session", f"no session {sid!r}")
        session.touch()
        return session


def create_session(registry: SessionRegistry, payload: dict) -> tuple[Session, list[dict]]:
    """Build a session from a create payload; returns it plus the messages
    the client should receive right away."""
    role = payload.get("role")
    if role not in ("painter", "builder"):
        raise SessionError("bad_message", f"role must be painter or builder, got {role!r}")
    engine = payload.get("engine")
    params = payload.get("params") or {}
    budget = payload.get("budget")
    explicit_target = payload.get("target")

    if role == "painter":
        if engine is None:
            raise SessionError("unknown_strategy", "painter sessions need an engine strategy id")
        try:
            setup, declared_budget, target = named_setup(
                engine,
                k=params.get("k"), n=params.get("n"), m=params.get("m"),
                t=params.get("t"), seed_blue_path=params.get("seed_blue_path"))
        except KeyError:
            raise SessionError("unknown_strategy", f"unknown strategy id {engine!r}")
        except (PreconditionViolation, ValueError) as exc:
            raise SessionError("invalid_target", str(exc))
        if explicit_target is not None:
            try:
                wanted = TargetSpec.from_dict(explicit_target)
            except (KeyError, ValueError, TypeError) as exc:
                raise SessionError("invalid_target", f"bad target: {exc}")
            if wanted != target:
                raise SessionError(
                    "invalid_target",
                    f"engine {engine} with these params plays for {target.to_dict()}")
        try:
            state, strategy = setup()
        except (PreconditionViolation, ValueError) as exc:
            raise SessionError("invalid_target", str(exc))
        session = Session(id=uuid.uuid4().hex, role=role, target=target,
                          budget=int(budget) if budget is not None else declared_budget,
                          state=state.copy())
        strategy.setup(session.state)
        session.strategy = strategy
        registry.add(session)
        messages = [{"type": "created", "session": session.id},
                    _state_message(session)]
        messages.extend(_advance_painter_session(session))
        return session, messages

    # builder role: human proposes, engine paints
    if explicit_target is None:
        raise SessionError("invalid_target", "builder sessions need an explicit target")
    try:
        target = TargetSpec.from_dict(explicit_target)
    except (KeyError, ValueError, TypeError) as exc:
        raise SessionError("invalid_target", f"bad target: {exc}")
    if budget is None:
        raise SessionError("bad_message", "builder sessions need a budget")
    engine = engine or "greedy-avoid"
    maker = PAINTER_ENGINES.get(engine)
    if maker is None:
        raise SessionError("unknown_strategy", f"unknown painter engine {engine!r}")
    try:
        painter = maker(params, target, int(budget))
    except PreconditionViolation as exc:
        raise SessionError("invalid_target", str(exc))
    session = Session(id=uuid.uuid4().hex, role=role, target=target,
                      budget=int(budget), state=GameState.new(target),
                      painter=painter)
    registry.add(session)
    messages = [{"type": "created", "session": session.id}, _state_message(session)]
    if session.state.terminal is not None:
        session.done = True
        messages.append(_terminal_message(session))
    return session, messages


def _advance_painter_session(session: Session) -> list[dict]:
    """Emit the next engine proposal, or the terminal message."""
    if session.state.terminal is not None:
        session.done = True
        return [_terminal_message(session)]
    if session.state.round >= session.budget:
        session.done = True
        return [_terminal_message(session)]
    e = session.strategy.propose(session.state)
    if e is None:
        session.done = True
        return [_terminal_message(session)]
    session.pending = e
    return [{"type": "propose", "round": session.state.round + 1,
             "edge": [e[0], e[1]]}]


def submit_color(session: Session, color_name: str) -> list[dict]:
    if session.done:
        raise SessionError("session_terminated", "session already ended")
    if session.role != "painter" or session.pending is None:
        raise SessionError("out_of_turn", "no proposal is pending")
    try:
        color = Color(color_name)
    except ValueError:
        raise SessionError("bad_message", f"color must be red or blue, got {color_name!r}")
    e = session.pending
    session.pending = None
    session.state = play_edge(session.state, e, color)
    session.strategy.observe(session.state, e, session.state.board.color_of(e))
    return [_state_message(session)] + _advance_painter_session(session)


def submit_edge(session: Session, edge_pair) -> list[dict]:
    if session.done:
        raise SessionError("session_terminated", "session already ended")
    if session.role != "builder":
        raise SessionError("out_of_turn", "this session expects colors, not edges")
    try:
        u, v = int(edge_pair[0]), int(edge_pair[1])
    except (TypeError, ValueError, IndexError):
        raise SessionError("bad_message", f"edge must be [u, v], got {edge_pair!r}")
    try:
        choice = session.painter.color_response(session.state, (min(u, v), max(u, v)))
        session.state = play_edge(session.state, (u, v), choice)
    except IllegalMove as exc:
        raise SessionError("illegal_edge", str(exc))
    out = [_state_message(session)]
    if session.state.terminal is not None or session.state.round >= session.budget:
        session.done = True
        out.append(_terminal_message(session))
    return out


def handle_message(registry: SessionRegistry, payload: dict) -> list[dict]:
    """Dispatch one client message to its session (used by the websocket)."""
    kind = payload.get("type")
    if kind == "create":
        _, messages = create_session(registry, payload)
        return messages
    sid = payload.get("session")
    session = registry.get(sid)
    with session.lock:
        if kind == "color":
            return submit_color(session, payload.get("color"))
        if kind == "edge":
            return submit_edge(session, payload.get("edge"))
        if kind == "attach":
            out = [_state_message(session)]
            if session.done:
                out.append(_terminal_message(session))
            elif session.pending is not None:
                e = session.pending
                out.append({"type": "propose", "round": session.state.round + 1,
                            "edge": [e[0], e[1]]})
            return out
    raise SessionError("bad_message", f"unknown message type {kind!r}")


def create_app(idle_seconds: float = IDLE_EVICT_SECONDS,
               static_dir: str | None = None) -> FastAPI:
    """API app; pass static_dir (e.g. the built web client) to also serve it."""
    app = FastAPI(title="ramseylab", version="0.1.0")
    registry = SessionRegistry(idle_seconds=idle_seconds)
    app.state.registry = registry

    @app.post("/sessions")
    def post_session(payload: dict):
        try:
            session, messages = create_session(registry, payload)
        except SessionError as exc:
            return JSONResponse({"error": exc.code, "message": exc.message},
                                status_code=400)
        return {"session": session.id, "messages": messages}

    @app.get("/sessions/{sid}/transcript")
    def get_transcript(sid: str):
        try:
            session = registry.get(sid)
        except SessionError as exc:
            return JSONResponse({"error": exc.code, "message": exc.message},
                                status_code=404)
        return PlainTextResponse(transcript_jsonl(session.state))

    @app.websocket("/ws")
    async def ws_endpoint(ws: WebSocket):
        await ws.accept()
        try:
            while True:
                try:
                    payload = await ws.receive_json()
                except (ValueError, TypeError):
                    await ws.send_json({"type": "error", "code": "bad_message",
                                        "message": "payload must be a JSON object"})
                    continue
                try:
                    for msg in handle_message(registry, payload):
                        await ws.send_json(msg)
                except SessionError as exc:
                    await ws.send_json({"type": "error", "code": exc.code,
                                        "message": exc.message})
        except WebSocketDisconnect:
            pass

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


app = create_app()
