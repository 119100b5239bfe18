"""Session-oriented HTTP API for live play against an engine tactic.

JSON over HTTP, four endpoints:

    POST /sessions               create a session (construction or inline cake)
    GET  /sessions/{id}          current view
    POST /sessions/{id}/moves    human move; the engine reply is applied
                                 synchronously in the same request
    GET  /sessions/{id}/hint     solver's optimal move set and value

Coordinates travel as decimal strings so arbitrary precision survives
any client.  Sessions live in memory behind an LRU cap; per-session
operations are serialized with a lock, while distinct sessions are
fully independent.  This is a workbench, not a product: no auth, no
persistence.
"""

from __future__ import annotations

import threading
import uuid
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, ConfigDict, Field

from . import cake as cakemod
from . import constructions, engine, tactics
from .engine import GameState, Player, Tactic
from .solver import Solver

SESSION_CAP = 256
# Full minimax above this size is not interactive; "optimal" engines and
# hints refuse rather than stall the session.
SOLVER_SESSION_CAP = 16


class CreateSessionRequest(BaseModel):
    # wire key stays "construct"; the python name avoids BaseModel.construct
    model_config = ConfigDict(populate_by_name=True)

    construction: Optional[str] = Field(default=None, alias="construct")
    cake: Optional[str] = None
    human_plays: str = "alice"
    engine: str = "simple-greedy"


@dataclass
class Session:
    id: str
    cake: cakemod.Cake
    human: Player
    engine_name: str
    engine_tactic: Tactic
    moves: list[int] = field(default_factory=list)
    solver: Optional[Solver] = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def state(self) -> GameState:
        return engine.replay(self.cake, self.moves)

    def get_solver(self) -> Solver:
        if self.solver is None:
            self.solver = Solver(self.cake)
        return self.solver


class SessionStore:
    """Insert-once LRU map of live sessions."""

    def __init__(self, cap: int = SESSION_CAP):
        self._cap = cap
        self._lock = threading.Lock()
        self._sessions: "OrderedDict[str, Session]" = OrderedDict()

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
            while len(self._sessions) > self._cap:
                self._sessions.popitem(last=False)

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(404, f"unknown session {session_id}")
            self._sessions.move_to_end(session_id)
            return session


def _taken_by(session: Session) -> dict[int, str]:
    out = {}
    for idx, move in enumerate(session.moves):
        out[move] = Player.ALICE.value if idx % 2 == 0 else Player.BOB.value
    return out


def _view(session: Session) -> dict:
    state = session.state()
    taken = _taken_by(session)
    alice, bob = engine.scores(session.cake, session.moves)
    cherries = [
        {
            "id": ch.id,
            "x": str(ch.point[0]),
            "y": str(ch.point[1]),
            "weight": str(ch.weight),
            "taken_by": taken.get(ch.id),
        }
        for ch in session.cake.cherries
    ]
    return {
        "id": session.id,
        "cherries": cherries,
        "extremal": sorted(state.extremal) if not state.is_over else [],
        "mover": state.mover.value if not state.is_over else None,
        "human_plays": session.human.value,
        "engine": session.engine_name,
        "moves": list(session.moves),
        "scores": {"alice": str(alice), "bob": str(bob)},
        "game_over": state.is_over,
    }


def _engine_tactic(name: str, c: cakemod.Cake) -> Tactic:
    if name == "optimal":
        if len(c) > SOLVER_SESSION_CAP:
            raise HTTPException(
                422,
                f"cake has {len(c)} cherries; the optimal engine is capped "
                f"at {SOLVER_SESSION_CAP}",
            )
        solver = Solver(c)

        def choose(state: GameState) -> int:
            return min(solver.record(state).optimal_moves)

        return Tactic("optimal", choose)
    try:
        return tactics.tactic_from_name(name, c)
    except (ValueError, tactics.AnnotationError) as exc:
        raise HTTPException(400, f"bad engine spec: {exc}") from exc


def _engine_turn(session: Session) -> None:
    state = session.state()
    if state.is_over or state.mover is session.human:
        return
    move = session.engine_tactic.choose(state)
    engine.apply_move(state, move)  # referee re-check; raises on a buggy tactic
    session.moves.append(move)


def create_app(static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="grabgame session service")
    store = SessionStore()
    app.state.store = store

    @app.post("/sessions")
    def create_session(req: CreateSessionRequest):
        if (req.construction is None) == (req.cake is None):
            raise HTTPException(400, "provide exactly one of construct / cake")
        if req.construction is not None:
            try:
                c, _ = constructions.from_spec(req.construction)
            except constructions.ConstructionError as exc:
                raise HTTPException(400, f"bad construction: {exc}") from exc
        else:
            try:
                c = cakemod.parse(req.cake)
            except cakemod.CakeError as exc:
                raise HTTPException(400, f"bad cake: {exc}") from exc
        try:
            human = Player(req.human_plays)
        except ValueError:
            raise HTTPException(400, f"human_plays must be alice or bob") from None
        tactic = _engine_tactic(req.engine, c)
        session = Session(
            id=uuid.uuid4().hex,
            cake=c,
            human=human,
            engine_name=req.engine,
            engine_tactic=tactic,
        )
        with session.lock:
            _engine_turn(session)  # if the engine opens, its move is in the view
            store.add(session)
            return _view(session)

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return _view(session)

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, body: dict):
        if "cherry_id" not in body:
            raise HTTPException(400, "body must carry cherry_id")
        try:
            cherry_id = int(body["cherry_id"])
        except (TypeError, ValueError):
            raise HTTPException(400, "cherry_id must be an integer") from None
        session = store.get(session_id)
        with session.lock:
            state = session.state()
            if state.is_over:
                raise HTTPException(409, "the game is over")
            if state.mover is not session.human:
                raise HTTPException(409, "not your turn")
            try:
                engine.apply_move(state, cherry_id)
            except engine.IllegalMoveError as exc:
                raise HTTPException(409, str(exc)) from exc
            session.moves.append(cherry_id)
            _engine_turn(session)
            return _view(session)

    @app.get("/sessions/{session_id}/hint")
    def hint(session_id: str):
        session = store.get(session_id)
        with session.lock:
            if len(session.cake) > SOLVER_SESSION_CAP:
                raise HTTPException(
                    422,
                    f"cake has {len(session.cake)} cherries; hints are capped "
                    f"at {SOLVER_SESSION_CAP}",
                )
            state = session.state()
            if state.is_over:
                raise HTTPException(409, "the game is over")
            rec = session.get_solver().record(state)
            return {
                "mover": state.mover.value,
                "value": str(rec.value),
                "optimal": sorted(rec.optimal_moves),
            }

    if static_dir is None:
        bundled = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        if bundled.is_dir():
            static_dir = str(bundled)
    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
