"""Stateful HTTP API for the parity puzzle.

A session wraps one graph; the player refines edges move by move trying to
reach a graph with no odd-degree vertices.  Closed mode accepts any simple
graph and allows every edge.  Ball mode demands a disc and only allows cuts
with at least one interior endpoint, which keeps the boundary cycle intact.

Sessions live in memory behind per-session locks; an optional snapshot path
persists initial graph + move history as JSON so a restart can replay them.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .core import (
    Graph,
    SurfaceType,
    classify_surface,
    curvature_ledger,
    normalize_edge,
    odd_vertices,
)
from .errors import EulerizerError, PreconditionViolatedError
from .eulerize import plan_first_cut_ball, plan_first_cut_closed
from .flow import ergodic_components
from .refine import RefinementMove, edge_contract, edge_refine

MODES = ("Closed", "Ball")

# Hints must be reproducible: two consecutive calls see the same graph and
# must suggest the same cut, so the planner seed is pinned.
_HINT_SEED = 0


def _http_error(status: int, code: str, message: str, **extra) -> HTTPException:
    detail = {"error": code, "message": message}
    detail.update(extra)
    return HTTPException(status_code=status, detail=detail)


def _ball_boundary(g: Graph) -> list[int]:
    """Boundary cycle of a disc, or raises the classification error."""
    report = classify_surface(g)
    if (report.surface_type is not SurfaceType.WITH_BOUNDARY
            or len(report.boundary_cycles) != 1
            or report.euler_characteristic != 1):
        raise PreconditionViolatedError(
            "ball mode needs a disc: one boundary cycle and euler characteristic 1",
            surfaceType=report.surface_type.value)
    return list(report.boundary_cycles[0])


@dataclass
class Session:
    id: str
    mode: str
    initial: Graph
    current: Graph
    history: list[RefinementMove] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def won(self) -> bool:
        return not odd_vertices(self.current)

    def legal_edges(self) -> list[tuple[int, int]]:
        edges = self.current.edges()
        if self.mode == "Ball":
            boundary = set(_ball_boundary(self.current))
            edges = [e for e in edges
                     if not (e[0] in boundary and e[1] in boundary)]
        return edges

    def state(self) -> dict:
        doc = {
            "graph": self.current.to_json_dict(),
            "oddVertices": sorted(odd_vertices(self.current)),
            "legalEdgeCount": len(self.legal_edges()),
            "moveCount": len(self.history),
            "won": self.won,
        }
        if self.mode == "Ball":
            doc["boundaryMod3"] = len(_ball_boundary(self.current)) % 3
        return doc


class SessionStore:
    """Registry with per-session exclusive access and optional snapshots."""

    def __init__(self, snapshot_path: str | None = None):
        self._sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()
        self._snapshot_path = snapshot_path
        if snapshot_path and os.path.exists(snapshot_path):
            self._load_snapshot(snapshot_path)

    def create(self, graph: Graph, mode: str) -> Session:
        session = Session(id=secrets.token_hex(16), mode=mode,
                          initial=graph, current=graph)
        with self._registry_lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise _http_error(404, "UnknownSession", f"no session {session_id}")
        return session

    def snapshot(self) -> None:
        if not self._snapshot_path:
            return
        with self._registry_lock:
            doc = {sid: {"mode": s.mode,
                         "initial": s.initial.to_json_dict(),
                         "history": [list(m.refined_edge) for m in s.history]}
                   for sid, s in self._sessions.items()}
        tmp = self._snapshot_path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        os.replace(tmp, self._snapshot_path)

    def _load_snapshot(self, path: str) -> None:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        for sid, entry in doc.items():
            g = Graph.from_json_dict(entry["initial"])
            session = Session(id=sid, mode=entry["mode"], initial=g, current=g)
            for a, b in entry["history"]:
                session.current, move = edge_refine(session.current, (a, b))
                session.history.append(move)
            self._sessions[sid] = session


def create_app(snapshot_path: str | None = None) -> FastAPI:
    app = FastAPI(title="eulerizer puzzle service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(snapshot_path)
    app.state.store = store

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/api/session")
    def create_session(body: dict) -> dict:
        mode = body.get("mode", "Closed")
        if mode not in MODES:
            raise _http_error(400, "BadMode", f"mode must be one of {MODES}")
        try:
            graph = Graph.from_json_dict(body.get("graph") or {})
        except EulerizerError as exc:
            raise _http_error(400, exc.code, str(exc), **exc.payload)
        if mode == "Ball":
            try:
                _ball_boundary(graph)
            except EulerizerError as exc:
                raise _http_error(422, "NotABall", str(exc), **exc.payload)
        session = store.create(graph, mode)
        store.snapshot()
        return {"id": session.id, "state": session.state()}

    @app.get("/api/session/{session_id}")
    def get_state(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            return session.state()

    @app.post("/api/session/{session_id}/move")
    def apply_move(session_id: str, body: dict) -> dict:
        session = store.get(session_id)
        raw = body.get("edge")
        if (not isinstance(raw, (list, tuple)) or len(raw) != 2
                or not all(isinstance(x, int) for x in raw)):
            raise _http_error(400, "BadEdge", "body must carry edge: [a, b]")
        with session.lock:
            if session.won:
                raise _http_error(409, "SessionFrozen",
                                  "session already won; undo to keep playing")
            edge = normalize_edge(raw[0], raw[1])
            if not session.current.has_edge(*edge):
                raise _http_error(410, "EdgeGone",
                                  f"edge {list(edge)} is not in the current graph")
            if edge not in session.legal_edges():
                raise _http_error(409, "IllegalEdge",
                                  "ball mode forbids boundary-boundary cuts",
                                  edge=list(edge))
            session.current, move = edge_refine(session.current, edge)
            session.history.append(move)
            state = session.state()
        store.snapshot()
        return {"state": state, "delta": move.to_json_dict()}

    @app.post("/api/session/{session_id}/undo")
    def undo(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            if not session.history:
                raise _http_error(409, "NothingToUndo", "history is empty")
            move = session.history.pop()
            b = max(move.refined_edge)
            session.current = edge_contract(
                session.current, normalize_edge(b, move.new_vertex))
            state = session.state()
        store.snapshot()
        return {"state": state, "undone": move.to_json_dict()}

    @app.get("/api/session/{session_id}/hint")
    def hint(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            if session.won:
                raise _http_error(409, "SessionFrozen", "nothing to hint: already won")
            current = session.current
            mode = session.mode
        # Planning runs on the immutable graph value outside any mutation.
        try:
            if mode == "Ball":
                plan = plan_first_cut_ball(current, seed=_HINT_SEED)
            else:
                plan = plan_first_cut_closed(current, seed=_HINT_SEED)
        except PreconditionViolatedError as exc:
            raise _http_error(422, "RefusedBoundaryNotMod3", "puzzle is unwinnable",
                              **exc.payload)
        except EulerizerError as exc:
            raise _http_error(422, exc.code, str(exc), **exc.payload)
        if plan is None:
            raise _http_error(409, "SessionFrozen", "no odd vertices left")
        return {"edge": list(plan["edge"]), "target": plan["target"],
                "rationale": plan.get("kind", "cut")}

    @app.get("/api/session/{session_id}/analysis")
    def analysis(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            current = session.current
        doc: dict = {"oddVertices": sorted(odd_vertices(current))}
        try:
            doc["components"] = ergodic_components(current).to_json_dict()
        except EulerizerError:
            doc["components"] = None
        try:
            doc["curvature"] = curvature_ledger(current).to_json_dict()
        except EulerizerError:
            doc["curvature"] = None
        return doc

    @app.get("/api/session/{session_id}/consistency")
    def consistency(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            replayed = session.initial
            for move in session.history:
                replayed, _ = edge_refine(replayed, move.refined_edge)
            ok = replayed == session.current
            return {"consistent": ok, "moveCount": len(session.history)}

    return app


app = create_app()
