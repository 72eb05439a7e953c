"""HTTP facade over the engine, powering the interactive workbench.

Sessions hold an initial quiver and a history of mutated vertices; all
derived state (current matrix, colours, c-/g-matrices, cluster
variables) is a pure function of those two and is recomputed on load, so
a crash-restart replays to identical responses.  Sessions are persisted
as JSON under the data directory.  The API is documented in docs/api.md.
"""

from __future__ import annotations

import json
import secrets
import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from greenseq import exchange as ex
from greenseq import formats as fmt
from greenseq import tropical as tr
from greenseq.cluster import initial_seed, mutate_seed
from greenseq.quiver import ExtMatrix, colors, framed, mutate

SYMBOLIC_CAP_N = 6
SYMBOLIC_CAP_HISTORY = 24
HARD_CAP_N = 64
EXPLORE_CAP_VERTICES = 5000
GREENSEQ_CAP_LEN = 64


class QuiverDoc(BaseModel):
    n: int
    m: int
    b: list[list[int]]
    v: int = 1


class CreateSessionRequest(BaseModel):
    quiver: QuiverDoc


class MutateRequest(BaseModel):
    k: int


class ExploreLimits(BaseModel):
    max_vertices: int = Field(default=500, ge=1)
    max_depth: int = Field(default=100, ge=1)


class ExploreRequest(BaseModel):
    quiver: QuiverDoc
    limits: ExploreLimits = ExploreLimits()


class GreenSeqLimits(BaseModel):
    max_len: int = Field(default=16, ge=1)
    max_entry: int = Field(default=10**6, ge=1)


class GreenSeqRequest(BaseModel):
    quiver: QuiverDoc
    limits: GreenSeqLimits = GreenSeqLimits()


class Session:
    """Initial quiver plus mutation history; derived state is cached and
    reproducible by replay."""

    def __init__(self, sid: str, initial: ExtMatrix, history: list[int] | None = None):
        self.id = sid
        self.initial = initial  # mutable-only quiver, before framing
        self.history: list[int] = list(history or [])
        self.lock = threading.Lock()
        self._replay()

    def _within_symbolic_cap(self) -> bool:
        return (
            self.initial.n <= SYMBOLIC_CAP_N
            and len(self.history) <= SYMBOLIC_CAP_HISTORY
        )

    def _replay(self) -> None:
        state = framed(self.initial)
        c = tr.c_matrix_of(state)
        g = tr.identity(self.initial.n)
        for k in self.history:
            c = tr.mutate_c(c, state, k)
            g = tr.mutate_g(g, state, self.initial.rows, k)
            state = mutate(state, k)
        self.state = state
        self.c = c
        self.g = g
        self.seed = None
        if self._within_symbolic_cap():
            seed = initial_seed(self.initial)
            for k in self.history:
                seed = mutate_seed(seed, k)
            self.seed = seed

    def apply(self, k: int) -> None:
        c = tr.mutate_c(self.c, self.state, k)
        g = tr.mutate_g(self.g, self.state, self.initial.rows, k)
        self.state = mutate(self.state, k)
        self.c = c
        self.g = g
        self.history.append(k)
        if self.seed is not None and self._within_symbolic_cap():
            self.seed = mutate_seed(self.seed, k)
        else:
            self.seed = None

    def undo(self) -> None:
        self.history.pop()
        self._replay()

    def variables(self) -> tuple[list[str] | None, str | None]:
        if self.initial.n > SYMBOLIC_CAP_N:
            return None, f"cluster variables omitted: n > {SYMBOLIC_CAP_N}"
        if len(self.history) > SYMBOLIC_CAP_HISTORY:
            return None, f"cluster variables omitted: history longer than {SYMBOLIC_CAP_HISTORY}"
        if self.seed is None:
            return None, "cluster variables omitted: symbolic cap exceeded earlier"
        return [v.fraction_text() for v in self.seed.vars], None

    def to_state_doc(self) -> dict:
        cols = [c.value for c in colors(self.state)]
        variables, omitted = self.variables()
        doc = {
            "id": self.id,
            "quiver": fmt.quiver_to_obj(self.state),
            "colors": cols,
            "c_matrix": [list(r) for r in self.c],
            "g_matrix": [list(r) for r in self.g],
            "history": list(self.history),
            "all_green": all(c == "green" for c in cols),
            "all_red": all(c == "red" for c in cols),
        }
        if variables is not None:
            doc["variables"] = variables
        else:
            doc["variables"] = None
            doc["variables_omitted_reason"] = omitted
        return doc


def create_app(data_dir: str | None = None, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="greenseq workbench", version="1")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    table_lock = threading.Lock()
    store = Path(data_dir) if data_dir else None
    if store:
        store.mkdir(parents=True, exist_ok=True)
        for path in sorted(store.glob("session-*.json")):
            doc = json.loads(path.read_text())
            quiver = fmt.quiver_from_obj(doc["quiver"])
            s = Session(doc["id"], quiver, doc["history"])
            sessions[s.id] = s

    def persist(s: Session) -> None:
        if not store:
            return
        doc = {
            "v": 1,
            "id": s.id,
            "quiver": fmt.quiver_to_obj(s.initial),
            "history": list(s.history),
        }
        fmt.atomic_write_text(store / f"session-{s.id}.json", fmt.dumps(doc))

    def parse_quiver_doc(doc: QuiverDoc, mutable_only: bool = True) -> ExtMatrix:
        try:
            q = fmt.quiver_from_obj(doc.model_dump())
        except fmt.FormatError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        if mutable_only and q.m != 0:
            raise HTTPException(
                status_code=400, detail="expected a quiver without frozen vertices"
            )
        if q.n < 1:
            raise HTTPException(status_code=400, detail="need at least one mutable vertex")
        return q

    def get_session(sid: str) -> Session:
        with table_lock:
            s = sessions.get(sid)
        if s is None:
            raise HTTPException(status_code=404, detail=f"unknown session {sid!r}")
        return s

    @app.post("/sessions")
    def create_session(req: CreateSessionRequest):
        q = parse_quiver_doc(req.quiver)
        if q.n > HARD_CAP_N:
            raise HTTPException(status_code=422, detail=f"n exceeds the cap of {HARD_CAP_N}")
        sid = secrets.token_hex(8)
        s = Session(sid, q)
        with table_lock:
            sessions[sid] = s
        persist(s)
        return {"id": sid, "state": s.to_state_doc()}

    @app.post("/sessions/{sid}/mutate")
    def mutate_session(sid: str, req: MutateRequest):
        s = get_session(sid)
        with s.lock:
            if not (1 <= req.k <= s.initial.n):
                raise HTTPException(
                    status_code=400,
                    detail=f"vertex {req.k} out of range 1..{s.initial.n}",
                )
            s.apply(req.k)
            persist(s)
            return {"state": s.to_state_doc()}

    @app.post("/sessions/{sid}/undo")
    def undo_session(sid: str):
        s = get_session(sid)
        with s.lock:
            if not s.history:
                raise HTTPException(status_code=400, detail="nothing to undo")
            s.undo()
            persist(s)
            return {"state": s.to_state_doc()}

    @app.get("/sessions/{sid}")
    def read_session(sid: str):
        s = get_session(sid)
        with s.lock:
            return {"state": s.to_state_doc()}

    @app.post("/explore")
    def explore_endpoint(req: ExploreRequest):
        q = parse_quiver_doc(req.quiver)
        if req.limits.max_vertices > EXPLORE_CAP_VERTICES:
            raise HTTPException(
                status_code=422,
                detail=f"max_vertices exceeds the service cap of {EXPLORE_CAP_VERTICES}",
            )
        g = ex.explore(q, req.limits.max_vertices, req.limits.max_depth)
        return fmt.graph_to_obj(g)

    @app.post("/green-seqs")
    def green_seqs_endpoint(req: GreenSeqRequest):
        q = parse_quiver_doc(req.quiver)
        if req.limits.max_len > GREENSEQ_CAP_LEN:
            raise HTTPException(
                status_code=422,
                detail=f"max_len exceeds the service cap of {GREENSEQ_CAP_LEN}",
            )
        report = ex.maximal_green_sequences(q, req.limits.max_len, req.limits.max_entry)
        return fmt.report_to_obj(report)

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="workbench")

    return app
