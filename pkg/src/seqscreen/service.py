"""HTTP JSON API over the screening calculator, with live testing sessions.

Stateless endpoints are 1:1 wrappers over the library: the response value
is the direct call's value, serialized as a full-precision JSON double.
Sessions hold a prior, a test profile, an ordered result list, and the
posterior trajectory (one Bayes update per result); they live in memory
with TTL eviction and can optionally be journaled to an append-only JSONL
file for restart persistence.

Error mapping: malformed bodies are 400, typed domain errors are 422 with
``{"error": <type name>, "message": ...}``, unknown sessions are 404.
The OpenAPI description document is served at /api/spec.
"""

from __future__ import annotations

import json
import math
import os
import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .core import (
    IterationPlan,
    PlanStatus,
    Prior,
    TestProfile,
    TestResult,
    epsilon,
    iterations_from_log_lr,
    iterations_needed,
    npv,
    npv_curve,
    positive_likelihood_ratio,
    posterior_update,
    ppv,
    ppv_curve,
    prevalence_threshold,
    sequential_ppv,
)
from .errors import InfeasibleTarget, ScreeningError
from .tables import ReferenceTableSpec, generate_reference_table, paper_spec

__all__ = ["ServiceConfig", "load_config", "create_app", "SessionStore"]


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ServiceConfig:
    port: int = 8000
    cors_origin: str = "*"
    session_ttl_seconds: float = 86400.0
    journal_path: str | None = None
    static_dir: str | None = None


_ENV_KEYS = {
    "SEQSCREEN_PORT": ("port", int),
    "SEQSCREEN_CORS_ORIGIN": ("cors_origin", str),
    "SEQSCREEN_SESSION_TTL": ("session_ttl_seconds", float),
    "SEQSCREEN_JOURNAL": ("journal_path", str),
    "SEQSCREEN_STATIC": ("static_dir", str),
}


def load_config(path: str | None = None) -> ServiceConfig:
    """Config file values first, then environment overrides."""
    values: dict = {}
    if path:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        for key in ("port", "cors_origin", "session_ttl_seconds", "journal_path", "static_dir"):
            if key in raw:
                values[key] = raw[key]
    for env, (key, cast) in _ENV_KEYS.items():
        if env in os.environ:
            values[key] = cast(os.environ[env])
    return ServiceConfig(**values)


# ---------------------------------------------------------------------------
# session store
# ---------------------------------------------------------------------------


@dataclass
class Session:
    id: str
    test: TestProfile
    initial_prior: Prior
    target_rho: float | None
    created_at: float
    results: list[TestResult] = field(default_factory=list)
    trajectory: list[float] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    last_access: float = 0.0

    def __post_init__(self) -> None:
        if not self.trajectory:
            self.trajectory = [self.initial_prior.phi]
        self.last_access = self.created_at


class UnknownSession(KeyError):
    pass


class NothingToUndo(ScreeningError):
    """Undo requested on a session with no recorded results."""


class SessionStore:
    """In-memory session map; per-session mutation locks, TTL eviction.

    When a journal path is set, every mutation appends one JSONL event and
    the constructor replays the file, so restarts preserve live sessions.
    """

    def __init__(self, ttl_seconds: float = 86400.0, journal_path: str | None = None):
        self._ttl = ttl_seconds
        self._journal_path = journal_path
        self._sessions: dict[str, Session] = {}
        self._dict_lock = threading.Lock()
        if journal_path and os.path.exists(journal_path):
            self._replay()

    # -- journaling --------------------------------------------------------

    def _append_event(self, event: dict) -> None:
        if not self._journal_path:
            return
        with open(self._journal_path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event) + "\n")

    def _replay(self) -> None:
        with open(self._journal_path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    event = json.loads(line)
                except json.JSONDecodeError:
                    # a crash mid-append leaves a truncated tail; skip it
                    continue
                kind = event.get("kind")
                if kind == "create":
                    session = Session(
                        id=event["id"],
                        test=TestProfile(event["sens"], event["spec"]),
                        initial_prior=Prior(event["prev"]),
                        target_rho=event["target"],
                        created_at=event["created_at"],
                    )
                    self._sessions[session.id] = session
                elif kind == "result":
                    session = self._sessions.get(event["id"])
                    if session is not None:
                        self._apply_result(session, TestResult(event["result"]))
                elif kind == "undo":
                    session = self._sessions.get(event["id"])
                    if session is not None and session.results:
                        self._apply_undo(session)

    # -- lifecycle ---------------------------------------------------------

    def _evict_expired(self) -> None:
        now = time.time()
        with self._dict_lock:
            dead = [sid for sid, s in self._sessions.items() if now - s.last_access > self._ttl]
            for sid in dead:
                del self._sessions[sid]

    def create(self, test: TestProfile, prior: Prior, target_rho: float | None) -> Session:
        self._evict_expired()
        session = Session(
            id=secrets.token_urlsafe(16),  # 128-bit, URL-safe
            test=test,
            initial_prior=prior,
            target_rho=target_rho,
            created_at=time.time(),
        )
        with self._dict_lock:
            self._sessions[session.id] = session
        self._append_event(
            {
                "kind": "create",
                "id": session.id,
                "sens": test.sensitivity,
                "spec": test.specificity,
                "prev": prior.phi,
                "target": target_rho,
                "created_at": session.created_at,
            }
        )
        return session

    def get(self, session_id: str) -> Session:
        self._evict_expired()
        with self._dict_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(session_id)
        session.last_access = time.time()
        return session

    # -- mutations ---------------------------------------------------------

    @staticmethod
    def _apply_result(session: Session, result: TestResult) -> None:
        current = Prior(session.trajectory[-1])
        session.trajectory.append(posterior_update(current, session.test, result).phi)
        session.results.append(result)

    @staticmethod
    def _apply_undo(session: Session) -> None:
        session.results.pop()
        session.trajectory.pop()

    def append_result(self, session_id: str, result: TestResult) -> Session:
        session = self.get(session_id)
        with session.lock:
            self._apply_result(session, result)
        self._append_event({"kind": "result", "id": session_id, "result": result.value})
        return session

    def undo_result(self, session_id: str) -> Session:
        session = self.get(session_id)
        with session.lock:
            if not session.results:
                raise NothingToUndo(f"session {session_id} has no results to undo")
            self._apply_undo(session)
        self._append_event({"kind": "undo", "id": session_id})
        return session


# ---------------------------------------------------------------------------
# request bodies
# ---------------------------------------------------------------------------


class TestBody(BaseModel):
    sens: float
    spec: float


class PredictiveBody(TestBody):
    prev: float


class IterationsBody(BaseModel):
    prev: float
    target: float
    sens: float | None = None
    spec: float | None = None
    log_lr: float | None = None


class SequentialBody(PredictiveBody):
    n: int


class CurveBody(TestBody):
    kind: str = "ppv"
    points: int = 200


class TableBody(BaseModel):
    target: float
    log_lr_values: list[float] | None = None
    phi_values: list[float] | None = None


class SessionCreateBody(PredictiveBody):
    target: float | None = None


class ResultBody(BaseModel):
    result: str


# ---------------------------------------------------------------------------
# app factory
# ---------------------------------------------------------------------------


def _plan_dict(plan: IterationPlan) -> dict:
    return {"status": plan.status.value, "raw_n": plan.raw_n, "n_i": plan.n_i}


def _remaining(session: Session) -> dict | None:
    """Iterations still needed from the current posterior, if a target is set.

    An InfeasibleTarget raised mid-session (e.g. the posterior collapsed to
    zero) is folded into a plan-shaped rendering rather than failing the
    request that produced the posterior.
    """
    if session.target_rho is None:
        return None
    try:
        plan = iterations_needed(
            session.test, Prior(session.trajectory[-1]), session.target_rho
        )
    except InfeasibleTarget:
        plan = IterationPlan(session.target_rho, PlanStatus.INFEASIBLE_TARGET)
    return _plan_dict(plan)


def _session_view(session: Session) -> dict:
    return {
        "id": session.id,
        "test": {"sens": session.test.sensitivity, "spec": session.test.specificity},
        "initial_prior": session.initial_prior.phi,
        "target": session.target_rho,
        "results": [r.value for r in session.results],
        "trajectory": list(session.trajectory),
        "posterior": session.trajectory[-1],
        "created_at": session.created_at,
        "remaining": _remaining(session),
    }


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(
        title="seqscreen service",
        version="0.1.0",
        openapi_url="/api/spec",
        docs_url=None,
        redoc_url=None,
    )
    store = SessionStore(config.session_ttl_seconds, config.journal_path)
    app.state.store = store
    app.state.config = config

    if config.cors_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[config.cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "MalformedRequest", "message": str(exc.errors())},
        )

    @app.exception_handler(ScreeningError)
    async def domain_error(request: Request, exc: ScreeningError):
        return JSONResponse(
            status_code=422,
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.exception_handler(UnknownSession)
    async def unknown_session(request: Request, exc: UnknownSession):
        return JSONResponse(
            status_code=404,
            content={"error": "UnknownSession", "message": f"no session {exc.args[0]!r}"},
        )

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=422, content={"error": "ValueError", "message": str(exc)}
        )

    # -- stateless computations ---------------------------------------------

    @app.post("/api/ppv")
    def api_ppv(body: PredictiveBody):
        value = ppv(TestProfile(body.sens, body.spec), Prior(body.prev))
        return {"sens": body.sens, "spec": body.spec, "prev": body.prev, "value": value.value, "kind": value.kind}

    @app.post("/api/npv")
    def api_npv(body: PredictiveBody):
        value = npv(TestProfile(body.sens, body.spec), Prior(body.prev))
        return {"sens": body.sens, "spec": body.spec, "prev": body.prev, "value": value.value, "kind": value.kind}

    @app.post("/api/threshold")
    def api_threshold(body: TestBody):
        test = TestProfile(body.sens, body.spec)
        return {
            "sens": body.sens,
            "spec": body.spec,
            "phi_e": prevalence_threshold(test),
            "epsilon": epsilon(test),
        }

    @app.post("/api/iterations")
    def api_iterations(body: IterationsBody):
        if body.log_lr is not None:
            plan = iterations_from_log_lr(body.log_lr, body.prev, body.target)
            log_lr = body.log_lr
        elif body.sens is not None and body.spec is not None:
            test = TestProfile(body.sens, body.spec)
            plan = iterations_needed(test, Prior(body.prev), body.target)
            lr = positive_likelihood_ratio(test)
            log_lr = math.log(lr) if lr > 0 else None
        else:
            return JSONResponse(
                status_code=400,
                content={
                    "error": "MalformedRequest",
                    "message": "provide either log_lr or both sens and spec",
                },
            )
        out = {"prev": body.prev, "target": body.target, "log_lr": log_lr}
        out.update(_plan_dict(plan))
        return out

    @app.post("/api/sequential-ppv")
    def api_sequential_ppv(body: SequentialBody):
        value = sequential_ppv(TestProfile(body.sens, body.spec), Prior(body.prev), body.n)
        return {
            "sens": body.sens,
            "spec": body.spec,
            "prev": body.prev,
            "n": body.n,
            "value": value.value,
        }

    @app.post("/api/curve")
    def api_curve(body: CurveBody):
        if body.kind not in ("ppv", "npv"):
            raise ValueError(f"kind must be 'ppv' or 'npv', got {body.kind!r}")
        if body.points < 2:
            raise ValueError("points must be at least 2")
        test = TestProfile(body.sens, body.spec)
        grid = [i / (body.points - 1) for i in range(body.points)]
        fn = ppv_curve if body.kind == "ppv" else npv_curve
        return {"kind": body.kind, "points": fn(test, grid)}

    @app.post("/api/table")
    def api_table(body: TableBody):
        if body.log_lr_values is None and body.phi_values is None:
            spec = paper_spec(body.target)
        else:
            spec = ReferenceTableSpec(
                body.target,
                tuple(body.log_lr_values or []),
                tuple(body.phi_values or []),
            )
        table = generate_reference_table(spec)
        return {
            "target_rho": spec.target_rho,
            "log_lr_values": list(spec.log_lr_values),
            "phi_values": list(spec.phi_values),
            "cells": [list(row) for row in table.cells],
            "cells_ceiled": [list(row) for row in table.ceiled_cells],
            # two-decimal strings so clients can show table text without
            # doing their own rounding
            "cells_display": [[format(v, ".2f") for v in row] for row in table.cells],
        }

    # -- sessions -----------------------------------------------------------

    @app.post("/api/session")
    def api_session_create(body: SessionCreateBody):
        test = TestProfile(body.sens, body.spec)
        prior = Prior(body.prev)
        if body.target is not None:
            # surface an unreachable target at creation time, not mid-session
            iterations_needed(test, prior, body.target)
        session = store.create(test, prior, body.target)
        return _session_view(session)

    @app.get("/api/session/{session_id}")
    def api_session_get(session_id: str):
        return _session_view(store.get(session_id))

    @app.post("/api/session/{session_id}/result")
    def api_session_result(session_id: str, body: ResultBody):
        try:
            result = TestResult.parse(body.result)
        except ValueError as err:
            return JSONResponse(
                status_code=400,
                content={"error": "MalformedRequest", "message": str(err)},
            )
        return _session_view(store.append_result(session_id, result))

    @app.delete("/api/session/{session_id}/result")
    def api_session_undo(session_id: str):
        return _session_view(store.undo_result(session_id))

    # -- static UI ----------------------------------------------------------

    if config.static_dir and os.path.isdir(config.static_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app
