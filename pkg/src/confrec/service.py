"""JSON-over-HTTP recommendation service.

The whole engine state lives in one immutable snapshot: a validated
conference instance, its precomputed recommendation set, and a
monotonically increasing version. Reads grab the current snapshot
reference and never see a torn mix of versions. Writes are serialized
behind a lock: validate, recompute, swap. A write may declare the version
it was based on; if the state moved on in the meantime the write is
rejected with 409 instead of silently clobbering.

Threshold query parameters on the recommendations endpoint recompute
against the snapshot without touching shared state, which is what powers
what-if exploration in clients.
"""

from __future__ import annotations

import logging
import threading
import time
from dataclasses import dataclass, replace
from typing import Callable

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from confrec import dataio
from confrec.engine import (
    BOTH_CHANNELS,
    Channel,
    RecommendationSet,
    rec_to_dict,
    recommend,
    recommend_for,
)
from confrec.model import (
    AvailabilityContext,
    AvailabilitySlot,
    ConferenceInstance,
    Contact,
    ContactLog,
    RatingMatrix,
    Thresholds,
    TimeSlot,
    normalize_location,
    normalize_tag,
    validate,
)
from confrec.social import degree_centrality

logger = logging.getLogger("confrec.service")


@dataclass(frozen=True)
class Snapshot:
    version: int
    instance: ConferenceInstance
    recommendations: RecommendationSet


class EngineState:
    """Atomically swapped snapshot holder with serialized writes."""

    def __init__(self, initial: ConferenceInstance, save_path: str | None = None):
        violations = validate(initial)
        if violations:
            raise ValueError("initial instance is invalid: " + "; ".join(violations))
        self._lock = threading.Lock()
        self._save_path = save_path
        self._snapshot = Snapshot(
            version=1, instance=initial, recommendations=recommend(initial)
        )

    @property
    def snapshot(self) -> Snapshot:
        return self._snapshot

    def apply(
        self,
        mutate: Callable[[ConferenceInstance], ConferenceInstance],
        declared_version: int | None,
    ) -> Snapshot:
        """Serialized write: version check, validate, recompute, swap."""
        with self._lock:
            current = self._snapshot
            if declared_version is not None and declared_version != current.version:
                raise HTTPException(
                    status_code=409,
                    detail=f"stale version: declared {declared_version}, current {current.version}",
                )
            candidate = mutate(current.instance)
            violations = validate(candidate)
            if violations:
                raise HTTPException(status_code=422, detail=violations)
            snapshot = Snapshot(
                version=current.version + 1,
                instance=candidate,
                recommendations=recommend(candidate),
            )
            self._snapshot = snapshot
            if self._save_path:
                dataio.save(candidate, self._save_path)
            return snapshot


class RatingsPayload(BaseModel):
    version: int | None = None
    ratings: dict[str, int]


class SlotPayload(BaseModel):
    location: str
    start: int
    end: int


class AvailabilityPayload(BaseModel):
    version: int | None = None
    slots: list[SlotPayload] = Field(default_factory=list)


class ContactPayload(BaseModel):
    other: str
    frequency: int
    duration: int


class ContactsPayload(BaseModel):
    version: int | None = None
    contacts: list[ContactPayload] = Field(default_factory=list)


def _threshold_overrides(
    base: Thresholds,
    gamma: float | None,
    beta: float | None,
    delta: float | None,
    top_n: int | None,
) -> tuple[Thresholds, bool]:
    problems = []
    if gamma is not None and not -1.0 <= gamma <= 1.0:
        problems.append(f"gamma {gamma} outside [-1, 1]")
    if beta is not None and beta < 0:
        problems.append(f"beta {beta} must be >= 0")
    if delta is not None and delta < 0:
        problems.append(f"delta {delta} must be >= 0")
    if top_n is not None and top_n < 1:
        problems.append(f"top_n {top_n} must be >= 1")
    if problems:
        raise HTTPException(status_code=422, detail=problems)
    changes = {}
    if gamma is not None:
        changes["gamma"] = gamma
    if beta is not None:
        changes["beta"] = beta
    if delta is not None:
        changes["delta"] = delta
    if top_n is not None:
        changes["top_n"] = top_n
    if not changes:
        return base, False
    return replace(base, **changes), True


def _session_dict(session) -> dict:
    return {
        "session_id": session.session_id,
        "presenter": session.presenter,
        "location": session.location,
        "start": session.slot.start,
        "end": session.slot.end,
        "tags": sorted(session.topic_tags),
    }


def create_app(initial: ConferenceInstance, save_path: str | None = None) -> FastAPI:
    state = EngineState(initial, save_path=save_path)
    app = FastAPI(title="confrec", version="1")
    app.state.engine = state
    # the explorer UI is a static page on an arbitrary origin
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.middleware("http")
    async def request_log(request: Request, call_next):
        started = time.monotonic()
        response = await call_next(request)
        elapsed_ms = (time.monotonic() - started) * 1000
        logger.info(
            "method=%s path=%s status=%d duration_ms=%.1f version=%d",
            request.method,
            request.url.path,
            response.status_code,
            elapsed_ms,
            state.snapshot.version,
        )
        return response

    @app.get("/participants")
    def participants():
        snap = state.snapshot
        return {
            "version": snap.version,
            "participants": [
                {"id": pid, "is_presenter": pid in snap.instance.presenters}
                for pid in sorted(snap.instance.roster)
            ],
        }

    @app.get("/sessions")
    def sessions():
        snap = state.snapshot
        return {
            "version": snap.version,
            "sessions": [_session_dict(s) for s in snap.instance.sessions],
        }

    @app.get("/participants/{pid}/recommendations")
    def recommendations(
        pid: str,
        channel: str | None = Query(default=None),
        gamma: float | None = Query(default=None),
        beta: float | None = Query(default=None),
        delta: float | None = Query(default=None),
        top_n: int | None = Query(default=None),
    ):
        snap = state.snapshot
        instance = snap.instance
        if pid not in instance.roster:
            raise HTTPException(status_code=404, detail=f"unknown participant {pid!r}")
        wanted = BOTH_CHANNELS
        if channel is not None:
            try:
                wanted = (Channel(channel),)
            except ValueError:
                raise HTTPException(
                    status_code=422,
                    detail=[f"unknown channel {channel!r}"],
                ) from None
        thresholds, overridden = _threshold_overrides(
            instance.thresholds, gamma, beta, delta, top_n
        )
        if overridden:
            lists = recommend_for(
                replace(instance, thresholds=thresholds), pid, channels=wanted
            )
        else:
            lists = state.snapshot.recommendations.lists_for(pid)
        return {
            "version": snap.version,
            "participant": pid,
            "thresholds": {
                "gamma": thresholds.gamma,
                "beta": thresholds.beta,
                "delta": thresholds.delta,
                "frame_t": thresholds.frame_t,
                "top_n": thresholds.top_n,
            },
            "channels": {
                ch.value: [rec_to_dict(r) for r in lists.get(ch, ())]
                for ch in wanted
            },
        }

    @app.get("/presenters/{pid}/centrality")
    def centrality(pid: str):
        snap = state.snapshot
        if pid not in snap.instance.presenters:
            raise HTTPException(status_code=404, detail=f"unknown presenter {pid!r}")
        result = degree_centrality(snap.instance, pid)
        return {
            "version": snap.version,
            "presenter": pid,
            "raw": result.raw,
            "normalized": result.normalized,
        }

    def _require_known(pid: str, instance: ConferenceInstance) -> None:
        if pid not in instance.roster:
            raise HTTPException(status_code=404, detail=f"unknown participant {pid!r}")

    @app.put("/participants/{pid}/ratings")
    def put_ratings(pid: str, payload: RatingsPayload):
        _require_known(pid, state.snapshot.instance)

        def mutate(instance: ConferenceInstance) -> ConferenceInstance:
            entries = {
                key: value
                for key, value in instance.ratings.entries.items()
                if key[0] != pid
            }
            for tag, rating in payload.ratings.items():
                entries[(pid, normalize_tag(tag))] = rating
            return replace(instance, ratings=RatingMatrix(entries))

        snap = state.apply(mutate, payload.version)
        return {"version": snap.version}

    @app.put("/participants/{pid}/availability")
    def put_availability(pid: str, payload: AvailabilityPayload):
        _require_known(pid, state.snapshot.instance)

        def mutate(instance: ConferenceInstance) -> ConferenceInstance:
            slots = tuple(
                AvailabilitySlot(
                    location=normalize_location(s.location),
                    slot=TimeSlot(s.start, s.end),
                )
                for s in payload.slots
            )
            availabilities = dict(instance.availabilities)
            availabilities[pid] = AvailabilityContext(owner=pid, slots=slots)
            return replace(instance, availabilities=availabilities)

        snap = state.apply(mutate, payload.version)
        return {"version": snap.version}

    @app.put("/participants/{pid}/contacts")
    def put_contacts(pid: str, payload: ContactsPayload):
        _require_known(pid, state.snapshot.instance)

        def mutate(instance: ConferenceInstance) -> ConferenceInstance:
            entries = {
                pair: contact
                for pair, contact in instance.contacts.entries.items()
                if pid not in pair
            }
            for record in payload.contacts:
                entries[(pid, record.other)] = Contact(
                    frequency=record.frequency, duration=record.duration
                )
            return replace(instance, contacts=ContactLog(entries))

        snap = state.apply(mutate, payload.version)
        return {"version": snap.version}

    return app
