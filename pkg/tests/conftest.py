"""Shared builders for hand-made conference instances."""

from __future__ import annotations

import pytest

from confrec.model import (
    AvailabilityContext,
    AvailabilitySlot,
    ConferenceInstance,
    Contact,
    ContactLog,
    RatingMatrix,
    Session,
    Thresholds,
    TimeSlot,
)


def build_conf(
    *,
    roster,
    presenters,
    sessions=(),
    ratings=None,
    contacts=None,
    availabilities=None,
    thresholds=None,
) -> ConferenceInstance:
    """Assemble an instance from plain literals.

    ratings: {(pid, tag): int}; contacts: {(a, b): (frequency, duration)};
    availabilities: {pid: [(location, start, end)]}.
    """
    contact_entries = {
        pair: Contact(frequency=freq, duration=dur)
        for pair, (freq, dur) in (contacts or {}).items()
    }
    avail = {
        pid: AvailabilityContext(
            owner=pid,
            slots=tuple(
                AvailabilitySlot(location=loc, slot=TimeSlot(start, end))
                for loc, start, end in slots
            ),
        )
        for pid, slots in (availabilities or {}).items()
    }
    return ConferenceInstance(
        roster=frozenset(roster),
        presenters=frozenset(presenters),
        sessions=tuple(sessions),
        ratings=RatingMatrix(ratings or {}),
        contacts=ContactLog(contact_entries),
        availabilities=avail,
        thresholds=thresholds or Thresholds(),
    )


def make_session(session_id, presenter, location="hall-a", start=60, end=90, tags=()):
    return Session(
        session_id=session_id,
        presenter=presenter,
        location=location,
        slot=TimeSlot(start, end),
        topic_tags=frozenset(tags),
    )


@pytest.fixture
def tiny_conf() -> ConferenceInstance:
    """Three participants, one presenter, one session; everything matching."""
    return build_conf(
        roster={"p1", "p2", "p3"},
        presenters={"p1"},
        sessions=[make_session("s1", "p1", tags={"graphs"})],
        ratings={
            ("p1", "graphs"): 5,
            ("p1", "ml"): 3,
            ("p2", "graphs"): 5,
            ("p2", "ml"): 3,
            ("p3", "graphs"): 1,
            ("p3", "ml"): 2,
        },
        contacts={("p1", "p2"): (6, 70)},
        availabilities={
            "p2": [("hall-a", 0, 720)],
            "p3": [("hall-a", 0, 720)],
        },
    )
