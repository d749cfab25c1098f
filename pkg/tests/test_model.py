"""Core model: normalization, contact log semantics, validation."""

from __future__ import annotations

from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from confrec.model import (
    Contact,
    ContactLog,
    Thresholds,
    TimeSlot,
    normalize_location,
    normalize_tag,
    validate,
)
from tests.conftest import build_conf, make_session


@given(st.text(max_size=40))
def test_tag_normalization_idempotent(raw):
    once = normalize_tag(raw)
    assert normalize_tag(once) == once


def test_tag_normalization_examples():
    assert normalize_tag("  Machine   Learning ") == "machine learning"
    assert normalize_tag("graphs") == "graphs"
    assert normalize_location(" Hall  A ") == "hall a"


def test_timeslot_contains():
    day = TimeSlot(0, 720)
    assert day.contains(TimeSlot(60, 90))
    assert day.contains(TimeSlot(0, 720))
    assert not TimeSlot(70, 720).contains(TimeSlot(60, 90))
    assert not TimeSlot(0, 85).contains(TimeSlot(60, 90))


def test_contact_log_symmetric_lookup():
    log = ContactLog({("b", "a"): Contact(3, 40)})
    assert log.get("a", "b") == log.get("b", "a") == Contact(3, 40)
    assert log.get("a", "c") == Contact(0, 0)


@given(
    st.lists(
        st.tuples(
            st.sampled_from("abcdef"),
            st.sampled_from("abcdef"),
            st.integers(0, 9),
            st.integers(0, 99),
        ),
        max_size=12,
    ),
    st.sampled_from("abcdef"),
    st.sampled_from("abcdef"),
)
def test_contact_log_symmetry_property(records, x, y):
    entries = {}
    for a, b, freq, dur in records:
        if a == b:
            continue
        if freq == 0:
            dur = 0
        elif dur == 0:
            dur = 1
        entries[(a, b)] = Contact(freq, dur)
    log = ContactLog(entries)
    assert log.get(x, y) == log.get(y, x)


def test_contact_log_drops_explicit_zero_entries():
    log = ContactLog({("a", "b"): Contact(0, 0), ("a", "c"): Contact(1, 5)})
    assert ("a", "b") not in log.entries
    assert log.get("a", "b") == Contact(0, 0)


def test_availabilities_totalized_over_roster(tiny_conf):
    # p1 was given no slots; it still has an (empty) context.
    assert tiny_conf.availabilities["p1"].slots == ()
    assert tiny_conf.availabilities["p1"].owner == "p1"


def test_validate_well_formed(tiny_conf):
    assert validate(tiny_conf) == []


def test_validate_rating_out_of_range(tiny_conf):
    bad = replace(
        tiny_conf,
        ratings=type(tiny_conf.ratings)({**tiny_conf.ratings.entries, ("p2", "ml"): 6}),
    )
    violations = validate(bad)
    assert len(violations) == 1
    assert "rating out of range" in violations[0]
    assert "'p2'" in violations[0]


def test_validate_presenter_not_in_roster():
    conf = build_conf(
        roster={"p1", "p2"},
        presenters={"p1"},
        sessions=[make_session("s1", "ghost")],
        ratings={("p1", "a"): 1, ("p2", "a"): 2},
    )
    violations = validate(conf)
    assert len(violations) == 1
    assert "ghost" in violations[0]


def test_validate_is_total_on_garbage():
    conf = build_conf(
        roster={"p1", ""},
        presenters={"p1", "intruder"},
        sessions=[
            make_session("s1", "p1", location="Hall A", start=90, end=60, tags={" Bad Tag "}),
            make_session("s1", "p1"),  # duplicate id
        ],
        ratings={("p1", "ok"): 9, ("nobody", "UPPER"): 0},
        contacts={("p1", "p1"): (0, 50), ("p1", "stranger"): (2, 10)},
        availabilities={"p1": [("hall-a", -5, 10_000)]},
        thresholds=Thresholds(gamma=2.0, beta=-1, delta=-0.5, frame_t=0, top_n=0),
    )
    violations = validate(conf)
    # One list entry per violation, nothing raised.
    assert len(violations) >= 10
    assert all(isinstance(v, str) and v for v in violations)


def test_validate_contact_zero_consistency(tiny_conf):
    bad = replace(
        tiny_conf,
        contacts=ContactLog({("p1", "p2"): Contact(0, 70)}),
    )
    violations = validate(bad)
    assert len(violations) == 1
    assert "zero together" in violations[0]
