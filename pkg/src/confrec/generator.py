"""Seeded synthetic conference generator.

Produces self-consistent instances whose contact statistics are calibrated
to a real mid-size smart conference: 78 participants, per-pair meeting
counts up to 7 and meeting minutes up to 80 inside a 720-minute frame
(so no pairwise tie strength can exceed 7*80/720 = 0.777...).

Only the caps are calibrated; within them every draw is uniform, the
least-assumption choice. All randomness flows through one
``random.Random(seed)``, so equal configs give equal instances on every
platform and Python version.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

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
    require_valid,
)

# Base tag vocabulary; configs asking for more fall back to numbered keywords.
_KEYWORDS = [
    "recommender systems", "collaborative filtering", "social networks",
    "graph mining", "community detection", "mobile computing",
    "context awareness", "ubiquitous computing", "e-learning",
    "learning analytics", "data mining", "machine learning",
    "information retrieval", "user modeling", "personalization",
    "trust and reputation", "link prediction", "social computing",
    "human-computer interaction", "pervasive systems", "sensor networks",
    "web intelligence", "semantic web", "knowledge graphs",
    "natural language processing", "text mining", "deep learning",
    "network science", "crowdsourcing", "digital libraries",
    "multimedia systems", "visualization", "privacy", "security",
    "cloud computing", "distributed systems", "edge computing",
    "internet of things", "smart environments", "wearable computing",
    "affective computing", "educational technology", "serious games",
    "open data", "scientometrics", "peer review", "scholarly communication",
    "research collaboration",
]

_SESSION_MINUTES = (30, 90)  # session length drawn uniformly in this range
_MAX_GAP_MINUTES = 30        # gap between consecutive sessions at one venue


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    n_participants: int = 78
    n_presenters: int = 12
    n_sessions: int = 16
    tag_vocabulary: int = 40
    rating_density: float = 0.25
    max_contact_duration: int = 80
    max_contact_frequency: int = 7
    frame_t: int = 720
    n_locations: int = 4
    availability_coverage: float = 0.6

    def check(self) -> None:
        if self.n_participants < 2:
            raise ValueError("need at least 2 participants")
        if not 1 <= self.n_presenters <= self.n_participants:
            raise ValueError("n_presenters must be in 1..n_participants")
        if self.n_sessions < 1:
            raise ValueError("need at least 1 session")
        if self.tag_vocabulary < 1:
            raise ValueError("need at least 1 tag")
        if not 0 < self.rating_density <= 1:
            raise ValueError("rating_density must be in (0, 1]")
        if not 0 < self.availability_coverage <= 1:
            raise ValueError("availability_coverage must be in (0, 1]")
        if self.n_locations < 1:
            raise ValueError("need at least 1 location")
        if self.frame_t <= 0:
            raise ValueError("frame_t must be positive")
        if self.max_contact_duration < 1 or self.max_contact_frequency < 1:
            raise ValueError("contact caps must be >= 1")
        # Worst case every session at one venue draws the longest length and
        # the longest gap; demand that the average venue load surely fits.
        per_location = -(-self.n_sessions // self.n_locations)  # ceil
        worst = per_location * (_SESSION_MINUTES[1] + _MAX_GAP_MINUTES)
        if worst > self.frame_t:
            raise ValueError(
                f"{self.n_sessions} sessions cannot fit {self.n_locations} "
                f"location(s) within a {self.frame_t}-minute frame"
            )


def _tag_pool(size: int) -> list[str]:
    pool = list(_KEYWORDS[:size])
    for i in range(len(pool), size):
        pool.append(f"keyword-{i + 1:03d}")
    return pool


def generate(cfg: GeneratorConfig) -> ConferenceInstance:
    """Build one instance from the config; deterministic per seed.

    Guarantees beyond the config caps:
      - every participant rates at least two tags, so an 80/20 per-user
        split is always well-defined;
      - sessions at the same venue never overlap;
      - pairs that met have duration >= 1 (a meeting takes time), pairs
        that never met are simply absent;
      - top_n is set to n_sessions so nothing is silently truncated.
    The result always passes validation.
    """
    cfg.check()
    rng = random.Random(cfg.seed)

    width = len(str(cfg.n_participants))
    roster = [f"p{i + 1:0{width}d}" for i in range(cfg.n_participants)]
    presenters = sorted(rng.sample(roster, cfg.n_presenters))
    locations = [f"hall-{chr(ord('a') + i)}" if i < 26 else f"hall-{i + 1}" for i in range(cfg.n_locations)]
    tags = _tag_pool(cfg.tag_vocabulary)

    # Sessions: round-robin over venues, sequential non-overlapping slots.
    sessions = []
    next_free = {loc: 0 for loc in locations}
    for i in range(cfg.n_sessions):
        location = locations[i % len(locations)]
        length = rng.randint(*_SESSION_MINUTES)
        start = next_free[location] + rng.randint(0, _MAX_GAP_MINUTES)
        end = start + length
        if end > cfg.frame_t:
            raise ValueError(
                f"session {i + 1} does not fit at {location} within the {cfg.frame_t}-minute frame"
            )
        next_free[location] = end
        n_topic = rng.randint(1, min(3, len(tags)))
        sessions.append(
            Session(
                session_id=f"s{i + 1:02d}",
                presenter=rng.choice(presenters),
                location=location,
                slot=TimeSlot(start, end),
                topic_tags=frozenset(rng.sample(tags, n_topic)),
            )
        )

    # Ratings: uniform 1..5 at the configured density, topped up to two
    # rated tags per participant.
    rating_entries = {}
    for pid in roster:
        chosen = [t for t in tags if rng.random() < cfg.rating_density]
        while len(chosen) < 2:
            extra = rng.choice(tags)
            if extra not in chosen:
                chosen.append(extra)
        for tag in chosen:
            rating_entries[(pid, tag)] = rng.randint(1, 5)

    # Contacts: frequency uniform over 0..max; met pairs get >= 1 minute.
    contact_entries = {}
    for i, a in enumerate(roster):
        for b in roster[i + 1:]:
            frequency = rng.randint(0, cfg.max_contact_frequency)
            if frequency == 0:
                continue
            duration = rng.randint(1, cfg.max_contact_duration)
            contact_entries[(a, b)] = Contact(frequency=frequency, duration=duration)

    # Availability: per participant x venue, a window biased to cover the
    # middle of the day, present with probability availability_coverage.
    availabilities = {}
    for pid in roster:
        slots = []
        for location in locations:
            if rng.random() >= cfg.availability_coverage:
                continue
            start = rng.randint(0, cfg.frame_t // 4)
            end = rng.randint(cfg.frame_t - cfg.frame_t // 4, cfg.frame_t)
            slots.append(AvailabilitySlot(location=location, slot=TimeSlot(start, end)))
        availabilities[pid] = AvailabilityContext(owner=pid, slots=tuple(slots))

    conf = ConferenceInstance(
        roster=frozenset(roster),
        presenters=frozenset(presenters),
        sessions=tuple(sessions),
        ratings=RatingMatrix(rating_entries),
        contacts=ContactLog(contact_entries),
        availabilities=availabilities,
        thresholds=Thresholds(frame_t=cfg.frame_t, top_n=cfg.n_sessions),
    )
    require_valid(conf)
    return conf
