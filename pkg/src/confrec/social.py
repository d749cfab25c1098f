"""Social-graph signals: pairwise tie strength and presenter degree centrality.

Tie strength for a pair is (meeting count x total minutes together) / frame,
a unitless intensity that grows with both how often and how long two people
met, relative to the conference's duration. It is deliberately uncapped:
its observed ceiling is a property of the data, not of the formula.

Degree centrality counts a presenter's distinct contacts. Any recorded
meeting (frequency >= 1) constitutes a link -- linkage is *not* gated on
tie strength, so the tie gate and the centrality gate stay independent
signals. The normalized form divides by roster size minus one, making the
delta threshold comparable across conferences of different sizes; the raw
count is kept for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass

from confrec.model import ConferenceInstance, ContactLog, ParticipantId, Thresholds


@dataclass(frozen=True)
class DegreeCentrality:
    raw: int
    normalized: float


def tie_strength(
    contacts: ContactLog, a: ParticipantId, b: ParticipantId, frame_t: int
) -> float:
    """(frequency x duration) / frame_t for the pair; 0.0 with no contact."""
    if a == b:
        raise ValueError(f"tie strength of a participant with itself is undefined: {a!r}")
    if frame_t <= 0:
        raise ValueError(f"frame_t must be positive, got {frame_t}")
    contact = contacts.get(a, b)
    return (contact.frequency * contact.duration) / frame_t


def passes_beta(value: float, thresholds: Thresholds) -> bool:
    """Tie-strength gate: >= beta."""
    return value >= thresholds.beta


def degree_centrality(conf: ConferenceInstance, p: ParticipantId) -> DegreeCentrality:
    """Distinct roster members with a recorded contact to p, raw and
    normalized by (roster size - 1). Self-links cannot occur."""
    if p not in conf.roster:
        raise ValueError(f"participant {p!r} is not in the roster")
    n = len(conf.roster)
    if n < 2:
        raise ValueError("degree centrality needs a roster of at least 2")
    raw = len(conf.contacts.partners_of(p) & (conf.roster - {p}))
    return DegreeCentrality(raw=raw, normalized=raw / (n - 1))


def passes_delta(centrality: DegreeCentrality, thresholds: Thresholds) -> bool:
    """Centrality gate on the normalized value: >= delta."""
    return centrality.normalized >= thresholds.delta
