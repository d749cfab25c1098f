"""Dual-channel session recommendation with availability post-filtering.

For every (participant, session) pair where the participant is not the
presenter, two independent gates are evaluated:

  social-context    rating-pattern similarity with the presenter >= gamma
  social-relations  tie strength with the presenter >= beta, OR the
                    presenter's normalized degree centrality >= delta

A pair that passes a gate still has to survive the context post-filter:
the session's venue must appear in the participant's availability with a
time window fully containing the session slot. One pair can yield
recommendations on both channels; deleting all contacts never changes the
social-context output and deleting all ratings never changes the
social-relations output.

The whole computation for one participant depends only on that
participant's data plus presenter/public data, so :func:`recommend` is
literally the union of :func:`recommend_for` over the roster -- each
participant's node could run its own detection independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Collection, Mapping

from confrec.model import (
    AvailabilityContext,
    AvailabilitySlot,
    ConferenceInstance,
    ParticipantId,
    Session,
    require_valid,
)
from confrec.similarity import passes_gamma, pearson
from confrec.social import DegreeCentrality, degree_centrality, passes_beta, passes_delta, tie_strength


class Channel(Enum):
    SOCIAL_CONTEXT = "social-context"
    SOCIAL_RELATIONS = "social-relations"


BOTH_CHANNELS = (Channel.SOCIAL_CONTEXT, Channel.SOCIAL_RELATIONS)


class RelationKind(Enum):
    """Relationship facets a recommendation is grounded in."""

    SOCIAL_NETWORK = "social-network"  # participant-presenter tie / popularity
    COMMENT = "comment"                # the session's venue+time annotation that matched
    ITEM_CONTENT = "item-content"      # the session's topic tags as content features
    TAG_POST = "tag-post"              # the participant's own tag ratings


@dataclass(frozen=True)
class GateValues:
    """The gate readings that admitted a recommendation; None = not admitted
    through that gate."""

    pearson: float | None = None
    tie_strength: float | None = None
    degree_centrality: float | None = None


@dataclass(frozen=True)
class Explanation:
    relation_kinds: frozenset[RelationKind]
    gate_values: GateValues
    matched_slot: AvailabilitySlot


@dataclass(frozen=True)
class Recommendation:
    participant: ParticipantId
    session: Session
    channel: Channel
    score: float
    explanation: Explanation


@dataclass(frozen=True)
class RecommendationSet:
    """Per-participant, per-channel top-N lists.

    Lists are sorted by score descending, ties by session id ascending,
    and truncated to thresholds.top_n.
    """

    by_participant: Mapping[ParticipantId, Mapping[Channel, tuple[Recommendation, ...]]]

    def lists_for(self, pid: ParticipantId) -> Mapping[Channel, tuple[Recommendation, ...]]:
        return self.by_participant.get(pid, {ch: () for ch in BOTH_CHANNELS})

    def channel_pairs(self, channel: Channel) -> set[tuple[ParticipantId, str]]:
        """All retrieved (participant, session_id) pairs on one channel."""
        out = set()
        for pid, channels in self.by_participant.items():
            for rec in channels.get(channel, ()):
                out.add((pid, rec.session.session_id))
        return out

    def to_dict(self) -> dict:
        """Deterministic plain-data form (participants and lists in order)."""
        return {
            pid: {
                ch.value: [rec_to_dict(r) for r in channels[ch]]
                for ch in BOTH_CHANNELS
            }
            for pid, channels in sorted(self.by_participant.items())
        }


def rec_to_dict(rec: Recommendation) -> dict:
    return {
        "session_id": rec.session.session_id,
        "presenter": rec.session.presenter,
        "location": rec.session.location,
        "start": rec.session.slot.start,
        "end": rec.session.slot.end,
        "tags": sorted(rec.session.topic_tags),
        "channel": rec.channel.value,
        "score": rec.score,
        "explanation": {
            "relation_kinds": sorted(k.value for k in rec.explanation.relation_kinds),
            "gate_values": {
                "pearson": rec.explanation.gate_values.pearson,
                "tie_strength": rec.explanation.gate_values.tie_strength,
                "degree_centrality": rec.explanation.gate_values.degree_centrality,
            },
            "matched_slot": {
                "location": rec.explanation.matched_slot.location,
                "start": rec.explanation.matched_slot.slot.start,
                "end": rec.explanation.matched_slot.slot.end,
            },
        },
    }


def context_match(session: Session, avail: AvailabilityContext) -> AvailabilitySlot | None:
    """First availability slot (in declaration order) at the session's venue
    whose window fully contains the session slot; None if there is none."""
    for entry in avail.slots:
        if entry.location == session.location and entry.slot.contains(session.slot):
            return entry
    return None


@dataclass
class _EngineCache:
    """Per-call memo for quantities shared across participants."""

    conf: ConferenceInstance
    centrality: dict[ParticipantId, DegreeCentrality] = field(default_factory=dict)
    similarity: dict[tuple[ParticipantId, ParticipantId], float | None] = field(default_factory=dict)

    def centrality_of(self, presenter: ParticipantId) -> DegreeCentrality:
        if presenter not in self.centrality:
            self.centrality[presenter] = degree_centrality(self.conf, presenter)
        return self.centrality[presenter]

    def similarity_of(self, a: ParticipantId, b: ParticipantId) -> float | None:
        key = (a, b) if a <= b else (b, a)
        if key not in self.similarity:
            self.similarity[key] = pearson(self.conf.ratings, a, b)
        return self.similarity[key]


def _recommend_participant(
    cache: _EngineCache,
    participant: ParticipantId,
    channels: Collection[Channel],
    strict: bool,
) -> dict[Channel, tuple[Recommendation, ...]]:
    conf = cache.conf
    th = conf.thresholds
    avail = conf.availabilities[participant]
    collected: dict[Channel, list[Recommendation]] = {ch: [] for ch in BOTH_CHANNELS}

    for session in sorted(conf.sessions, key=lambda s: s.session_id):
        presenter = session.presenter
        if presenter == participant:
            continue
        matched = context_match(session, avail)
        if matched is None:
            continue

        similarity = cache.similarity_of(participant, presenter)
        similar_enough = passes_gamma(similarity, th)

        if Channel.SOCIAL_CONTEXT in channels and similar_enough:
            collected[Channel.SOCIAL_CONTEXT].append(
                Recommendation(
                    participant=participant,
                    session=session,
                    channel=Channel.SOCIAL_CONTEXT,
                    score=similarity,  # type: ignore[arg-type]
                    explanation=Explanation(
                        relation_kinds=frozenset(
                            {RelationKind.TAG_POST, RelationKind.ITEM_CONTENT, RelationKind.COMMENT}
                        ),
                        gate_values=GateValues(pearson=similarity),
                        matched_slot=matched,
                    ),
                )
            )

        if Channel.SOCIAL_RELATIONS in channels:
            tie = tie_strength(conf.contacts, participant, presenter, th.frame_t)
            centrality = cache.centrality_of(presenter)
            tie_ok = passes_beta(tie, th)
            centrality_ok = passes_delta(centrality, th)
            admitted = tie_ok or centrality_ok
            if strict:
                admitted = admitted and similar_enough
            if admitted:
                gate_values = GateValues(
                    tie_strength=tie if tie_ok else None,
                    degree_centrality=centrality.normalized if centrality_ok else None,
                )
                score = max(
                    v for v in (gate_values.tie_strength, gate_values.degree_centrality) if v is not None
                )
                collected[Channel.SOCIAL_RELATIONS].append(
                    Recommendation(
                        participant=participant,
                        session=session,
                        channel=Channel.SOCIAL_RELATIONS,
                        score=score,
                        explanation=Explanation(
                            relation_kinds=frozenset({RelationKind.SOCIAL_NETWORK, RelationKind.COMMENT}),
                            gate_values=gate_values,
                            matched_slot=matched,
                        ),
                    )
                )

    for channel, recs in collected.items():
        recs.sort(key=lambda r: (-r.score, r.session.session_id))
        collected[channel] = recs[: th.top_n]
    return {ch: tuple(recs) for ch, recs in collected.items()}


def recommend_for(
    conf: ConferenceInstance,
    participant: ParticipantId,
    *,
    channels: Collection[Channel] = BOTH_CHANNELS,
    strict: bool = False,
) -> dict[Channel, tuple[Recommendation, ...]]:
    """Recommendation lists for a single participant.

    `strict` additionally requires the similarity gate on the
    social-relations channel (a conjunctive reading of the two signals);
    default is the independent-gates behavior.
    """
    require_valid(conf)
    if participant not in conf.roster:
        raise ValueError(f"participant {participant!r} is not in the roster")
    return _recommend_participant(_EngineCache(conf), participant, tuple(channels), strict)


def recommend(
    conf: ConferenceInstance,
    *,
    channels: Collection[Channel] = BOTH_CHANNELS,
    strict: bool = False,
) -> RecommendationSet:
    """Full recommendation set: the union of recommend_for over the roster.

    Deterministic: a pure function of `conf` (participants processed in
    sorted order, lists deterministically sorted and truncated).
    """
    require_valid(conf)
    cache = _EngineCache(conf)
    channels = tuple(channels)
    by_participant = {
        pid: _recommend_participant(cache, pid, channels, strict)
        for pid in sorted(conf.roster)
    }
    return RecommendationSet(by_participant=by_participant)
