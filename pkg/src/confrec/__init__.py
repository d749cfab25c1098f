"""Socially-aware recommendation of conference presentation sessions.

A dual-channel recommender for conference participants: one channel gates
on rating-pattern similarity between a participant and each presenter, the
other on social-graph signals (tie strength, presenter degree centrality).
Both channels post-filter candidates against the participant's availability
(location and time), so only attendable sessions are ever recommended.
"""

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
    ValidationError,
    normalize_location,
    normalize_tag,
    validate,
)
from confrec.similarity import k_most_similar, passes_gamma, pearson
from confrec.social import (
    DegreeCentrality,
    degree_centrality,
    passes_beta,
    passes_delta,
    tie_strength,
)
from confrec.engine import (
    Channel,
    Explanation,
    GateValues,
    Recommendation,
    RecommendationSet,
    RelationKind,
    context_match,
    recommend,
    recommend_for,
)

__all__ = [
    "AvailabilityContext",
    "AvailabilitySlot",
    "Channel",
    "ConferenceInstance",
    "Contact",
    "ContactLog",
    "DegreeCentrality",
    "Explanation",
    "GateValues",
    "RatingMatrix",
    "Recommendation",
    "RecommendationSet",
    "RelationKind",
    "Session",
    "Thresholds",
    "TimeSlot",
    "ValidationError",
    "context_match",
    "degree_centrality",
    "k_most_similar",
    "normalize_location",
    "normalize_tag",
    "passes_beta",
    "passes_delta",
    "passes_gamma",
    "pearson",
    "recommend",
    "recommend_for",
    "tie_strength",
    "validate",
]

__version__ = "0.1.0"
