"""User-based similarity: mean-centered correlation over co-rated tags.

The correlation between two participants is computed over the tags *both*
have rated; the means are taken over that co-rated set only (the standard
user-based CF convention for sparse data). Pairs with fewer than two
co-rated tags, or with zero rating variance on them, have no defined
similarity and are returned as None -- an undefined score never passes
the gate, unlike a fake 0.0 which would sneak past low gamma settings.

Because ratings are integers, the computation runs in exact integer
arithmetic on deviations scaled by the co-rated count (the scale cancels).
Perfect agreement and perfect disagreement therefore come out as exactly
+1.0 / -1.0 -- which matters: the canonical gate setting gamma = 1.0
admits exactly the perfect-agreement pairs, with no float fuzz deciding
the boundary.
"""

from __future__ import annotations

import math
from typing import Iterable

from confrec.model import ParticipantId, RatingMatrix, Thresholds

SimilarityScore = float  # in [-1, 1]; None where undefined


def pearson(
    ratings: RatingMatrix, c: ParticipantId, d: ParticipantId
) -> SimilarityScore | None:
    """Mean-centered rating correlation between participants c and d.

    Returns None when undefined: fewer than two co-rated tags, or either
    participant rates every co-rated tag identically (zero variance).
    Defined values are clamped into [-1, 1].
    """
    if c == d:
        raise ValueError(f"similarity of a participant with itself is undefined: {c!r}")
    c_ratings = ratings.ratings_of(c)
    d_ratings = ratings.ratings_of(d)
    common = sorted(c_ratings.keys() & d_ratings.keys())
    n = len(common)
    if n < 2:
        return None

    # Deviations scaled by n stay integral: n*r_i - sum(r). The common
    # factor n^2 cancels between numerator and denominator.
    c_sum = sum(c_ratings[t] for t in common)
    d_sum = sum(d_ratings[t] for t in common)
    c_dev = [n * c_ratings[t] - c_sum for t in common]
    d_dev = [n * d_ratings[t] - d_sum for t in common]

    num = sum(dc * dd for dc, dd in zip(c_dev, d_dev))
    c_var = sum(dc * dc for dc in c_dev)
    d_var = sum(dd * dd for dd in d_dev)
    if c_var == 0 or d_var == 0:
        return None
    if num * num == c_var * d_var:  # Cauchy-Schwarz equality: exactly +-1
        return 1.0 if num > 0 else -1.0
    value = num / math.sqrt(c_var * d_var)
    return max(-1.0, min(1.0, value))


def passes_gamma(score: SimilarityScore | None, thresholds: Thresholds) -> bool:
    """Similarity gate: defined and >= gamma. Undefined never passes."""
    return score is not None and score >= thresholds.gamma


def k_most_similar(
    ratings: RatingMatrix,
    target: ParticipantId,
    candidates: Iterable[ParticipantId],
    k: int,
) -> list[tuple[ParticipantId, SimilarityScore]]:
    """Top-k candidates by similarity to target, descending.

    Candidates without a defined score are dropped. Ties break by
    ascending participant id so runs are reproducible.
    """
    candidates = set(candidates)
    if target in candidates:
        raise ValueError(f"target {target!r} must not be among the candidates")
    if k < 0:
        raise ValueError("k must be non-negative")
    scored = []
    for pid in sorted(candidates):
        score = pearson(ratings, target, pid)
        if score is not None:
            scored.append((pid, score))
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored[:k]
