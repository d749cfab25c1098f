"""Offline evaluation: per-user holdout split, confusion counts,
precision/recall, threshold sweeps, and scorer-ablation tables.

Ground-truth relevance comes from the withheld 20%: a (participant,
session) pair counts as relevant when the withheld data shows the
participant rated one of the session's topic tags at 4 or 5, OR had a
recorded contact with its presenter. The rule mirrors the two
recommendation channels and is stated in every report so numbers are
interpretable. Degenerate 0/0 precision and recall are defined as 0 to
keep reports NaN-free; that convention is printed too.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from confrec.engine import BOTH_CHANNELS, Channel, RecommendationSet, recommend
from confrec.model import ConferenceInstance, Contact, ContactLog, ParticipantId, RatingMatrix

RELEVANCE_RULE = (
    "relevant iff withheld rating >= 4 on a session topic tag "
    "or withheld contact with the session's presenter"
)
ZERO_CONVENTION = "0/0 precision and recall are reported as 0"


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.8
    seed: int = 0

    def check(self) -> None:
        if not 0 < self.train_fraction < 1:
            raise ValueError(f"train_fraction must be in (0, 1), got {self.train_fraction}")


@dataclass(frozen=True)
class RelevanceLabels:
    """Ground truth for every evaluated (participant, session_id) pair."""

    labels: Mapping[tuple[ParticipantId, str], bool]
    rule: str = RELEVANCE_RULE

    def relevant_pairs(self) -> set[tuple[ParticipantId, str]]:
        return {pair for pair, flag in self.labels.items() if flag}


@dataclass(frozen=True)
class ConfusionCounts:
    """Retrieval outcome cells: e=hit, f=false alarm, g=miss, h=correct reject."""

    e: int
    f: int
    g: int
    h: int

    @property
    def total(self) -> int:
        return self.e + self.f + self.g + self.h


@dataclass(frozen=True)
class SweepPoint:
    threshold: float
    counts: ConfusionCounts
    precision: float
    recall: float


@dataclass(frozen=True)
class SweepReport:
    channel: Channel
    points: tuple[SweepPoint, ...]
    metadata: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class AblationRow:
    scorer: str
    threshold: float
    counts: ConfusionCounts
    precision: float
    recall: float


@dataclass(frozen=True)
class AblationReport:
    tables: Mapping[Channel, tuple[AblationRow, ...]]
    metadata: Mapping[str, str] = field(default_factory=dict)


def split(
    conf: ConferenceInstance, spec: SplitSpec
) -> tuple[ConferenceInstance, RelevanceLabels]:
    """Withhold a seeded test fraction of ratings and contacts; label pairs.

    Rating split is per participant: with n rated tags, floor(
    train_fraction * n) stay in training, clamped so both sides keep at
    least one tag (the remainder is the withheld test side). Participants
    with fewer than two ratings cannot be split and are an error.
    Contacts are withheld pair-wise: floor((1 - train_fraction) * pairs)
    of the sorted pair list, after a seeded shuffle.

    Labels cover every (participant, session) pair with participant !=
    presenter, using the withheld data only (see RELEVANCE_RULE).
    """
    spec.check()
    rng = random.Random(spec.seed)

    too_few = sorted(
        pid for pid in conf.roster if len(conf.ratings.ratings_of(pid)) < 2
    )
    if too_few:
        raise ValueError(
            f"cannot split: participants with fewer than 2 ratings: {', '.join(too_few)}"
        )

    train_ratings: dict[tuple[str, str], int] = {}
    withheld_ratings: dict[tuple[str, str], int] = {}
    for pid in sorted(conf.roster):
        tags = sorted(conf.ratings.ratings_of(pid))
        rng.shuffle(tags)
        n_train = int(spec.train_fraction * len(tags))
        n_train = min(max(n_train, 1), len(tags) - 1)
        for tag in tags[:n_train]:
            train_ratings[(pid, tag)] = conf.ratings.entries[(pid, tag)]
        for tag in tags[n_train:]:
            withheld_ratings[(pid, tag)] = conf.ratings.entries[(pid, tag)]

    pairs = sorted(conf.contacts.entries)
    rng.shuffle(pairs)
    n_withheld = int((1 - spec.train_fraction) * len(pairs))
    withheld_pairs = set(pairs[:n_withheld])
    train_contacts = {
        pair: contact
        for pair, contact in conf.contacts.entries.items()
        if pair not in withheld_pairs
    }

    labels: dict[tuple[str, str], bool] = {}
    for pid in conf.roster:
        for session in conf.sessions:
            if session.presenter == pid:
                continue
            by_rating = any(
                withheld_ratings.get((pid, tag), 0) >= 4 for tag in session.topic_tags
            )
            key = (pid, session.presenter) if pid <= session.presenter else (session.presenter, pid)
            by_contact = key in withheld_pairs
            labels[(pid, session.session_id)] = by_rating or by_contact

    train = ConferenceInstance(
        roster=conf.roster,
        presenters=conf.presenters,
        sessions=conf.sessions,
        ratings=RatingMatrix(train_ratings),
        contacts=ContactLog(train_contacts),
        availabilities=conf.availabilities,
        thresholds=conf.thresholds,
    )
    return train, RelevanceLabels(labels=labels)


def confusion(
    recs: RecommendationSet, labels: RelevanceLabels, channel: Channel
) -> ConfusionCounts:
    """Tally e/f/g/h over the labeled pair universe for one channel."""
    retrieved = recs.channel_pairs(channel)
    universe = set(labels.labels)
    uncovered = retrieved - universe
    if uncovered:
        sample = ", ".join(f"({p}, {s})" for p, s in sorted(uncovered)[:5])
        raise ValueError(f"labels do not cover retrieved pair(s): {sample}")
    e = f = g = h = 0
    for pair, relevant in labels.labels.items():
        hit = pair in retrieved
        if hit and relevant:
            e += 1
        elif hit:
            f += 1
        elif relevant:
            g += 1
        else:
            h += 1
    return ConfusionCounts(e=e, f=f, g=g, h=h)


def precision(c: ConfusionCounts) -> float:
    """Fraction of recommendations that were relevant; 0 when nothing was
    retrieved."""
    return c.e / (c.e + c.f) if c.e + c.f else 0.0


def recall(c: ConfusionCounts) -> float:
    """Fraction of relevant pairs that were recommended; 0 when nothing was
    relevant."""
    return c.e / (c.e + c.g) if c.e + c.g else 0.0


def _with_threshold(conf: ConferenceInstance, channel: Channel, value: float) -> ConferenceInstance:
    """Copy of conf with the channel's own gate moved to `value`."""
    gate = "gamma" if channel is Channel.SOCIAL_CONTEXT else "beta"
    return replace(conf, thresholds=replace(conf.thresholds, **{gate: value}))


def sweep(
    conf: ConferenceInstance,
    labels: RelevanceLabels,
    channel: Channel,
    grid: Sequence[float],
    *,
    dataset_id: str = "unnamed",
) -> SweepReport:
    """Precision/recall at each gate setting on the grid.

    The grid varies the channel's own gate (gamma for social-context,
    beta for social-relations); every other threshold stays at the value
    carried by `conf`.
    """
    if not grid:
        raise ValueError("grid must be non-empty")
    if list(grid) != sorted(grid):
        raise ValueError("grid must be sorted ascending")

    points = []
    for value in grid:
        recs = recommend(_with_threshold(conf, channel, value))
        counts = confusion(recs, labels, channel)
        points.append(
            SweepPoint(
                threshold=value,
                counts=counts,
                precision=precision(counts),
                recall=recall(counts),
            )
        )
    th = conf.thresholds
    fixed = (
        f"beta={th.beta!r}, delta={th.delta!r}"
        if channel is Channel.SOCIAL_CONTEXT
        else f"gamma={th.gamma!r}, delta={th.delta!r}"
    )
    metadata = {
        "dataset": dataset_id,
        "channel": channel.value,
        "varied": "gamma" if channel is Channel.SOCIAL_CONTEXT else "beta",
        "fixed": fixed,
        "top_n": str(th.top_n),
        "relevance_rule": labels.rule,
        "convention": ZERO_CONVENTION,
    }
    return SweepReport(channel=channel, points=tuple(points), metadata=metadata)


_ABLATION_SCORERS: tuple[tuple[str, tuple[Channel, ...]], ...] = (
    ("dual-channel", BOTH_CHANNELS),
    ("similarity-only", (Channel.SOCIAL_CONTEXT,)),
    ("relations-only", (Channel.SOCIAL_RELATIONS,)),
)


def ablation_report(
    conf: ConferenceInstance,
    labels: RelevanceLabels,
    *,
    dataset_id: str = "unnamed",
) -> AblationReport:
    """Compare the dual-channel engine against its single-channel ablations.

    The single-channel scorers are ablations of this engine, not
    reimplementations of any external baseline. Each channel's table
    reports every scorer at the gate value carried by `conf`.
    """
    th = conf.thresholds
    tables: dict[Channel, tuple[AblationRow, ...]] = {}
    for channel in BOTH_CHANNELS:
        rows = []
        gate = th.gamma if channel is Channel.SOCIAL_CONTEXT else th.beta
        for scorer, active in _ABLATION_SCORERS:
            recs = recommend(conf, channels=active)
            counts = confusion(recs, labels, channel)
            rows.append(
                AblationRow(
                    scorer=scorer,
                    threshold=gate,
                    counts=counts,
                    precision=precision(counts),
                    recall=recall(counts),
                )
            )
        tables[channel] = tuple(rows)
    metadata = {
        "dataset": dataset_id,
        "thresholds": f"gamma={th.gamma!r}, beta={th.beta!r}, delta={th.delta!r}, top_n={th.top_n}",
        "relevance_rule": labels.rule,
        "convention": ZERO_CONVENTION,
        "note": "single-channel scorers are ablations of this engine, not external baselines",
    }
    return AblationReport(tables=tables, metadata=metadata)


def write_sweep_csv(reports: Sequence[SweepReport], path) -> None:
    """Golden-file CSV: channel, threshold, e, f, g, h, precision, recall.

    Floats are written with repr (shortest round-trip form), so equal
    reports serialize to identical bytes on every platform.
    """
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_sweep_csv(reports))


def render_sweep_csv(reports: Sequence[SweepReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["channel", "threshold", "e", "f", "g", "h", "precision", "recall"])
    for report in reports:
        for p in report.points:
            writer.writerow(
                [
                    report.channel.value,
                    repr(p.threshold),
                    p.counts.e,
                    p.counts.f,
                    p.counts.g,
                    p.counts.h,
                    repr(p.precision),
                    repr(p.recall),
                ]
            )
    return buf.getvalue()


def render_ablation_text(report: AblationReport) -> str:
    """Plain-text comparison tables, one per channel."""
    lines = []
    for key in ("dataset", "thresholds", "relevance_rule", "convention", "note"):
        if key in report.metadata:
            lines.append(f"# {key}: {report.metadata[key]}")
    for channel in BOTH_CHANNELS:
        rows = report.tables.get(channel, ())
        if not rows:
            continue
        gate = "gamma" if channel is Channel.SOCIAL_CONTEXT else "beta"
        lines.append("")
        lines.append(f"scorer comparison: {channel.value} channel (gate {gate})")
        lines.append(f"{'scorer':<18}{'threshold':>10}{'precision':>11}{'recall':>9}")
        for row in rows:
            lines.append(
                f"{row.scorer:<18}{row.threshold:>10.3f}{row.precision:>11.4f}{row.recall:>9.4f}"
            )
    return "\n".join(lines) + "\n"
