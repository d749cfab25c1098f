"""Core domain model: participants, sessions, ratings, contacts, thresholds.

All values are plain immutable dataclasses. Nothing here raises on bad
*data* (out-of-range ratings, dangling references, ...): construction is
lenient and :func:`validate` reports every violation as a human-readable
string, so callers can surface complete diagnostics instead of dying on
the first problem. Only structural misuse of the API (e.g. a self-pair
tie-strength lookup) raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

ParticipantId = str
Tag = str


def normalize_tag(raw: str) -> Tag:
    """Canonical form of an interest keyword: lowercased, trimmed, inner
    whitespace collapsed. Idempotent."""
    return " ".join(raw.split()).lower()


def normalize_location(raw: str) -> str:
    """Canonical form of a venue code; same rules as tags."""
    return " ".join(raw.split()).lower()


class ValidationError(ValueError):
    """Raised by operations that require a well-formed conference instance.

    Carries the full violation list from :func:`validate`.
    """

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


@dataclass(frozen=True, order=True)
class TimeSlot:
    """Half-open [start, end) window in minutes from conference open."""

    start: int
    end: int

    def contains(self, other: "TimeSlot") -> bool:
        return self.start <= other.start and other.end <= self.end

    def is_valid(self, frame_t: int | None = None) -> bool:
        ok = 0 <= self.start < self.end
        if frame_t is not None:
            ok = ok and self.end <= frame_t
        return ok


@dataclass(frozen=True)
class AvailabilitySlot:
    """A window during which a participant can be at one venue."""

    location: str
    slot: TimeSlot


@dataclass(frozen=True)
class AvailabilityContext:
    """Where and when one participant is free. Empty slots = unavailable."""

    owner: ParticipantId
    slots: tuple[AvailabilitySlot, ...] = ()


@dataclass(frozen=True)
class Session:
    """A presentation: the recommendable item."""

    session_id: str
    presenter: ParticipantId
    location: str
    slot: TimeSlot
    topic_tags: frozenset[Tag] = frozenset()


@dataclass(frozen=True)
class RatingMatrix:
    """Sparse participant x tag integer ratings (1-5 when well-formed)."""

    entries: Mapping[tuple[ParticipantId, Tag], int]
    _by_participant: dict[ParticipantId, dict[Tag, int]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        index: dict[ParticipantId, dict[Tag, int]] = {}
        for (pid, tag), rating in self.entries.items():
            index.setdefault(pid, {})[tag] = rating
        object.__setattr__(self, "_by_participant", index)

    def ratings_of(self, pid: ParticipantId) -> Mapping[Tag, int]:
        return self._by_participant.get(pid, {})

    def participants(self) -> Iterable[ParticipantId]:
        return self._by_participant.keys()


@dataclass(frozen=True)
class Contact:
    """Aggregate contact record for one unordered pair: how many meetings
    and their total minutes within the conference frame."""

    frequency: int
    duration: int


def _pair_key(a: ParticipantId, b: ParticipantId) -> tuple[ParticipantId, ParticipantId]:
    return (a, b) if a <= b else (b, a)


_NO_CONTACT = Contact(0, 0)


@dataclass(frozen=True)
class ContactLog:
    """Undirected contact records keyed by unordered participant pair.

    (frequency=0, duration=0) records are dropped at construction: absence
    of an entry *is* the zero contact.
    """

    entries: Mapping[tuple[ParticipantId, ParticipantId], Contact]

    def __post_init__(self) -> None:
        canonical: dict[tuple[ParticipantId, ParticipantId], Contact] = {}
        for (a, b), contact in self.entries.items():
            if contact.frequency == 0 and contact.duration == 0:
                continue
            canonical[_pair_key(a, b)] = contact
        object.__setattr__(self, "entries", canonical)

    def get(self, a: ParticipantId, b: ParticipantId) -> Contact:
        return self.entries.get(_pair_key(a, b), _NO_CONTACT)

    def partners_of(self, pid: ParticipantId) -> set[ParticipantId]:
        """Other participants with at least one recorded meeting with pid."""
        out = set()
        for (a, b), contact in self.entries.items():
            if contact.frequency < 1:
                continue
            if a == pid:
                out.add(b)
            elif b == pid:
                out.add(a)
        return out


@dataclass(frozen=True)
class Thresholds:
    """Gating knobs for both recommendation channels.

    gamma   similarity gate, in [-1, 1]
    beta    tie-strength gate, >= 0
    delta   gate on *normalized* presenter degree centrality, >= 0
    frame_t conference time frame in minutes
    top_n   per-channel list length cap
    """

    gamma: float = 1.0
    beta: float = 0.5
    delta: float = 0.5
    frame_t: int = 720
    top_n: int = 10


@dataclass(frozen=True)
class ConferenceInstance:
    """Everything known about one conference: roster, sessions, ratings,
    contacts, availability, thresholds.

    The availability map is totalized over the roster at construction
    (missing members get an empty context), which keeps equality and
    file round-trips canonical.
    """

    roster: frozenset[ParticipantId]
    presenters: frozenset[ParticipantId]
    sessions: tuple[Session, ...]
    ratings: RatingMatrix
    contacts: ContactLog
    availabilities: Mapping[ParticipantId, AvailabilityContext]
    thresholds: Thresholds

    def __post_init__(self) -> None:
        total = dict(self.availabilities)
        for pid in self.roster:
            if pid not in total:
                total[pid] = AvailabilityContext(owner=pid)
        object.__setattr__(self, "availabilities", total)

    def session_by_id(self, session_id: str) -> Session | None:
        for session in self.sessions:
            if session.session_id == session_id:
                return session
        return None


def validate(conf: ConferenceInstance) -> list[str]:
    """Check every domain invariant; return one message per violation.

    Total: never raises on malformed data. An empty list means the
    instance is well-formed.
    """
    out: list[str] = []
    th = conf.thresholds

    for pid in conf.roster:
        if not pid:
            out.append("roster: empty participant id")

    for pid in conf.presenters - conf.roster:
        out.append(f"presenter {pid!r} is not in the roster")

    seen_ids: set[str] = set()
    for session in conf.sessions:
        sid = session.session_id
        if not sid:
            out.append("session with empty session_id")
        if sid in seen_ids:
            out.append(f"duplicate session id {sid!r}")
        seen_ids.add(sid)
        if session.presenter not in conf.presenters:
            out.append(f"session {sid!r}: presenter {session.presenter!r} is not a registered presenter")
        if not session.location:
            out.append(f"session {sid!r}: empty location")
        elif session.location != normalize_location(session.location):
            out.append(f"session {sid!r}: location {session.location!r} is not in normalized form")
        if not session.slot.is_valid(th.frame_t):
            out.append(
                f"session {sid!r}: slot [{session.slot.start}, {session.slot.end}) "
                f"is not a valid window within frame 0..{th.frame_t}"
            )
        for tag in session.topic_tags:
            if not tag or tag != normalize_tag(tag):
                out.append(f"session {sid!r}: tag {tag!r} is empty or not normalized")

    for (pid, tag), rating in conf.ratings.entries.items():
        if pid not in conf.roster:
            out.append(f"rating by unknown participant {pid!r}")
        if not tag or tag != normalize_tag(tag):
            out.append(f"rating ({pid!r}, {tag!r}): tag is empty or not normalized")
        if not 1 <= rating <= 5:
            out.append(f"rating out of range: ({pid!r}, {tag!r}) = {rating}, must be 1..5")

    for (a, b), contact in conf.contacts.entries.items():
        if a == b:
            out.append(f"contact log has self-pair for {a!r}")
        for pid in (a, b):
            if pid not in conf.roster:
                out.append(f"contact ({a!r}, {b!r}) references unknown participant {pid!r}")
        if contact.frequency < 0 or contact.duration < 0:
            out.append(f"contact ({a!r}, {b!r}): negative frequency or duration")
        if (contact.frequency == 0) != (contact.duration == 0):
            out.append(
                f"contact ({a!r}, {b!r}): frequency {contact.frequency} and "
                f"duration {contact.duration} must be zero together"
            )

    for pid, avail in conf.availabilities.items():
        if pid not in conf.roster:
            out.append(f"availability for unknown participant {pid!r}")
        if avail.owner != pid:
            out.append(f"availability keyed {pid!r} but owned by {avail.owner!r}")
        for entry in avail.slots:
            if not entry.location or entry.location != normalize_location(entry.location):
                out.append(f"availability of {pid!r}: location {entry.location!r} is empty or not normalized")
            if not entry.slot.is_valid(th.frame_t):
                out.append(
                    f"availability of {pid!r}: slot [{entry.slot.start}, {entry.slot.end}) "
                    f"is not a valid window within frame 0..{th.frame_t}"
                )

    if not -1.0 <= th.gamma <= 1.0:
        out.append(f"thresholds: gamma {th.gamma} outside [-1, 1]")
    if th.beta < 0:
        out.append(f"thresholds: beta {th.beta} must be >= 0")
    if th.delta < 0:
        out.append(f"thresholds: delta {th.delta} must be >= 0")
    if th.frame_t <= 0:
        out.append(f"thresholds: frame_t {th.frame_t} must be positive")
    if th.top_n < 1:
        out.append(f"thresholds: top_n {th.top_n} must be >= 1")

    return out


def require_valid(conf: ConferenceInstance) -> None:
    """Raise :class:`ValidationError` unless validate() comes back clean."""
    violations = validate(conf)
    if violations:
        raise ValidationError(violations)
