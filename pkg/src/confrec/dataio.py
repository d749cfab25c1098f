"""Dataset files: a sectioned, tab-separated text format plus CSV exports.

The on-disk contract (header line, section names, field order) is frozen
in FORMAT.md at the repository root so other tooling can interoperate.
Saving is canonical -- sets sorted, list order preserved where order is
meaningful (sessions, availability slots) -- so equal instances produce
byte-identical files. Loading re-validates and refuses malformed data
with diagnostics naming the offending line or record.
"""

from __future__ import annotations

import csv
from pathlib import Path

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

FORMAT_HEADER = "conference-dataset v1"

_SECTIONS = (
    "roster",
    "presenters",
    "sessions",
    "ratings",
    "contacts",
    "availabilities",
    "thresholds",
)


class ParseError(ValueError):
    """A dataset file that cannot be parsed; message carries line context."""

    def __init__(self, path: str | Path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.line_no = line_no


def _check_token(value: str, what: str) -> str:
    if not value:
        raise ValueError(f"{what} must be non-empty")
    if "\t" in value or "\n" in value or "\r" in value:
        raise ValueError(f"{what} {value!r} must not contain tabs or newlines")
    if value.startswith("["):
        raise ValueError(f"{what} {value!r} must not start with '['")
    return value


def _check_tag(value: str) -> str:
    _check_token(value, "tag")
    if "," in value:
        raise ValueError(f"tag {value!r} must not contain commas")
    return value


def save(conf: ConferenceInstance, path: str | Path) -> None:
    """Write one instance to `path` in the v1 format."""
    lines = [FORMAT_HEADER]

    lines.append("[roster]")
    for pid in sorted(conf.roster):
        lines.append(_check_token(pid, "participant id"))

    lines.append("[presenters]")
    for pid in sorted(conf.presenters):
        lines.append(_check_token(pid, "participant id"))

    lines.append("[sessions]")
    for s in conf.sessions:
        tags = ",".join(sorted(_check_tag(t) for t in s.topic_tags))
        lines.append(
            "\t".join(
                (
                    _check_token(s.session_id, "session id"),
                    _check_token(s.presenter, "participant id"),
                    _check_token(s.location, "location"),
                    str(s.slot.start),
                    str(s.slot.end),
                    tags,
                )
            )
        )

    lines.append("[ratings]")
    for (pid, tag), rating in sorted(conf.ratings.entries.items()):
        lines.append("\t".join((_check_token(pid, "participant id"), _check_tag(tag), str(rating))))

    lines.append("[contacts]")
    for (a, b), contact in sorted(conf.contacts.entries.items()):
        lines.append(
            "\t".join(
                (
                    _check_token(a, "participant id"),
                    _check_token(b, "participant id"),
                    str(contact.frequency),
                    str(contact.duration),
                )
            )
        )

    lines.append("[availabilities]")
    for pid in sorted(conf.availabilities):
        for entry in conf.availabilities[pid].slots:
            lines.append(
                "\t".join(
                    (
                        _check_token(pid, "participant id"),
                        _check_token(entry.location, "location"),
                        str(entry.slot.start),
                        str(entry.slot.end),
                    )
                )
            )

    lines.append("[thresholds]")
    th = conf.thresholds
    lines.append(f"gamma\t{th.gamma!r}")
    lines.append(f"beta\t{th.beta!r}")
    lines.append(f"delta\t{th.delta!r}")
    lines.append(f"frame_t\t{th.frame_t}")
    lines.append(f"top_n\t{th.top_n}")

    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _fields(path: str | Path, line_no: int, line: str, n: int, what: str) -> list[str]:
    parts = line.split("\t")
    if len(parts) != n:
        raise ParseError(path, line_no, f"{what} line needs {n} tab-separated fields, got {len(parts)}")
    return parts


def _int(path: str | Path, line_no: int, raw: str, what: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ParseError(path, line_no, f"{what} must be an integer, got {raw!r}") from None


def _float(path: str | Path, line_no: int, raw: str, what: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ParseError(path, line_no, f"{what} must be a number, got {raw!r}") from None


def load(path: str | Path) -> ConferenceInstance:
    """Parse and validate a v1 dataset file.

    Raises :class:`ParseError` with line diagnostics for syntax problems
    and :class:`confrec.model.ValidationError` (one entry per violation,
    naming the record) when the parsed instance breaks a domain invariant.
    """
    conf = parse(path)
    require_valid(conf)
    return conf


def parse(path: str | Path) -> ConferenceInstance:
    """Parse a v1 dataset file without domain validation.

    Syntax problems raise :class:`ParseError`; domain invariants are the
    caller's business (see :func:`confrec.model.validate`).
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0].strip() != FORMAT_HEADER:
        raise ParseError(path, 1, f"expected header {FORMAT_HEADER!r}")

    roster: list[str] = []
    presenters: list[str] = []
    sessions: list[Session] = []
    ratings: dict[tuple[str, str], int] = {}
    contacts: dict[tuple[str, str], Contact] = {}
    slots_by_pid: dict[str, list[AvailabilitySlot]] = {}
    threshold_fields: dict[str, str] = {}

    section: str | None = None
    seen_sections: set[str] = set()
    for line_no, raw in enumerate(lines[1:], start=2):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if line.startswith("["):
            name = line.strip().strip("[]")
            if name not in _SECTIONS:
                raise ParseError(path, line_no, f"unknown section {name!r}")
            if name in seen_sections:
                raise ParseError(path, line_no, f"duplicate section {name!r}")
            seen_sections.add(name)
            section = name
            continue
        if section is None:
            raise ParseError(path, line_no, "data before any section header")

        if section == "roster":
            roster.append(line.strip())
        elif section == "presenters":
            presenters.append(line.strip())
        elif section == "sessions":
            sid, presenter, location, start, end, tags = _fields(path, line_no, line, 6, "session")
            topic = frozenset(t.strip() for t in tags.split(",") if t.strip()) if tags else frozenset()
            sessions.append(
                Session(
                    session_id=sid,
                    presenter=presenter,
                    location=location,
                    slot=TimeSlot(
                        _int(path, line_no, start, "session start"),
                        _int(path, line_no, end, "session end"),
                    ),
                    topic_tags=topic,
                )
            )
        elif section == "ratings":
            pid, tag, rating = _fields(path, line_no, line, 3, "rating")
            key = (pid, tag)
            if key in ratings:
                raise ParseError(path, line_no, f"duplicate rating for ({pid!r}, {tag!r})")
            ratings[key] = _int(path, line_no, rating, "rating")
        elif section == "contacts":
            a, b, freq, dur = _fields(path, line_no, line, 4, "contact")
            key = (a, b) if a <= b else (b, a)
            if key in contacts:
                raise ParseError(path, line_no, f"duplicate contact for pair ({a!r}, {b!r})")
            contacts[key] = Contact(
                frequency=_int(path, line_no, freq, "contact frequency"),
                duration=_int(path, line_no, dur, "contact duration"),
            )
        elif section == "availabilities":
            pid, location, start, end = _fields(path, line_no, line, 4, "availability")
            slots_by_pid.setdefault(pid, []).append(
                AvailabilitySlot(
                    location=location,
                    slot=TimeSlot(
                        _int(path, line_no, start, "availability start"),
                        _int(path, line_no, end, "availability end"),
                    ),
                )
            )
        elif section == "thresholds":
            key, _, value = line.partition("\t")
            if not _:
                raise ParseError(path, line_no, "threshold line needs key<TAB>value")
            threshold_fields[key] = value

    missing = [s for s in _SECTIONS if s not in seen_sections]
    if missing:
        raise ParseError(path, len(lines), f"missing section(s): {', '.join(missing)}")

    last = len(lines)
    for key in threshold_fields:
        if key not in ("gamma", "beta", "delta", "frame_t", "top_n"):
            raise ParseError(path, last, f"unknown threshold field {key!r}")
    for key in ("gamma", "beta", "delta", "frame_t", "top_n"):
        if key not in threshold_fields:
            raise ParseError(path, last, f"missing threshold field {key!r}")
    thresholds = Thresholds(
        gamma=_float(path, last, threshold_fields["gamma"], "gamma"),
        beta=_float(path, last, threshold_fields["beta"], "beta"),
        delta=_float(path, last, threshold_fields["delta"], "delta"),
        frame_t=_int(path, last, threshold_fields["frame_t"], "frame_t"),
        top_n=_int(path, last, threshold_fields["top_n"], "top_n"),
    )

    return ConferenceInstance(
        roster=frozenset(roster),
        presenters=frozenset(presenters),
        sessions=tuple(sessions),
        ratings=RatingMatrix(ratings),
        contacts=ContactLog(contacts),
        availabilities={
            pid: AvailabilityContext(owner=pid, slots=tuple(slots))
            for pid, slots in slots_by_pid.items()
        },
        thresholds=thresholds,
    )


def export_ratings_csv(conf: ConferenceInstance, path: str | Path) -> None:
    """Rating matrix as flat CSV: participant, tag, rating."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["participant", "tag", "rating"])
        for (pid, tag), rating in sorted(conf.ratings.entries.items()):
            writer.writerow([pid, tag, rating])


def export_contacts_csv(conf: ConferenceInstance, path: str | Path) -> None:
    """Contact log as flat CSV: participant_a, participant_b, frequency, duration."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["participant_a", "participant_b", "frequency", "duration"])
        for (a, b), contact in sorted(conf.contacts.entries.items()):
            writer.writerow([a, b, contact.frequency, contact.duration])
