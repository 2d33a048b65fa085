"""Maximal monotone runs per gradual item, and the derived run-sequence database."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

from .ingest import TemporalSequenceDatabase
from .model import Direction, GradualItem, PeriodLabel, parse_label
from .periodic import TransactionSequence

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Run:
    """A maximal list of consecutive observations respecting one gradual item.

    labels follow timeline order (a run may wrap a cycle boundary, e.g.
    d8,d1); start is the absolute timeline position of the first observation.
    """

    labels: tuple[PeriodLabel, ...]
    start: int

    def __post_init__(self):
        if len(self.labels) < 2:
            raise ValueError("a run spans at least 2 observations")

    @property
    def length(self) -> int:
        return len(self.labels)

    def transaction_labels(self) -> tuple[PeriodLabel, ...]:
        """Labels deduplicated in first-occurrence order (run viewed as a transaction)."""
        seen: dict[PeriodLabel, None] = {}
        for lab in self.labels:
            seen.setdefault(lab)
        return tuple(seen)

    def label_set(self) -> frozenset[PeriodLabel]:
        return frozenset(self.labels)

    @property
    def display(self) -> str:
        return "(" + ",".join(l.display for l in self.labels) + ")"


def _pair_ok(a: float, b: float, direction: Direction, strict: bool) -> bool:
    if direction is Direction.UP:
        return a < b if strict else a <= b
    return a > b if strict else a >= b


def respects(values, direction: Direction, strict: bool = True) -> bool:
    """True iff every adjacent pair is ordered per the direction (vacuous for length 1)."""
    if len(values) < 1:
        raise ValueError("values must be non-empty")
    return all(_pair_ok(values[i], values[i + 1], direction, strict)
               for i in range(len(values) - 1))


def _scan_segment(values, offset: int, direction: Direction, strict: bool):
    """Maximal runs (start, length) over one contiguous value segment, left to right."""
    runs = []
    i = 0
    while i < len(values) - 1:
        if _pair_ok(values[i], values[i + 1], direction, strict):
            j = i + 1
            while j < len(values) - 1 and _pair_ok(values[j], values[j + 1], direction, strict):
                j += 1
            runs.append((offset + i, j - i + 1))
            i = j
        else:
            i += 1
    return runs


def compute_runs(db: TemporalSequenceDatabase, item: GradualItem,
                 cross_boundary: bool = True, strict: bool = True) -> list[Run]:
    """All maximal runs of length >= 2 for one gradual item.

    With cross_boundary on (default) the timeline is the concatenation of all
    cycles, so the last observation of a cycle is adjacent to the first of the
    next; with it off, each cycle is scanned independently. Pure function of
    the immutable database, so calls for distinct items can run concurrently.
    """
    values = db.timeline(item.attribute)
    ell = db.cycle_length
    if cross_boundary:
        spans = _scan_segment(values, 0, item.direction, strict)
    else:
        spans = []
        for k in range(db.m):
            seg = values[k * ell:(k + 1) * ell]
            spans.extend(_scan_segment(seg, k * ell, item.direction, strict))
    runs = []
    overlong = 0
    for start, length in spans:
        labels = tuple(db.label_at(p) for p in range(start, start + length))
        if length > ell:
            overlong += 1
        runs.append(Run(labels, start))
    if overlong:
        log.warning("%s: %d run(s) longer than one cycle; repeated labels are "
                    "deduplicated in the transaction view", item.display, overlong)
    return runs


@dataclass(frozen=True)
class GammaDatabase:
    """One ordered run-sequence per gradual item, in fixed item order
    (first attribute up, first attribute down, second attribute up, ...)."""

    entries: tuple[tuple[GradualItem, tuple[Run, ...]], ...]
    cycle_length: int

    @property
    def items(self) -> tuple[GradualItem, ...]:
        return tuple(item for item, _ in self.entries)

    def runs_for(self, item: GradualItem) -> tuple[Run, ...]:
        for entry_item, runs in self.entries:
            if entry_item == item:
                return runs
        raise KeyError(f"gradual item {item.display} not in database")

    def sequences(self) -> list[TransactionSequence]:
        return [TransactionSequence(item, tuple(r.label_set() for r in runs))
                for item, runs in self.entries]

    def to_json(self) -> str:
        payload = [{
            "item": {"attribute": item.attribute, "direction": item.direction.value},
            "runs": [[l.display for l in run.transaction_labels()] for run in runs],
        } for item, runs in self.entries]
        return json.dumps(payload, indent=2)

    @property
    def display(self) -> str:
        lines = []
        for item, runs in self.entries:
            lines.append(f"{item.display} : " + ",".join(r.display for r in runs))
        return "\n".join(lines)


def build_gamma(db: TemporalSequenceDatabase, cross_boundary: bool = True,
                strict: bool = True) -> GammaDatabase:
    """Derived run-sequence database: 2n entries, one per gradual item."""
    entries = []
    for attr in db.attributes:
        for direction in (Direction.UP, Direction.DOWN):
            item = GradualItem(attr, direction)
            entries.append((item, tuple(compute_runs(db, item, cross_boundary, strict))))
    return GammaDatabase(tuple(entries), db.cycle_length)


def sequences_from_json(text: str) -> list[TransactionSequence]:
    """Rebuild transaction sequences from a JSON dump produced by to_json."""
    payload = json.loads(text)
    seqs = []
    for entry in payload:
        item = GradualItem(entry["item"]["attribute"], Direction(entry["item"]["direction"]))
        transactions = tuple(frozenset(parse_label(l) for l in run) for run in entry["runs"])
        seqs.append(TransactionSequence(item, transactions))
    return seqs
