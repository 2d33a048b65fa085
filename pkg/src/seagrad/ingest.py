"""CSV ingestion, cycle segmentation, serialization and synthetic data generation."""

from __future__ import annotations

import csv
import json
import logging
import math
import random
from dataclasses import dataclass
from pathlib import Path

from .model import Direction, PeriodLabel

log = logging.getLogger(__name__)


class DataError(Exception):
    """Raised when input data cannot be validated into a sequence database."""


@dataclass(frozen=True)
class TemporalSequenceDatabase:
    """m cycles of cycle_length observations over n numeric attributes.

    Immutable once built; safe to share across threads. Cycle k, period p
    (0-based) holds one float per attribute, labeled d{p+1}.
    """

    attributes: tuple[str, ...]
    cycles: tuple[tuple[tuple[float, ...], ...], ...]

    def __post_init__(self):
        if not self.cycles:
            raise DataError("zero complete cycles")
        length = len(self.cycles[0])
        n = len(self.attributes)
        for cycle in self.cycles:
            if len(cycle) != length:
                raise DataError("cycles must all have the same length")
            for obs in cycle:
                if len(obs) != n:
                    raise DataError("observation width does not match attribute count")
                if not all(math.isfinite(v) for v in obs):
                    raise DataError("non-finite value in observation")

    @property
    def m(self) -> int:
        return len(self.cycles)

    @property
    def cycle_length(self) -> int:
        return len(self.cycles[0])

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def labels(self) -> tuple[PeriodLabel, ...]:
        return tuple(PeriodLabel(i + 1) for i in range(self.cycle_length))

    def attribute_index(self, name: str) -> int:
        try:
            return self.attributes.index(name)
        except ValueError:
            raise KeyError(f"unknown attribute {name!r}") from None

    def timeline(self, attribute: int | str) -> list[float]:
        """Concatenated values of one attribute across all cycles, in order."""
        idx = attribute if isinstance(attribute, int) else self.attribute_index(attribute)
        return [obs[idx] for cycle in self.cycles for obs in cycle]

    def label_at(self, position: int) -> PeriodLabel:
        return PeriodLabel(position % self.cycle_length + 1)


@dataclass(frozen=True)
class IngestConfig:
    """Either cycle_length (fixed-length segmentation) or label_column must be set."""

    cycle_length: int | None = None
    label_column: str | None = None
    attributes: tuple[str, ...] | None = None
    drop_missing: bool = True

    def __post_init__(self):
        if (self.cycle_length is None) == (self.label_column is None):
            raise ValueError("exactly one of cycle_length / label_column must be given")
        if self.cycle_length is not None and self.cycle_length < 1:
            raise ValueError("cycle_length must be >= 1")


def _parse_value(text: str) -> float | None:
    text = text.strip()
    if not text:
        return None
    try:
        value = float(text)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


def from_rows(rows: list[tuple[float, ...]], attributes: tuple[str, ...],
              cycle_length: int) -> TemporalSequenceDatabase:
    """Segment clean numeric rows into fixed-length cycles, dropping a trailing partial one."""
    m = len(rows) // cycle_length
    if m == 0:
        raise DataError(f"zero complete cycles ({len(rows)} rows, cycle_length={cycle_length})")
    dropped = len(rows) - m * cycle_length
    if dropped:
        log.warning("dropped %d trailing rows (partial cycle)", dropped)
    cycles = tuple(tuple(rows[k * cycle_length:(k + 1) * cycle_length]) for k in range(m))
    return TemporalSequenceDatabase(attributes, cycles)


def load_csv(path: str | Path, config: IngestConfig) -> TemporalSequenceDatabase:
    """Parse a headered CSV into a validated database.

    Rows with any missing or non-numeric attribute value are dropped whole
    (never imputed) before cycle segmentation; a trailing partial cycle is
    dropped with a warning.
    """
    path = Path(path)
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise DataError(f"zero complete cycles: {path} is empty") from None
            raw = list(reader)
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc

    header = [h.strip() for h in header]
    if config.attributes is not None:
        attributes = tuple(config.attributes)
        missing = [a for a in attributes if a not in header]
        if missing:
            raise DataError(f"attribute columns not in header: {missing}")
    else:
        attributes = tuple(h for h in header if h != config.label_column)
    if not attributes:
        raise DataError("no attribute columns")
    if config.label_column is not None and config.label_column not in header:
        raise DataError(f"label column {config.label_column!r} not in header")

    col_idx = [header.index(a) for a in attributes]
    label_idx = header.index(config.label_column) if config.label_column else None

    rows: list[tuple[float, ...]] = []
    row_labels: list[str] = []
    n_dropped = 0
    for line in raw:
        if not line or all(not c.strip() for c in line):
            continue
        values = [_parse_value(line[i]) if i < len(line) else None for i in col_idx]
        label = line[label_idx].strip() if label_idx is not None and label_idx < len(line) else None
        if any(v is None for v in values) or (label_idx is not None and not label):
            if not config.drop_missing:
                raise DataError("missing or non-numeric value and drop_missing is off")
            n_dropped += 1
            continue
        rows.append(tuple(values))
        if label_idx is not None:
            row_labels.append(label)
    if n_dropped:
        log.warning("dropped %d rows with missing or non-numeric values", n_dropped)

    if config.cycle_length is not None:
        return from_rows(rows, attributes, config.cycle_length)
    return _segment_by_labels(rows, row_labels, attributes)


def _segment_by_labels(rows, row_labels, attributes) -> TemporalSequenceDatabase:
    """Cycle structure from a calendar column: every cycle must repeat the
    first cycle's label sequence exactly once per label."""
    if not rows:
        raise DataError("zero complete cycles (no valid rows)")
    order: list[str] = []
    for lab in row_labels:
        if lab in order:
            break
        order.append(lab)
    length = len(order)
    m = len(rows) // length
    if m == 0:
        raise DataError("zero complete cycles")
    for k in range(m):
        block = row_labels[k * length:(k + 1) * length]
        if block != order:
            raise DataError(
                f"non-constant row count per period label: cycle {k + 1} is "
                f"{block}, expected {order}")
    dropped = len(rows) - m * length
    if dropped:
        log.warning("dropped %d trailing rows (partial cycle)", dropped)
    cycles = tuple(tuple(rows[k * length:(k + 1) * length]) for k in range(m))
    return TemporalSequenceDatabase(attributes, cycles)


def save_csv(db: TemporalSequenceDatabase, path: str | Path) -> Path:
    """Write the database back to CSV plus a JSON sidecar {m, l, n, attributes}.

    Values are written with repr so a reload is bit-identical.
    """
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(db.attributes)
        for cycle in db.cycles:
            for obs in cycle:
                writer.writerow([repr(v) for v in obs])
    sidecar = path.with_suffix(".json")
    sidecar.write_text(json.dumps({
        "m": db.m,
        "l": db.cycle_length,
        "n": db.n_attributes,
        "attributes": list(db.attributes),
    }, indent=2) + "\n")
    return path


def load_saved(path: str | Path) -> TemporalSequenceDatabase:
    """Reload a database written by save_csv, using its sidecar for the cycle length."""
    path = Path(path)
    meta = json.loads(path.with_suffix(".json").read_text())
    cfg = IngestConfig(cycle_length=meta["l"], attributes=tuple(meta["attributes"]))
    return load_csv(path, cfg)


# ---------------------------------------------------------------------------
# Synthetic data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlantSpec:
    """A co-variation planted on a window of periods with some per-cycle probability.

    items: (attribute name, direction) pairs that co-vary.
    window: inclusive 1-based period range (start, end) within one cycle.
    """

    items: tuple[tuple[str, Direction], ...]
    window: tuple[int, int]
    probability: float


@dataclass(frozen=True)
class SyntheticSpec:
    m: int
    cycle_length: int
    n_attributes: int
    plants: tuple[PlantSpec, ...] = ()
    attribute_names: tuple[str, ...] | None = None

    def names(self) -> tuple[str, ...]:
        if self.attribute_names is not None:
            return self.attribute_names
        return tuple(f"a{i + 1}" for i in range(self.n_attributes))


def generate_synthetic(spec: SyntheticSpec, seed: int) -> TemporalSequenceDatabase:
    """Deterministic synthetic database: a per-attribute random walk with
    planted monotone windows.

    A planted window is rebased just below (UP) or above (DOWN) its
    predecessor value so the run it creates starts exactly at the window,
    and non-planted cycles get one deliberately broken step inside the
    window. Consequence: the number of run-transactions containing the
    window equals the number of cycles where the plant fired.
    """
    names = spec.names()
    if len(names) != spec.n_attributes:
        raise ValueError("attribute_names length must equal n_attributes")
    ell = spec.cycle_length
    for plant in spec.plants:
        start, end = plant.window
        if not (1 <= start <= end <= ell):
            raise ValueError(f"plant window {plant.window} exceeds cycle length {ell}")
        if end - start + 1 < 2:
            raise ValueError("plant window must span at least 2 periods")
        if not 0.0 <= plant.probability <= 1.0:
            raise ValueError("plant probability outside [0, 1]")
        for attr, _ in plant.items:
            if attr not in names:
                raise ValueError(f"plant references unknown attribute {attr!r}")

    rng = random.Random(seed)
    fired = [[rng.random() < p.probability for p in spec.plants] for _ in range(spec.m)]

    timeline: dict[str, list[float]] = {}
    for name in names:
        walk = [rng.uniform(0.0, 100.0)]
        for _ in range(spec.m * ell - 1):
            walk.append(walk[-1] + rng.uniform(-5.0, 5.0))
        timeline[name] = walk

    for j in range(spec.m):
        for p_idx, plant in enumerate(spec.plants):
            start, end = plant.window
            lo = j * ell + start - 1
            hi = j * ell + end - 1
            width = hi - lo + 1
            break_at = None if fired[j][p_idx] else rng.randrange(width - 1)
            steps = [rng.uniform(0.5, 2.0) for _ in range(width - 1)]
            gap = rng.uniform(0.5, 2.0)
            for attr, direction in plant.items:
                walk = timeline[attr]
                sign = 1.0 if direction is Direction.UP else -1.0
                # rebase against the predecessor so no run extends into the window
                value = walk[lo - 1] - sign * gap if lo > 0 else walk[lo]
                walk[lo] = value
                for s_idx, step in enumerate(steps):
                    flip = -1.0 if s_idx == break_at else 1.0
                    value += sign * flip * step
                    walk[lo + 1 + s_idx] = value

    cycles = []
    for j in range(spec.m):
        cycle = []
        for t in range(j * ell, (j + 1) * ell):
            cycle.append(tuple(timeline[name][t] for name in names))
        cycles.append(tuple(cycle))
    return TemporalSequenceDatabase(names, tuple(cycles))
