"""Support-threshold sweep harness: pattern counts, seasonality counts and
wall-clock runtimes per cell, emitted as plot-ready CSV."""

from __future__ import annotations

import csv
import logging
import statistics
import time
from dataclasses import dataclass
from pathlib import Path

from .baseline import mine_temporal
from .ingest import TemporalSequenceDatabase
from .seasonal import count_report, mine_seasonal

log = logging.getLogger(__name__)

ALGORITHMS = ("msgp", "temporal")


@dataclass(frozen=True)
class BenchRecord:
    theta: float
    algorithm: str
    n_patterns: int | None
    n_seasonality: int | None
    runtime_ms: float | None
    error: str | None = None


def _run_cell(db: TemporalSequenceDatabase, theta: float, algorithm: str,
              repeats: int) -> BenchRecord:
    def call():
        if algorithm == "msgp":
            return mine_seasonal(db, theta)
        return mine_temporal(db, theta)

    timings = []
    results = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        results = call()
        timings.append((time.perf_counter() - t0) * 1000.0)
    runtime_ms = statistics.median(timings)
    if algorithm == "msgp":
        n_patterns, n_seasonality = count_report(results)
    else:
        n_patterns, n_seasonality = len(results), None
    return BenchRecord(theta, algorithm, n_patterns, n_seasonality, runtime_ms)


def run_sweep(db: TemporalSequenceDatabase, thetas, algorithms=ALGORITHMS,
              repeats: int = 3) -> list[BenchRecord]:
    """One record per (theta, algorithm), timed around the mining call only.

    Counts are deterministic; runtime is the median of `repeats` repetitions.
    A failing cell is recorded with its error and the sweep continues.
    Cells run sequentially so timings are uncontended.
    """
    thetas = list(thetas)
    if any(not 0.0 < t <= 1.0 for t in thetas):
        raise ValueError("every theta must be in (0, 1]")
    if thetas != sorted(thetas):
        raise ValueError("thetas must be sorted ascending")
    unknown = [a for a in algorithms if a not in ALGORITHMS]
    if unknown:
        raise ValueError(f"unknown algorithms: {unknown}")

    records = []
    for algorithm in algorithms:
        for theta in thetas:
            try:
                records.append(_run_cell(db, theta, algorithm, repeats))
            except Exception as exc:  # record the cell failure, keep sweeping
                log.warning("sweep cell (%s, theta=%s) failed: %s", algorithm, theta, exc)
                records.append(BenchRecord(theta, algorithm, None, None, None, str(exc)))
    return records


CSV_HEADER = ("theta", "algorithm", "n_patterns", "n_seasonality", "runtime_ms")


def emit_plot_data(records, path: str | Path) -> Path:
    """Write records as CSV with a stable row order (algorithm, then theta)."""
    records = list(records)
    if not records:
        raise ValueError("no records to emit")
    path = Path(path)
    rows = sorted(records, key=lambda r: (r.algorithm, r.theta))
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER)
            for r in rows:
                writer.writerow([
                    repr(r.theta),
                    r.algorithm,
                    "" if r.n_patterns is None else r.n_patterns,
                    "" if r.n_seasonality is None else r.n_seasonality,
                    "" if r.runtime_ms is None else repr(r.runtime_ms),
                ])
    except OSError as exc:
        raise ValueError(f"cannot write {path}: {exc}") from exc
    return path


def load_plot_data(path: str | Path) -> list[BenchRecord]:
    """Parse a CSV written by emit_plot_data back into records."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise ValueError(f"unexpected header {header}")
        out = []
        for row in reader:
            theta, algorithm, n_pat, n_sea, runtime = row
            out.append(BenchRecord(
                float(theta), algorithm,
                int(n_pat) if n_pat else None,
                int(n_sea) if n_sea else None,
                float(runtime) if runtime else None))
    return out
