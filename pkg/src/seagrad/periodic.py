"""Breadth-first mining of frequent patterns common to multiple transaction sequences.

The search is levelwise over label itemsets: level-1 tid-lists come from a
single scan, level-(k+1) candidates are prefix-joins of level-k survivors in
canonical label order, with per-sequence tid-list intersection and subset
pruning. The qualifying ratio counts sequences whose per-sequence support
meets the absolute threshold, which is anti-monotone and therefore prunes
safely.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Hashable

from .model import PeriodLabel, sort_labels


@dataclass(frozen=True)
class TransactionSequence:
    """One identified sequence of transactions (label sets) in fixed order."""

    sid: Hashable
    transactions: tuple[frozenset[PeriodLabel], ...]


@dataclass(frozen=True)
class PeriodicPattern:
    """A label itemset with the sequences that support it often enough."""

    itemset: frozenset[PeriodLabel]
    cover: frozenset
    supports: dict  # sid -> transaction count, for every sid where X occurs
    ratio: float

    def sorted_labels(self) -> tuple[PeriodLabel, ...]:
        return sort_labels(self.itemset)


def support_in_sequence(itemset: frozenset[PeriodLabel] | set,
                        seq: TransactionSequence) -> int:
    """Number of transactions of seq containing the itemset."""
    if not itemset:
        raise ValueError("itemset must be non-empty")
    itemset = frozenset(itemset)
    return sum(1 for t in seq.transactions if itemset <= t)


def occurrence_positions(itemset, seq: TransactionSequence) -> list[int]:
    """1-based transaction indices containing the itemset."""
    if not itemset:
        raise ValueError("itemset must be non-empty")
    itemset = frozenset(itemset)
    return [j + 1 for j, t in enumerate(seq.transactions) if itemset <= t]


def periods(itemset, seq: TransactionSequence) -> list[int]:
    """Gaps between consecutive occurrences, with virtual occurrences at both
    sequence boundaries (positions 0 and n). Always has occurrences+1 entries."""
    n = len(seq.transactions)
    points = [0] + occurrence_positions(itemset, seq) + [n]
    return [points[i + 1] - points[i] for i in range(len(points) - 1)]


def max_periodicity(itemset, seq: TransactionSequence) -> int:
    return max(periods(itemset, seq))


def stddev_periods(itemset, seq: TransactionSequence) -> float:
    """Population standard deviation of the periods."""
    return statistics.pstdev(periods(itemset, seq))


def ratio_modified(itemset, sequences, min_sup: int) -> float:
    """Fraction of sequences whose per-sequence support reaches min_sup."""
    if min_sup < 1:
        raise ValueError("min_sup must be >= 1")
    if not sequences:
        return 0.0
    hits = sum(1 for s in sequences if support_in_sequence(itemset, s) >= min_sup)
    return hits / len(sequences)


def ratio_classic(itemset, sequences, min_sup: int, max_pr: float,
                  max_std: float) -> float:
    """Fraction of sequences passing all three per-sequence thresholds
    (support, maximum periodicity, period standard deviation)."""
    if not sequences:
        return 0.0
    hits = 0
    for s in sequences:
        if (support_in_sequence(itemset, s) >= min_sup
                and max_periodicity(itemset, s) <= max_pr
                and stddev_periods(itemset, s) <= max_std):
            hits += 1
    return hits / len(sequences)


def _build_pattern(key: tuple[PeriodLabel, ...], tids: dict, n_seq: int,
                   min_sup: int) -> PeriodicPattern:
    supports = {sid: len(ixs) for sid, ixs in tids.items()}
    cover = frozenset(sid for sid, cnt in supports.items() if cnt >= min_sup)
    return PeriodicPattern(frozenset(key), cover, supports, len(cover) / n_seq)


def _intersect(t1: dict, t2: dict) -> dict:
    out = {}
    for sid, ixs in t1.items():
        other = t2.get(sid)
        if other is None:
            continue
        merged = sorted(set(ixs) & set(other))
        if merged:
            out[sid] = merged
    return out


def mine(sequences, min_sup: int, min_ra: float) -> list[PeriodicPattern]:
    """All itemsets whose qualifying ratio reaches min_ra, with cover and
    per-sequence supports.

    Output order is deterministic: by itemset size, then canonical label
    order. Ties never occur because itemsets are unique.
    """
    if min_sup < 1:
        raise ValueError("min_sup must be >= 1")
    if not 0.0 < min_ra <= 1.0:
        raise ValueError("min_ra must be in (0, 1]")
    sequences = list(sequences)
    n_seq = len(sequences)
    if n_seq == 0:
        return []

    singles: dict[PeriodLabel, dict] = {}
    for seq in sequences:
        for j, trans in enumerate(seq.transactions):
            for label in trans:
                singles.setdefault(label, {}).setdefault(seq.sid, []).append(j)

    patterns: list[PeriodicPattern] = []
    frontier: list[tuple[tuple[PeriodLabel, ...], dict]] = []
    for label in sorted(singles, key=lambda l: l.index):
        tids = singles[label]
        patt = _build_pattern((label,), tids, n_seq, min_sup)
        if patt.ratio >= min_ra:
            frontier.append(((label,), tids))
            patterns.append(patt)

    while len(frontier) >= 2:
        frequent_keys = {key for key, _ in frontier}
        nxt: list[tuple[tuple[PeriodLabel, ...], dict]] = []
        for i, (k1, t1) in enumerate(frontier):
            for k2, t2 in frontier[i + 1:]:
                if k1[:-1] != k2[:-1]:
                    break  # frontier is sorted, shared prefixes are contiguous
                cand = k1 + (k2[-1],)
                if len(cand) > 2 and any(
                        cand[:p] + cand[p + 1:] not in frequent_keys
                        for p in range(len(cand) - 2)):
                    continue
                tids = _intersect(t1, t2)
                if not tids:
                    continue
                patt = _build_pattern(cand, tids, n_seq, min_sup)
                if patt.ratio >= min_ra:
                    nxt.append((cand, tids))
                    patterns.append(patt)
        frontier = nxt
    return patterns


def is_cyclic_interval(itemset, cycle_length: int) -> bool:
    """True iff the labels form one contiguous arc on the d1..d_l ring."""
    indices = sorted(l.index for l in itemset)
    if not indices or len(indices) == cycle_length:
        return bool(indices)
    gaps = 0
    for a, b in zip(indices, indices[1:] + [indices[0] + cycle_length]):
        if b - a != 1:
            gaps += 1
    return gaps == 1
