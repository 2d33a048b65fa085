"""End-to-end seasonal mining: derive the run-sequence database, mine periodic
label itemsets, and map each back to the gradual items that share it as a season."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gradual import GammaDatabase, build_gamma
from .ingest import TemporalSequenceDatabase
from .model import GradualItem, PeriodLabel, sort_labels
from .periodic import is_cyclic_interval, mine, support_in_sequence


@dataclass(frozen=True)
class SeasonalGradualPattern:
    """Gradual items that all recur over the same season, plus support metadata.

    support = min per-item season count / number of cycles, reported raw
    rather than clamped. For run databases produced by build_gamma it cannot
    exceed 1: maximal runs are position-disjoint and every label occurs once
    per cycle, so at most m runs can contain a given season.
    """

    items: frozenset[GradualItem]
    season: frozenset[PeriodLabel]
    support: float
    per_item_support: dict

    def sorted_items(self) -> tuple[GradualItem, ...]:
        return tuple(sorted(self.items, key=lambda g: g.display))

    def sorted_season(self) -> tuple[PeriodLabel, ...]:
        return sort_labels(self.season)


def min_sup_from_theta(theta: float, m: int) -> int:
    if not 0.0 < theta <= 1.0:
        raise ValueError(f"theta must be in (0, 1], got {theta}")
    return math.ceil(theta * m)


def seasonal_support(items, season, gamma: GammaDatabase, m: int) -> float:
    """Minimum per-item season count across the pattern's items, over m cycles."""
    by_item = {seq.sid: seq for seq in gamma.sequences()}
    counts = []
    for item in items:
        if item not in by_item:
            raise ValueError(f"gradual item {item.display} missing from the run database")
        counts.append(support_in_sequence(season, by_item[item]))
    return min(counts) / m


def mine_seasonal(db: TemporalSequenceDatabase, theta: float | None = None, *,
                  min_sup_abs: int | None = None, cross_boundary: bool = True,
                  strict: bool = True, contiguous_only: bool = False,
                  all_seasons: bool = False, min_items: int = 1,
                  prune_subsumed: bool = False) -> list[SeasonalGradualPattern]:
    """Mine all frequent seasonal gradual patterns of the database.

    The per-sequence support threshold is ceil(theta * m) unless min_sup_abs
    overrides it; the ratio threshold is fixed at 1/|entries| so every itemset
    supported often enough by at least one gradual item survives. By default
    only seasons maximal for their item-set are reported; all_seasons keeps
    every qualifying season, and prune_subsumed instead drops any pattern
    whose item-set is a subset of an already-emitted one.
    """
    if min_sup_abs is not None:
        if min_sup_abs < 1:
            raise ValueError("min_sup_abs must be >= 1")
        min_sup = min_sup_abs
    else:
        if theta is None:
            raise ValueError("either theta or min_sup_abs is required")
        min_sup = min_sup_from_theta(theta, db.m)

    gamma = build_gamma(db, cross_boundary=cross_boundary, strict=strict)
    sequences = gamma.sequences()
    mined = mine(sequences, min_sup, 1.0 / len(sequences))

    if contiguous_only:
        mined = [p for p in mined if is_cyclic_interval(p.itemset, db.cycle_length)]

    results = []
    for patt in mined:
        items = patt.cover
        if len(items) < min_items:
            continue
        per_item = {item: patt.supports[item] for item in items}
        support = min(per_item.values()) / db.m
        results.append(SeasonalGradualPattern(items, patt.itemset, support, per_item))

    if prune_subsumed:
        # order-sensitive by design: a pattern is dropped when its item-set is
        # a subset of one already emitted, so keep the mining emission order
        kept: list[SeasonalGradualPattern] = []
        for pattern in results:
            if any(pattern.items <= prior.items for prior in kept):
                continue
            kept.append(pattern)
        return kept
    if not all_seasons:
        by_items: dict[frozenset, list[SeasonalGradualPattern]] = {}
        for pattern in results:
            by_items.setdefault(pattern.items, []).append(pattern)
        results = [p for group in by_items.values() for p in group
                   if not any(p.season < q.season for q in group)]

    results.sort(key=lambda p: ([g.display for g in p.sorted_items()],
                                [l.index for l in p.sorted_season()]))
    return results


def count_report(results) -> tuple[int, int]:
    """(distinct item-sets, distinct item-set/season pairs)."""
    n_patterns = len({p.items for p in results})
    n_seasonality = len({(p.items, p.season) for p in results})
    return n_patterns, n_seasonality
