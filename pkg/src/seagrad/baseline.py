"""Reference temporal gradual pattern miner over the concatenated timeline,
used to compare pattern counts and runtimes against the seasonal miner."""

from __future__ import annotations

from dataclasses import dataclass

from .gradual import _pair_ok
from .ingest import TemporalSequenceDatabase
from .model import Direction, GradualItem


@dataclass(frozen=True)
class TemporalGradualPattern:
    """A set of gradual items with the fraction of consecutive couples satisfying all of them."""

    items: frozenset[GradualItem]
    support: float

    def sorted_items(self) -> tuple[GradualItem, ...]:
        return tuple(sorted(self.items, key=lambda g: g.display))


def _couple_masks(db: TemporalSequenceDatabase, strict: bool,
                  cross_boundary: bool) -> tuple[dict[GradualItem, int], int]:
    """Bitmask per gradual item over the considered couples (bit t = couple t satisfied)."""
    ell = db.cycle_length
    total = db.m * ell
    couples = [t for t in range(total - 1)
               if cross_boundary or (t + 1) % ell != 0]
    masks = {}
    for attr in db.attributes:
        values = db.timeline(attr)
        for direction in (Direction.UP, Direction.DOWN):
            mask = 0
            for bit, t in enumerate(couples):
                if _pair_ok(values[t], values[t + 1], direction, strict):
                    mask |= 1 << bit
            masks[GradualItem(attr, direction)] = mask
    return masks, len(couples)


def mine_temporal(db: TemporalSequenceDatabase, theta: float, *,
                  strict: bool = True,
                  cross_boundary: bool = True) -> list[TemporalGradualPattern]:
    """Levelwise mining over the 2n gradual items.

    A couple (t, t+1) supports a pattern iff every item's direction holds
    between the two observations; support is the fraction of couples doing
    so. Patterns pairing both directions of one attribute are contradictory
    and never generated. Same comparison semantics and boundary adjacency as
    the run scanner, so counts are comparable.
    """
    if not 0.0 < theta <= 1.0:
        raise ValueError(f"theta must be in (0, 1], got {theta}")
    masks, n_couples = _couple_masks(db, strict, cross_boundary)
    if n_couples == 0:
        return []

    order = {GradualItem(attr, direction): (i, direction is Direction.DOWN)
             for i, attr in enumerate(db.attributes)
             for direction in (Direction.UP, Direction.DOWN)}
    items = sorted(masks, key=lambda g: order[g])

    patterns: list[TemporalGradualPattern] = []
    frontier: list[tuple[tuple[GradualItem, ...], int]] = []
    for item in items:
        mask = masks[item]
        support = mask.bit_count() / n_couples
        if support >= theta:
            frontier.append(((item,), mask))
            patterns.append(TemporalGradualPattern(frozenset((item,)), support))

    while len(frontier) >= 2:
        frequent_keys = {key for key, _ in frontier}
        nxt = []
        for i, (k1, m1) in enumerate(frontier):
            for k2, m2 in frontier[i + 1:]:
                if k1[:-1] != k2[:-1]:
                    break
                if k1[-1].attribute == k2[-1].attribute:
                    continue  # would pair up and down of one attribute
                cand = k1 + (k2[-1],)
                if len(cand) > 2 and any(
                        cand[:p] + cand[p + 1:] not in frequent_keys
                        for p in range(len(cand) - 2)):
                    continue
                mask = m1 & m2
                support = mask.bit_count() / n_couples
                if support >= theta:
                    nxt.append((cand, mask))
                    patterns.append(TemporalGradualPattern(frozenset(cand), support))
        frontier = nxt

    patterns.sort(key=lambda p: (len(p.items), [g.display for g in p.sorted_items()]))
    return patterns
