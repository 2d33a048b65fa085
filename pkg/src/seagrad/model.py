"""Shared vocabulary: within-cycle period labels, variation directions, gradual items."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class Direction(Enum):
    UP = "up"
    DOWN = "down"

    @property
    def sign(self) -> str:
        return "+" if self is Direction.UP else "-"

    def flipped(self) -> "Direction":
        return Direction.DOWN if self is Direction.UP else Direction.UP

    @classmethod
    def from_sign(cls, sign: str) -> "Direction":
        if sign == "+":
            return cls.UP
        if sign == "-":
            return cls.DOWN
        raise ValueError(f"unknown direction sign {sign!r} (expected '+' or '-')")


@dataclass(frozen=True, order=True)
class PeriodLabel:
    """Position within a cycle, 1-based. Displayed as d1, d2, ..."""

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"period index must be >= 1, got {self.index}")

    @property
    def display(self) -> str:
        return f"d{self.index}"

    def __repr__(self) -> str:
        return self.display


_LABEL_RE = re.compile(r"^d(\d+)$")


def parse_label(text: str) -> PeriodLabel:
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed period label {text!r} (expected like 'd3')")
    return PeriodLabel(int(m.group(1)))


@dataclass(frozen=True)
class GradualItem:
    """An attribute paired with a variation direction."""

    attribute: str
    direction: Direction

    @property
    def display(self) -> str:
        return f"{self.attribute}^{self.direction.sign}"

    def __repr__(self) -> str:
        return self.display


def parse_gradual_item(text: str) -> GradualItem:
    text = text.strip()
    if "^" not in text:
        raise ValueError(f"malformed gradual item {text!r} (expected like 'age^+')")
    attr, _, sign = text.rpartition("^")
    if not attr:
        raise ValueError(f"malformed gradual item {text!r}: empty attribute name")
    return GradualItem(attr, Direction.from_sign(sign))


def sort_labels(labels) -> tuple[PeriodLabel, ...]:
    """Canonical label order: d1 < d2 < ... (cycle-position order)."""
    return tuple(sorted(labels, key=lambda l: l.index))
