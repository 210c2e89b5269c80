"""Partial spreads, spreads and line parallelisms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import AmbientMismatch, DimMismatch, NotLines
from .projlinalg import PointIndex, Subspace

if TYPE_CHECKING:
    from .colorings import Coloring


@dataclass(frozen=True)
class SpreadVerdict:
    size: int
    points_covered: int
    is_partial_spread: bool
    is_spread: bool


@dataclass(frozen=True)
class ParallelismSummary:
    classes: int
    spread_classes: int
    non_spread_classes: int
    is_parallelism: bool

    def to_dict(self) -> dict:
        return {"classes": self.classes, "spread_classes": self.spread_classes,
                "non_spread_classes": self.non_spread_classes,
                "is_parallelism": self.is_parallelism}


def verdict_from_masks(masks: Sequence[int], num_points: int) -> SpreadVerdict:
    union = 0
    total = 0
    for mk in masks:
        union |= mk
        total += mk.bit_count()
    covered = union.bit_count()
    partial = covered == total
    return SpreadVerdict(len(masks), covered, partial, partial and covered == num_points)


def classify_class(lines: Sequence[Subspace], index: PointIndex | None = None) -> SpreadVerdict:
    """Classify a set of lines (2-spaces) of PG(n-1, q)."""
    if not lines:
        raise ValueError("empty class")
    n = lines[0].n
    for s in lines:
        if s.dim != 2:
            raise DimMismatch(f"expected lines, got a {s.dim}-space")
        if s.n != n:
            raise AmbientMismatch(f"ambient {s.n} vs {n}")
    if index is None:
        index = PointIndex(n, lines[0].F)
    return verdict_from_masks([index.mask(s) for s in lines], len(index))


def class_verdicts(c: "Coloring") -> dict[int, SpreadVerdict]:
    g = c.graph
    if g.family not in ("grassmann", "qkneser") or g.params["m"] != 2:
        raise NotLines("spread classification needs a coloring of lines")
    groups: dict[int, list[int]] = {}
    for v, col in enumerate(c.color_of):
        groups.setdefault(col, []).append(g.masks[v])
    npts = len(g.points)
    return {col: verdict_from_masks(ms, npts) for col, ms in sorted(groups.items())}


def classify_coloring(c: "Coloring") -> ParallelismSummary:
    verdicts = class_verdicts(c)
    spreads = sum(v.is_spread for v in verdicts.values())
    return ParallelismSummary(len(verdicts), spreads, len(verdicts) - spreads,
                              spreads == len(verdicts))
