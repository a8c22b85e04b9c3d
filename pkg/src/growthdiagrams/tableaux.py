"""Tableaux as chains of partitions.

A (dual) semistandard Young tableau with entries at most n is the same thing
as a chain of n+1 partitions whose consecutive differences are horizontal
(dual: vertical) strips: entry i fills the cells of chain[i]/chain[i-1].
Skew tableaux are chains starting at a nonempty partition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .partitions import (
    EMPTY,
    Partition,
    is_horizontal_strip,
    is_vertical_strip,
    part,
    partition,
    size,
)


class StepKind(str, Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class TableauChain:
    chain: tuple[Partition, ...]
    steps: StepKind = StepKind.HORIZONTAL

    def __post_init__(self) -> None:
        if not self.chain:
            raise ValueError("a tableau chain needs at least one partition")
        ok = is_horizontal_strip if self.steps is StepKind.HORIZONTAL else is_vertical_strip
        for a, b in zip(self.chain, self.chain[1:]):
            if not ok(a, b):
                raise ValueError(f"{b}/{a} is not a {self.steps.value} strip")

    @property
    def entries(self) -> int:
        """Largest allowed entry (the number of steps)."""
        return len(self.chain) - 1

    @property
    def shape(self) -> Partition:
        return self.chain[-1]

    @property
    def inner_shape(self) -> Partition:
        return self.chain[0]

    def weight(self) -> Counter[int]:
        """Multiset of entries: weight[i] = |chain[i]/chain[i-1]|."""
        return Counter(
            {
                i: size(self.chain[i]) - size(self.chain[i - 1])
                for i in range(1, len(self.chain))
                if size(self.chain[i]) > size(self.chain[i - 1])
            }
        )

    def entry_at(self, col: int, row: int) -> int | None:
        """Entry in cell (col, row); None outside the shape, 0 in the inner shape."""
        if col > part(self.shape, row):
            return None
        for i, shape in enumerate(self.chain):
            if col <= part(shape, row):
                return i
        return None

    def to_rows(self) -> list[list[int]]:
        """Row fillings, bottom row first; only for straight shapes."""
        if self.inner_shape != EMPTY:
            raise ValueError("to_rows only renders straight-shape tableaux")
        rows = []
        for r in range(1, len(self.shape) + 1):
            rows.append([self.entry_at(c, r) for c in range(1, self.shape[r - 1] + 1)])
        return rows

    @classmethod
    def from_rows(cls, rows: list[list[int]], entries: int | None = None,
                  steps: StepKind = StepKind.HORIZONTAL) -> "TableauChain":
        """Build a chain from a straight-shape filling (bottom row first)."""
        top = max((v for row in rows for v in row), default=0)
        n = entries if entries is not None else top
        if top > n:
            raise ValueError(f"entry {top} exceeds {n}")
        chain = []
        for i in range(n + 1):
            chain.append(partition(sum(1 for v in row if v <= i) for row in rows))
        return cls(tuple(chain), steps)

    @classmethod
    def trivial(cls, base: Partition, length: int,
                steps: StepKind = StepKind.HORIZONTAL) -> "TableauChain":
        """The constant chain (base, base, ..., base) of the given length."""
        return cls((base,) * (length + 1), steps)
