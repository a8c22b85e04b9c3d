"""Triangular (dual) growth diagrams and the Littlewood bijections.

A triangular array C = (c[i][j], 1 <= i <= j <= n) labels the upper-triangular
vertex set (i, j), 0 <= i <= j <= n.  Full squares follow the variant's base
rule exactly as in rectangular growths; the diagonal (partial) squares

        mu --- lam
                |        nu = proj_apply(proj, lam, |lam/mu| + c[i][i], mu)
               nu

use the variant's projection bijection, which keeps the diagonal chain inside
the variant's partition family.  Reading the last column yields the tableau of
the Littlewood correspondence.  In dual grids (asymmetric variants) j-steps
are vertical strips; i-steps are always horizontal, so the output is an SSYT.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .interlacing import DomainError
from .partitions import (
    EMPTY,
    Family,
    Partition,
    is_horizontal_strip,
    is_vertical_strip,
    meet,
    member,
    partitions_of_size,
    size,
)
from .projections import ProjRule, proj_apply, proj_rule, proj_unapply
from .rules import Rule, apply_rule, unapply_rule
from .tableaux import StepKind, TableauChain

#: canonical base rule per variant (the pairings of the classical insertion
#: algorithms for these identities)
CANONICAL_BASE = {
    Family.EVEN_COLS: Rule.ROW,
    Family.ALL: Rule.ROW,
    Family.EVEN_ROWS: Rule.COL,
    Family.ASYM_PLUS: Rule.DUAL_ROW,
    Family.ASYM_MINUS: Rule.DUAL_COL,
}

#: allowed diagonal entries per variant; None means any non-negative integer
DIAGONAL_DOMAIN = {
    Family.EVEN_COLS: (0,),
    Family.ALL: None,
    Family.EVEN_ROWS: None,  # any even value
    Family.ASYM_PLUS: (0,),
    Family.ASYM_MINUS: (0, 2),
}


@dataclass(frozen=True)
class LittlewoodVariant:
    family: Family
    base_rule: Rule
    proj: ProjRule

    @property
    def dual(self) -> bool:
        return self.base_rule.dual


def littlewood_variant(family: Family, base_rule: Rule | None = None,
                       star=None) -> LittlewoodVariant:
    """A variant with canonical defaults; base rule duality must match the family."""
    family = Family(family)
    base = base_rule if base_rule is not None else CANONICAL_BASE[family]
    needs_dual = family in (Family.ASYM_PLUS, Family.ASYM_MINUS)
    if base.dual != needs_dual:
        raise ValueError(f"{family.value} requires a {'dual' if needs_dual else 'non-dual'} rule")
    pbase = base if family in (Family.ALL, Family.EVEN_ROWS) else None
    return LittlewoodVariant(family, base, proj_rule(family, pbase, star))


@dataclass(frozen=True)
class TriangularArray:
    """Entries c[i][j] for 1 <= i <= j <= n, stored as rows[i-1][j-i]."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"need {self.n} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != self.n - i + 1:
                raise ValueError(f"row {i} must have {self.n - i + 1} entries")
            if any(not isinstance(v, int) or v < 0 for v in row):
                raise ValueError(f"row {i} has a negative or non-integer entry")

    def entry(self, i: int, j: int) -> int:
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"({i},{j}) outside the triangle")
        return self.rows[i - 1][j - i]

    def column(self, j: int) -> tuple[int, ...]:
        """Entries c[1][j], ..., c[j][j]."""
        return tuple(self.entry(i, j) for i in range(1, j + 1))


def triangular_array(rows: Sequence[Sequence[int]]) -> TriangularArray:
    return TriangularArray(len(rows), tuple(tuple(int(v) for v in row) for row in rows))


def validate_entries(variant: LittlewoodVariant, array: TriangularArray) -> None:
    """Check the entry domains the variant's identity imposes."""
    diag = DIAGONAL_DOMAIN[variant.family]
    for i in range(1, array.n + 1):
        for j in range(i, array.n + 1):
            v = array.entry(i, j)
            if i == j:
                if diag is not None and v not in diag:
                    raise ValueError(
                        f"diagonal entry c[{i}][{i}] = {v} outside {diag} "
                        f"for {variant.family.value}"
                    )
                if variant.family is Family.EVEN_ROWS and v % 2:
                    raise ValueError(f"diagonal entry c[{i}][{i}] = {v} must be even")
            elif variant.dual and v > 1:
                raise ValueError(f"entry c[{i}][{j}] = {v} must be 0 or 1 for dual variants")


@dataclass(frozen=True)
class TriGrid:
    """Vertex labels rows[i][j - i] = partition at (i, j), for i <= j <= n."""

    rows: tuple[tuple[Partition, ...], ...]
    array: TriangularArray
    variant: LittlewoodVariant

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    def vertex(self, i: int, j: int) -> Partition:
        if not 0 <= i <= j <= self.n:
            raise IndexError(f"({i},{j}) outside the triangle")
        return self.rows[i][j - i]


def _default_border(variant: LittlewoodVariant, n: int,
                    S: TableauChain | None) -> TableauChain:
    steps = StepKind.VERTICAL if variant.dual else StepKind.HORIZONTAL
    if S is None:
        return TableauChain.trivial(EMPTY, n, steps)
    if S.steps is not steps:
        raise ValueError(f"border must be a {steps.value}-strip chain")
    if S.entries != n:
        raise ValueError(f"border must have {n} steps, got {S.entries}")
    return S


def build_triangular(
    variant: LittlewoodVariant,
    array: TriangularArray,
    S: TableauChain | None = None,
) -> TriGrid:
    """The unique triangular (dual) growth over the array with border
    vertices(0, j) = S^(j); columns are swept left to right, diagonal last."""
    n = array.n
    validate_entries(variant, array)
    S = _default_border(variant, n, S)
    grid: list[list[Partition]] = [[EMPTY] * (n + 1 - i) for i in range(n + 1)]
    for j in range(n + 1):
        grid[0][j] = S.chain[j]
    for j in range(1, n + 1):
        for i in range(1, j):
            mu = grid[i - 1][j - 1 - (i - 1)]
            lam = grid[i][j - 1 - i]
            rho = grid[i - 1][j - (i - 1)]
            k = size(meet(lam, rho)) - size(mu) + array.entry(i, j)
            grid[i][j - i] = apply_rule(variant.base_rule, lam, rho, k, mu)
        mu = grid[j - 1][0]
        lam = grid[j - 1][1]
        k = size(lam) - size(mu) + array.entry(j, j)
        grid[j][0] = proj_apply(variant.proj, lam, k, mu)
    return TriGrid(tuple(tuple(r) for r in grid), array, variant)


def extract_P(grid: TriGrid) -> TableauChain:
    """The tableau read off the last column: shape at entries <= i is vertex(i, n)."""
    n = grid.n
    return TableauChain(tuple(grid.vertex(i, n) for i in range(n + 1)))


def littlewood_map(
    variant: LittlewoodVariant,
    array: TriangularArray,
    S: TableauChain | None = None,
) -> TableauChain:
    return extract_P(build_triangular(variant, array, S))


def littlewood_inverse(
    variant: LittlewoodVariant, P: TableauChain
) -> tuple[TriangularArray, TableauChain]:
    """Invert littlewood_map: recover the array and the border chain from P."""
    if P.steps is not StepKind.HORIZONTAL:
        raise ValueError("P must be a horizontal-strip chain")
    n = P.entries
    if not member(P.shape, variant.family):
        raise DomainError(f"{P.shape} is not in family {variant.family.value}")
    grid: list[list[Partition | None]] = [[None] * (n + 1 - i) for i in range(n + 1)]
    for i in range(n + 1):
        grid[i][n - i] = P.chain[i]
    rows = [[0] * (n - i) for i in range(n)]
    for j in range(n, 0, -1):
        nu = grid[j][0]
        lam = grid[j - 1][1]
        mu, c = proj_unapply(variant.proj, lam, nu)
        grid[j - 1][0] = mu
        rows[j - 1][0] = c
        for i in range(j - 1, 0, -1):
            lam = grid[i][j - 1 - i]
            rho = grid[i - 1][j - (i - 1)]
            nu = grid[i][j - i]
            mu, a = unapply_rule(variant.base_rule, lam, rho, nu)
            grid[i - 1][j - 1 - (i - 1)] = mu
            rows[i - 1][j - i] = a
    steps = StepKind.VERTICAL if variant.dual else StepKind.HORIZONTAL
    border = TableauChain(tuple(grid[0][j] for j in range(n + 1)), steps)
    return TriangularArray(n, tuple(tuple(r) for r in rows)), border


def triangular_insert(
    variant: LittlewoodVariant, tableau: TableauChain, column: Sequence[int]
) -> TableauChain:
    """Insert one triangular column: bump-insert the off-diagonal entries, then
    place the next entry on the cells the projection image adds.

    This is the insertion view of build_triangular for straight borders;
    skew diagrams go through build_triangular directly.
    """
    from .growth import insert

    i = tableau.entries + 1
    if len(column) != i:
        raise ValueError(f"column {i} needs {i} entries, got {len(column)}")
    off, diag = column[:-1], column[-1]
    hat = insert(variant.base_rule, tableau, dict(enumerate(off, start=1)))
    lam = hat.shape
    mu = tableau.shape
    k = size(lam) - size(mu) + diag
    nu = proj_apply(variant.proj, lam, k, mu)
    return TableauChain(hat.chain + (nu,), tableau.steps)


def littlewood_insert(
    variant: LittlewoodVariant, array: TriangularArray
) -> TableauChain:
    """littlewood_map computed column by column through triangular_insert."""
    tab = TableauChain((EMPTY,))
    for j in range(1, array.n + 1):
        tab = triangular_insert(variant, tab, array.column(j))
    return tab


# ---------------------------------------------------------------------------
# Brute-force enumeration of all triangular (dual) growths of an array.

def triangular_size(array: TriangularArray, i: int, j: int) -> int:
    """|vertex(i, j)| for trivial borders: sum of c[k][l] for k < l <= i plus
    sum for k <= i, k <= l <= j."""
    total = 0
    for k in range(1, i + 1):
        for l in range(k, array.n + 1):
            if l <= i and l > k:
                total += array.entry(k, l)
            if l <= j:
                total += array.entry(k, l)
    return total


def enumerate_triangular_growths(
    array: TriangularArray, dual: bool = False
) -> list[tuple[tuple[Partition, ...], ...]]:
    """All vertex assignments satisfying the strip conditions and the size law
    (straight border); exponential, for small arrays only."""
    n = array.n
    cells = [(i, j) for i in range(n + 1) for j in range(i, n + 1)]
    jstrip = is_vertical_strip if dual else is_horizontal_strip
    by_size: dict[int, list[Partition]] = {}
    grid: list[list[Partition]] = [[EMPTY] * (n + 1 - i) for i in range(n + 1)]
    found = []

    def rec(pos: int) -> None:
        if pos == len(cells):
            found.append(tuple(tuple(row) for row in grid))
            return
        i, j = cells[pos]
        s = triangular_size(array, i, j)
        if s not in by_size:
            by_size[s] = partitions_of_size(s)
        for p in by_size[s]:
            if i > 0 and not is_horizontal_strip(grid[i - 1][j - (i - 1)], p):
                continue
            if j > i and not jstrip(grid[i][j - 1 - i], p):
                continue
            grid[i][j - i] = p
            rec(pos + 1)

    rec(0)
    return found
