"""Up/down sets, ribbon profiles, and position-multiset encodings.

For a pair of partitions (lam, rho) the four sets are

    up_set(lam, rho, k)        {nu : lam < nu > rho,  |nu/(lam v rho)| = k}
    down_set(lam, rho, k)      {mu : lam > mu < rho,  |(lam ^ rho)/mu| = k}

and their dual variants where the strip condition on the rho side (down) or
the lam side (up) is vertical instead of horizontal.  The sets are computed by
exhaustive search over a provably complete envelope; the structured encodings
below identify their elements with multisets of ribbon positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .partitions import (
    Partition,
    conj_part,
    contains,
    is_horizontal_strip,
    is_vertical_strip,
    join,
    meet,
    part,
)

INFINITE = math.inf


class DomainError(ValueError):
    """Input outside the set an operation is defined on."""


class CapacityError(DomainError):
    """A position multiset exceeds a ribbon capacity."""


class ProfileKind(str, Enum):
    REMOVABLE = "removable"
    ADDABLE = "addable"
    DUAL_REMOVABLE = "dual-removable"
    DUAL_ADDABLE = "dual-addable"


class Direction(str, Enum):
    DOWN = "down"
    UP = "up"


@dataclass(frozen=True)
class ProfileEntry:
    position: int
    row: int
    capacity: int | float  # INFINITE only at addable position 0


@dataclass(frozen=True)
class RibbonProfile:
    kind: ProfileKind
    entries: tuple[ProfileEntry, ...]

    def by_position(self) -> dict[int, ProfileEntry]:
        return {e.position: e for e in self.entries}


def profile(lam: Partition, rho: Partition, kind: ProfileKind) -> RibbonProfile:
    """Maximal removable/addable (dual) ribbons of (lam, rho), positions bottom-up."""
    if kind is ProfileKind.REMOVABLE:
        entries = tuple(
            ProfileEntry(i + 1, row, cap)
            for i, (row, cap) in enumerate(_removable_rows(lam, rho))
        )
    elif kind is ProfileKind.ADDABLE:
        added = [ProfileEntry(0, 1, INFINITE)]
        # each removable ribbon in row r pairs with an addable ribbon of the
        # same capacity in row r+1
        added.extend(
            ProfileEntry(i + 1, row + 1, cap)
            for i, (row, cap) in enumerate(_removable_rows(lam, rho))
        )
        entries = tuple(added)
    elif kind is ProfileKind.DUAL_REMOVABLE:
        entries = tuple(
            ProfileEntry(i + 1, row, 1)
            for i, row in enumerate(_dual_removable_rows(lam, rho))
        )
    elif kind is ProfileKind.DUAL_ADDABLE:
        entries = tuple(
            ProfileEntry(i, row, 1)
            for i, row in enumerate(_dual_addable_rows(lam, rho))
        )
    else:
        raise ValueError(f"unknown profile kind {kind!r}")
    return RibbonProfile(kind, entries)


@lru_cache(maxsize=1 << 17)
def _removable_rows(lam: Partition, rho: Partition) -> tuple[tuple[int, int], ...]:
    """(row, capacity) of the maximal removable ribbons of lam ^ rho, bottom-up."""
    base = meet(lam, rho)
    out = []
    for r in range(1, len(base) + 1):
        lo = max(part(lam, r + 1), part(rho, r + 1))
        hi = base[r - 1]
        if hi > lo:
            out.append((r, hi - lo))
    return tuple(out)


@lru_cache(maxsize=1 << 17)
def _dual_removable_rows(lam: Partition, rho: Partition) -> tuple[int, ...]:
    """Rows of the inner corners of lam ^ rho that are dual removable."""
    base = meet(lam, rho)
    out = []
    for r in range(1, len(base) + 1):
        x = base[r - 1]
        if part(base, r + 1) == x:
            continue  # not an inner corner
        if x > part(lam, r + 1) and r > conj_part(rho, x + 1):
            out.append(r)
    return tuple(out)


@lru_cache(maxsize=1 << 17)
def _dual_addable_rows(lam: Partition, rho: Partition) -> tuple[int, ...]:
    """Rows of the outer corners of lam v rho that are dual addable."""
    base = join(lam, rho)
    out = []
    for r in range(1, len(base) + 2):
        x = part(base, r) + 1
        if r > 1 and part(base, r - 1) < x:
            continue  # not an outer corner
        if part(lam, r) == x - 1 and conj_part(rho, x) == r - 1:
            out.append(r)
    return tuple(out)


# ---------------------------------------------------------------------------
# Brute-force oracles.  The searches run over the per-row ranges that the
# interlacing characterization of horizontal/vertical strips dictates, which
# is a complete envelope; the small-case tests cross-check them against a
# plain filter over globally enumerated partitions.

def up_sets_through(
    lam: Partition, rho: Partition, kmax: int, dual: bool = False
) -> list[list[Partition]]:
    """[U(lam, rho, k) for k in 0..kmax], each sorted."""
    base = join(lam, rho)
    nb = len(base)
    out: list[list[Partition]] = [[] for _ in range(kmax + 1)]
    rows: list[int] = []

    def rec(r: int, used: int) -> None:
        if r > nb + 1:
            out[used].append(tuple(v for v in rows if v))
            return
        lo = base[r - 1] if r <= nb else 0
        if dual:
            hi = part(lam, r) + 1
            if r > 1:
                hi = min(hi, part(rho, r - 1), rows[-1])
        else:
            hi = lo + (kmax - used)
            if r > 1:
                hi = min(hi, part(lam, r - 1), part(rho, r - 1))
        hi = min(hi, lo + (kmax - used))
        for v in range(lo, hi + 1):
            rows.append(v)
            rec(r + 1, used + v - lo)
            rows.pop()

    rec(1, 0)
    for bucket in out:
        bucket.sort()
    return out


def down_sets_through(
    lam: Partition, rho: Partition, kmax: int, dual: bool = False
) -> list[list[Partition]]:
    """[D(lam, rho, k) for k in 0..kmax], each sorted."""
    base = meet(lam, rho)
    nb = len(base)
    out: list[list[Partition]] = [[] for _ in range(kmax + 1)]
    # rows beyond the meet are forced empty; the strip conditions there do not
    # involve the removed cells, so check them once up front
    if len(lam) > nb + 1:
        return out
    if dual:
        if any(rho[r] > 1 for r in range(nb, len(rho))):
            return out
    elif len(rho) > nb + 1:
        return out
    rows: list[int] = []

    def rec(r: int, used: int) -> None:
        if r > nb:
            out[used].append(tuple(v for v in rows if v))
            return
        hi = base[r - 1]
        if dual:
            lo = max(part(lam, r + 1), part(rho, r) - 1, 0)
        else:
            lo = max(part(lam, r + 1), part(rho, r + 1))
        lo = max(lo, hi - (kmax - used))
        for v in range(hi, lo - 1, -1):
            rows.append(v)
            rec(r + 1, used + hi - v)
            rows.pop()

    rec(1, 0)
    for bucket in out:
        bucket.sort()
    return out


def up_set(lam: Partition, rho: Partition, k: int, dual: bool = False) -> list[Partition]:
    """The set U(lam, rho, k) (U* when dual), sorted for deterministic comparison."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return up_sets_through(lam, rho, k, dual)[k]


def down_set(lam: Partition, rho: Partition, k: int, dual: bool = False) -> list[Partition]:
    """The set D(lam, rho, k) (D* when dual), sorted."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return down_sets_through(lam, rho, k, dual)[k]


# ---------------------------------------------------------------------------
# Encodings.  A multiset over ribbon positions is a plain dict position -> count
# with positive counts.

PositionMultiset = dict[int, int]


def multiset_size(counts: PositionMultiset) -> int:
    return sum(counts.values())


def encode(
    target: Partition,
    lam: Partition,
    rho: Partition,
    direction: Direction,
    dual: bool = False,
) -> PositionMultiset:
    """Encode a member of a down/up set as a multiset of ribbon positions.

    Down: counts[i] cells are removed from the right end of removable ribbon i.
    Up: counts[i] cells extend the row of addable ribbon i.  Raises DomainError
    when ``target`` is not in the corresponding set.
    """
    if direction is Direction.DOWN:
        base = meet(lam, rho)
        if not contains(target, base):
            raise DomainError(f"{target} not contained in {base}")
        if not is_horizontal_strip(target, lam):
            raise DomainError(f"{lam}/{target} is not a horizontal strip")
        if dual:
            if not is_vertical_strip(target, rho):
                raise DomainError(f"{rho}/{target} is not a vertical strip")
            rows = {row: i + 1 for i, row in enumerate(_dual_removable_rows(lam, rho))}
            caps = {i + 1: 1 for i in range(len(rows))}
        else:
            if not is_horizontal_strip(target, rho):
                raise DomainError(f"{rho}/{target} is not a horizontal strip")
            rr = _removable_rows(lam, rho)
            rows = {row: i + 1 for i, (row, _) in enumerate(rr)}
            caps = {i + 1: cap for i, (_, cap) in enumerate(rr)}
    else:
        base = join(lam, rho)
        if not contains(base, target):
            raise DomainError(f"{target} does not contain {base}")
        if dual:
            if not is_vertical_strip(lam, target):
                raise DomainError(f"{target}/{lam} is not a vertical strip")
            if not is_horizontal_strip(rho, target):
                raise DomainError(f"{target}/{rho} is not a horizontal strip")
            ar = _dual_addable_rows(lam, rho)
            rows = {row: i for i, row in enumerate(ar)}
            caps = {i: 1 for i in range(len(ar))}
        else:
            if not (is_horizontal_strip(lam, target) and is_horizontal_strip(rho, target)):
                raise DomainError(f"{target} is not above both {lam} and {rho}")
            rows = {1: 0}
            caps = {0: INFINITE}
            for i, (row, cap) in enumerate(_removable_rows(lam, rho)):
                rows[row + 1] = i + 1
                caps[i + 1] = cap

    counts: PositionMultiset = {}
    nrows = max(len(base), len(target))
    for r in range(1, nrows + 1):
        diff = abs(part(target, r) - part(base, r))
        if diff == 0:
            continue
        if r not in rows:
            raise DomainError(f"row {r} of {target} carries no ribbon for {lam},{rho}")
        pos = rows[r]
        if diff > caps[pos]:
            raise CapacityError(f"position {pos} exceeds capacity {caps[pos]}")
        counts[pos] = diff
    return counts


def decode(
    counts: PositionMultiset,
    lam: Partition,
    rho: Partition,
    direction: Direction,
    dual: bool = False,
) -> Partition:
    """Inverse of :func:`encode`; validates capacities and strip membership."""
    kind = {
        (Direction.DOWN, False): ProfileKind.REMOVABLE,
        (Direction.DOWN, True): ProfileKind.DUAL_REMOVABLE,
        (Direction.UP, False): ProfileKind.ADDABLE,
        (Direction.UP, True): ProfileKind.DUAL_ADDABLE,
    }[(direction, dual)]
    prof = profile(lam, rho, kind).by_position()
    base = meet(lam, rho) if direction is Direction.DOWN else join(lam, rho)
    rows = list(base) + [0]
    for pos, cnt in counts.items():
        if cnt < 0:
            raise ValueError("multiplicities must be >= 0")
        if cnt == 0:
            continue
        if pos not in prof:
            raise DomainError(f"no ribbon at position {pos} for {lam},{rho}")
        entry = prof[pos]
        if cnt > entry.capacity:
            raise CapacityError(
                f"multiplicity {cnt} exceeds capacity {entry.capacity} at position {pos}"
            )
        while entry.row > len(rows):
            rows.append(0)
        if direction is Direction.DOWN:
            rows[entry.row - 1] -= cnt
        else:
            rows[entry.row - 1] += cnt
    if any(v < 0 for v in rows) or any(a < b for a, b in zip(rows, rows[1:])):
        raise DomainError(f"decoded rows {rows} do not form a partition")
    target = tuple(v for v in rows if v)
    # strip membership: the decoded value must land in the stated set
    if direction is Direction.DOWN:
        ok = is_horizontal_strip(target, lam) and (
            is_vertical_strip(target, rho) if dual else is_horizontal_strip(target, rho)
        )
    else:
        ok = is_horizontal_strip(rho, target) and (
            is_vertical_strip(lam, target) if dual else is_horizontal_strip(lam, target)
        )
    if not ok:
        raise DomainError(
            f"decoded {target} is not a member of the {direction.value} set of {lam},{rho}"
        )
    return target
