"""The four local (dual) growth rules as explicit bijections with inverses.

Each rule F_{lam,rho,k} maps the union of down sets (dual: two down sets) onto
the up set U(lam,rho,k) (dual: U*).  All four are implemented purely through
position-multiset encodings: encode the input, transform the multiset, decode.

    row       R |-> R + {0^(k-j)}
    col       greedy matching against the pool of unused addable slots
    dual-row  R |-> R, or R + {0} when |R| = k-1
    dual-col  R |-> {x-1 : x in R}, plus {d} when |R| = k-1
"""

from __future__ import annotations

from bisect import bisect_right
from enum import Enum

from .interlacing import (
    CapacityError,
    Direction,
    DomainError,
    PositionMultiset,
    _removable_rows,
    decode,
    encode,
    multiset_size,
    profile,
    ProfileKind,
)
from .partitions import Partition, size


class Rule(str, Enum):
    ROW = "row"
    COL = "col"
    DUAL_ROW = "dual-row"
    DUAL_COL = "dual-col"

    @property
    def dual(self) -> bool:
        return self in (Rule.DUAL_ROW, Rule.DUAL_COL)


def apply_rule(
    rule: Rule, lam: Partition, rho: Partition, k: int, mu: Partition
) -> Partition:
    """F_{lam,rho,k}(mu); raises DomainError when mu is outside the domain."""
    if k < 0:
        raise DomainError("k must be >= 0")
    counts = encode(mu, lam, rho, Direction.DOWN, dual=rule.dual)
    j = multiset_size(counts)
    if rule is Rule.ROW:
        if j > k:
            raise DomainError(f"|R(mu)| = {j} exceeds k = {k}")
        out = dict(counts)
        if k > j:
            out[0] = k - j
    elif rule is Rule.COL:
        if j > k:
            raise DomainError(f"|R(mu)| = {j} exceeds k = {k}")
        out = _col_forward(counts, k, _removable_caps(lam, rho))
    elif rule is Rule.DUAL_ROW:
        if j not in (k, k - 1):
            raise DomainError(f"|R(mu)| = {j} not in {{k, k-1}} for k = {k}")
        out = dict(counts)
        if j == k - 1:
            out[0] = 1
    elif rule is Rule.DUAL_COL:
        if j not in (k, k - 1):
            raise DomainError(f"|R(mu)| = {j} not in {{k, k-1}} for k = {k}")
        d = len(profile(lam, rho, ProfileKind.DUAL_REMOVABLE).entries)
        out = {x - 1: 1 for x in counts}
        if j == k - 1:
            out[d] = 1
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return decode(out, lam, rho, Direction.UP, dual=rule.dual)


def unapply_rule(
    rule: Rule, lam: Partition, rho: Partition, nu: Partition
) -> tuple[Partition, int]:
    """Invert F: returns (mu, a) with a = |nu| + |mu| - |lam| - |rho|."""
    s_counts = encode(nu, lam, rho, Direction.UP, dual=rule.dual)
    if rule is Rule.ROW:
        r_counts = {p: c for p, c in s_counts.items() if p != 0}
    elif rule is Rule.COL:
        r_counts = _col_backward(s_counts, _removable_caps(lam, rho))
    elif rule is Rule.DUAL_ROW:
        r_counts = {p: 1 for p in s_counts if p != 0}
    elif rule is Rule.DUAL_COL:
        d = len(profile(lam, rho, ProfileKind.DUAL_REMOVABLE).entries)
        r_counts = {p + 1: 1 for p in s_counts if p != d}
    else:
        raise ValueError(f"unknown rule {rule!r}")
    mu = decode(r_counts, lam, rho, Direction.DOWN, dual=rule.dual)
    a = size(nu) + size(mu) - size(lam) - size(rho)
    return mu, a


def _removable_caps(lam: Partition, rho: Partition) -> tuple[int, ...]:
    """Capacities of the removable ribbons at positions 1..d.

    The addable ribbon at position i >= 1 sits one row above the removable
    ribbon at position i and has the same capacity, which is what makes the
    pool subtraction in column insertion well defined.
    """
    return tuple(cap for _, cap in _removable_rows(lam, rho))


def _col_forward(counts: PositionMultiset, k: int, caps: tuple[int, ...]) -> PositionMultiset:
    """Greedy matching: drivers R + {inf^(k-j)} ascending, each takes the
    largest pool element strictly below it; the pool starts as all addable
    slots minus R."""
    d = len(caps)
    pool = [0] * (d + 1)  # pool[0] stands in for the unbounded bottom row
    for i in range(1, d + 1):
        left = caps[i - 1] - counts.get(i, 0)
        if left < 0:
            raise CapacityError(
                f"removable multiplicity at position {i} exceeds the addable capacity"
            )
        pool[i] = left
    drivers = sorted(p for p, c in counts.items() for _ in range(c))
    drivers += [d + 1] * (k - len(drivers))  # stand-ins for the infinite drivers
    out: PositionMultiset = {}
    for x in drivers:
        y = 0
        for cand in range(min(x - 1, d), 0, -1):
            if pool[cand] > 0:
                y = cand
                break
        if y > 0:
            pool[y] -= 1
        out[y] = out.get(y, 0) + 1
    return out


def _col_backward(s_counts: PositionMultiset, caps: tuple[int, ...]) -> PositionMultiset:
    """Mirror greedy: process S descending, each element takes the smallest
    remaining removable position strictly above it; elements with no partner
    came from infinite drivers."""
    d = len(caps)
    pool: list[int] = []
    for i in range(1, d + 1):
        left = caps[i - 1] - s_counts.get(i, 0)
        if left < 0:
            raise DomainError(
                f"addable multiplicity at position {i} exceeds the removable capacity"
            )
        pool.extend([i] * left)
    out: PositionMultiset = {}
    elems = sorted((p for p, c in s_counts.items() for _ in range(c)), reverse=True)
    for s in elems:
        idx = bisect_right(pool, s)
        if idx < len(pool):
            r = pool.pop(idx)
            out[r] = out.get(r, 0) + 1
    return out
