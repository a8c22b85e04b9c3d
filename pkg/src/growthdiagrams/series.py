"""Exact truncated polynomial arithmetic and identity verification.

Polynomials are sparse maps from exponent vectors to exact ints, truncated at
a total-degree cap; products silently drop terms beyond the cap.  Schur and
skew Schur polynomials are computed as weighted sums over strip chains, and
each identity is verified by computing both sides independently and comparing
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .partitions import (
    EMPTY,
    Family,
    Partition,
    conjugate,
    contains,
    horizontal_strips_over,
    horizontal_strips_under,
    join,
    meet,
    member,
    part,
    size,
    sub_partitions,
    vertical_strips_over,
    vertical_strips_under,
)

Exponents = tuple[int, ...]


class TruncatedPolynomial:
    """Multivariate polynomial with integer coefficients, truncated at a total
    degree cap.  Immutable by convention; arithmetic returns new values."""

    __slots__ = ("nvars", "cap", "terms")

    def __init__(self, nvars: int, cap: int, terms: dict[Exponents, int] | None = None):
        self.nvars = nvars
        self.cap = cap
        self.terms: dict[Exponents, int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff and sum(exps) <= cap:
                    self.terms[exps] = coeff

    @classmethod
    def zero(cls, nvars: int, cap: int) -> "TruncatedPolynomial":
        return cls(nvars, cap)

    @classmethod
    def one(cls, nvars: int, cap: int) -> "TruncatedPolynomial":
        return cls(nvars, cap, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars: int, cap: int, exps: Exponents, coeff: int = 1
                 ) -> "TruncatedPolynomial":
        return cls(nvars, cap, {tuple(exps): coeff})

    def _compatible(self, other: "TruncatedPolynomial") -> None:
        if self.nvars != other.nvars or self.cap != other.cap:
            raise ValueError("operands live in different truncated rings")

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._compatible(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            val = out.get(exps, 0) + coeff
            if val:
                out[exps] = val
            else:
                out.pop(exps, None)
        return TruncatedPolynomial(self.nvars, self.cap, out)

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial(
            self.nvars, self.cap, {e: c * v for e, v in self.terms.items()}
        )

    def __mul__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._compatible(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponents, int] = {}
        cap = self.cap
        bdeg = [(e, sum(e), c) for e, c in b.items()]
        for ea, ca in a.items():
            da = sum(ea)
            for eb, db, cb in bdeg:
                if da + db > cap:
                    continue
                key = tuple(x + y for x, y in zip(ea, eb))
                val = out.get(key, 0) + ca * cb
                if val:
                    out[key] = val
                else:
                    del out[key]
        return TruncatedPolynomial(self.nvars, self.cap, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedPolynomial)
            and self.nvars == other.nvars
            and self.cap == other.cap
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self.nvars}, {self.cap}, {len(self.terms)} terms)"

    def coefficient(self, exps: Exponents) -> int:
        return self.terms.get(tuple(exps), 0)

    def embed(self, nvars: int, cap: int, offset: int = 0) -> "TruncatedPolynomial":
        """The same polynomial in a larger ring, variables shifted by offset."""
        if offset + self.nvars > nvars:
            raise ValueError("embedded variables do not fit")
        pad_l = (0,) * offset
        pad_r = (0,) * (nvars - offset - self.nvars)
        return TruncatedPolynomial(
            nvars, cap, {pad_l + e + pad_r: c for e, c in self.terms.items()}
        )

    def permuted(self, perm: Iterable[int]) -> "TruncatedPolynomial":
        """Apply a variable permutation: new exponent i comes from perm[i]."""
        p = tuple(perm)
        return TruncatedPolynomial(
            self.nvars, self.cap,
            {tuple(e[p[i]] for i in range(self.nvars)): c for e, c in self.terms.items()},
        )

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))


def geometric(nvars: int, cap: int, exps: Exponents) -> TruncatedPolynomial:
    """1/(1 - x^exps) expanded to the cap."""
    d = sum(exps)
    if d == 0:
        raise ValueError("cannot invert 1 - 1")
    terms = {}
    t = 0
    while t * d <= cap:
        terms[tuple(t * e for e in exps)] = 1
        t += 1
    return TruncatedPolynomial(nvars, cap, terms)


def one_plus(nvars: int, cap: int, exps: Exponents) -> TruncatedPolynomial:
    return TruncatedPolynomial(nvars, cap, {(0,) * nvars: 1, tuple(exps): 1})


def _unit(nvars: int, i: int, e: int = 1) -> Exponents:
    out = [0] * nvars
    out[i] = e
    return tuple(out)


# ---------------------------------------------------------------------------
# Schur polynomials via strip chains.

SCHUR_UP = "up"
SCHUR_DOWN = "down"
SCHUR_DUAL_DOWN = "dual-down"


def schur(
    lam: Partition,
    n: int,
    cap: int,
    mode: str = SCHUR_UP,
    mu: Partition = EMPTY,
) -> TruncatedPolynomial:
    """The skew Schur polynomial s_{lam/mu}(x_1..x_n) (dual-down: s_{lam'/mu'}).

    Up sums over ascending chains mu < ... < lam of n horizontal strips with
    x_i weighting the i-th step; down sums over descending chains with x_i
    weighting the step from chain position i to i-1; both agree.  The result is
    homogeneous of degree |lam/mu|, so it is zero beyond the cap.
    """
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    zero = TruncatedPolynomial.zero(n, cap)
    if size(lam) - size(mu) > cap:
        return zero
    if mode == SCHUR_UP:
        states: dict[Partition, TruncatedPolynomial] = {
            mu: TruncatedPolynomial.one(n, cap)
        }
        budget = size(lam) - size(mu)
        for i in range(n):
            nxt: dict[Partition, TruncatedPolynomial] = {}
            for sig, poly in states.items():
                for tau in horizontal_strips_over(sig, budget, shape=lam):
                    step = size(tau) - size(sig)
                    mono = TruncatedPolynomial.monomial(n, cap, _unit(n, i, step))
                    nxt[tau] = nxt.get(tau, zero) + poly * mono
            states = nxt
        return states.get(lam, zero)
    if mode in (SCHUR_DOWN, SCHUR_DUAL_DOWN):
        under = (
            horizontal_strips_under if mode == SCHUR_DOWN else vertical_strips_under
        )
        states = {lam: TruncatedPolynomial.one(n, cap)}
        for i in range(n, 0, -1):
            nxt = {}
            for sig, poly in states.items():
                for tau in under(sig):
                    if not contains(mu, tau):
                        continue
                    step = size(sig) - size(tau)
                    mono = TruncatedPolynomial.monomial(n, cap, _unit(n, i - 1, step))
                    nxt[tau] = nxt.get(tau, zero) + poly * mono
            states = nxt
        return states.get(mu, zero)
    raise ValueError(f"unknown mode {mode!r}")


@lru_cache(maxsize=None)
def count_syt(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam, by chain counting."""
    if not lam:
        return 1
    total = 0
    for r in range(len(lam)):
        if lam[r] > (lam[r + 1] if r + 1 < len(lam) else 0):
            below = list(lam)
            below[r] -= 1
            total += count_syt(tuple(v for v in below if v))
    return total


# ---------------------------------------------------------------------------
# Product sides.

LITTLEWOOD_FAMILIES = (
    Family.EVEN_COLS,
    Family.ALL,
    Family.EVEN_ROWS,
    Family.ASYM_PLUS,
    Family.ASYM_MINUS,
)


def product_side(kind: str, n: int, m: int, cap: int) -> TruncatedPolynomial:
    """Expansion of the named product; variables are x_1..x_n then y_1..y_m for
    the Cauchy kinds and x_1..x_n for the Littlewood kinds."""
    if kind in ("cauchy", "dual-cauchy"):
        nv = n + m
        out = TruncatedPolynomial.one(nv, cap)
        for i in range(n):
            for j in range(m):
                exps = tuple(
                    (1 if t == i or t == n + j else 0) for t in range(nv)
                )
                factor = (
                    geometric(nv, cap, exps) if kind == "cauchy" else one_plus(nv, cap, exps)
                )
                out = out * factor
        return out
    fam = Family(kind.removeprefix("littlewood-")) if kind.startswith("littlewood-") else None
    if fam is None:
        raise ValueError(f"unknown product {kind!r}")
    out = TruncatedPolynomial.one(n, cap)
    pair = geometric if fam in (Family.EVEN_COLS, Family.ALL, Family.EVEN_ROWS) else one_plus
    for i in range(n):
        for j in range(i + 1, n):
            exps = tuple((1 if t in (i, j) else 0) for t in range(n))
            out = out * pair(n, cap, exps)
    if fam is Family.ALL:
        for i in range(n):
            out = out * geometric(n, cap, _unit(n, i))
    elif fam is Family.EVEN_ROWS:
        for i in range(n):
            out = out * geometric(n, cap, _unit(n, i, 2))
    elif fam is Family.ASYM_MINUS:
        for i in range(n):
            out = out * one_plus(n, cap, _unit(n, i, 2))
    return out


# ---------------------------------------------------------------------------
# Identity verification.

@dataclass(frozen=True)
class Report:
    identity: str
    equal: bool
    checked_terms: int
    params: dict
    mismatch: dict | None = None
    lhs_value: int | None = None  # only for the squarefree count identity
    rhs_value: int | None = None

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "equal": self.equal,
            "checked_terms": self.checked_terms,
            "params": self.params,
        }
        if self.mismatch is not None:
            out["mismatch"] = self.mismatch
        if self.lhs_value is not None:
            out["lhs"] = self.lhs_value
            out["rhs"] = self.rhs_value
        return out


def _compare(identity: str, params: dict, lhs: TruncatedPolynomial,
             rhs: TruncatedPolynomial) -> Report:
    keys = set(lhs.terms) | set(rhs.terms)
    mismatch = None
    for exps in sorted(keys, key=lambda e: (sum(e), e)):
        a, b = lhs.terms.get(exps, 0), rhs.terms.get(exps, 0)
        if a != b:
            mismatch = {"exponents": list(exps), "lhs": a, "rhs": b}
            break
    return Report(identity, mismatch is None, len(keys), params, mismatch)


def _partitions_in(family: Family, max_size: int, max_rows: int,
                   max_cols: int | None = None) -> Iterator[Partition]:
    box = (max_rows, max_cols if max_cols is not None else max_size)
    from .partitions import enumerate_partitions

    for lam in enumerate_partitions(max_size, box):
        if member(lam, family):
            yield lam


def _over_partitions(lam: Partition, budget: int, max_rows: int) -> Iterator[Partition]:
    """All nu containing lam with |nu/lam| <= budget and at most max_rows rows."""
    seen = {lam}
    yield lam
    frontier = [lam]
    while frontier:
        nxt = []
        for sig in frontier:
            room = budget - (size(sig) - size(lam))
            if room <= 0:
                continue
            for tau in horizontal_strips_over(sig, room):
                if len(tau) <= max_rows and tau not in seen:
                    seen.add(tau)
                    nxt.append(tau)
                    yield tau
        frontier = nxt


def verify_identity(
    identity: str,
    n: int,
    cap: int,
    m: int | None = None,
    lam: Partition = EMPTY,
    rho: Partition = EMPTY,
    k: int | None = None,
) -> Report:
    """Compute both sides of the named identity exactly and compare.

    Sum sides enumerate every partition that can contribute a term of total
    degree at most the cap; this is a finite set because a (skew) Schur
    polynomial is homogeneous of the skew-shape size.
    """
    params: dict = {"n": n, "degree": cap}
    if identity == "squarefree":
        lhs = sum(count_syt(p) ** 2 for p in _partitions_in(Family.ALL, n, n) if size(p) == n)
        rhs = factorial(n)
        return Report(identity, lhs == rhs, 1, {"n": n}, None, lhs, rhs)

    if identity in ("cauchy", "dual-cauchy"):
        mm = m if m is not None else n
        params["m"] = mm
        nv = n + mm
        lhs = TruncatedPolynomial.zero(nv, cap)
        for p in _partitions_in(Family.ALL, cap // 2, n):
            if identity == "dual-cauchy" and part(p, 1) > mm:
                continue
            px = schur(p, n, cap)
            if identity == "cauchy":
                py = schur(p, mm, cap, SCHUR_DOWN)
            else:
                py = schur(p, mm, cap, SCHUR_DUAL_DOWN)
            lhs = lhs + px.embed(nv, cap) * py.embed(nv, cap, offset=n)
        rhs = product_side(identity, n, mm, cap)
        return _compare(identity, params, lhs, rhs)

    if identity in ("skew-cauchy", "skew-dual-cauchy"):
        mm = m if m is not None else n
        dual = identity == "skew-dual-cauchy"
        params.update({"m": mm, "lam": list(lam), "rho": list(rho)})
        nv = n + mm
        lhs = TruncatedPolynomial.zero(nv, cap)
        budget = (cap + size(lam) + size(rho)) // 2
        base = join(lam, rho)
        for nu in _over_partitions(base, budget - size(base), len(base) + max(n, mm)):
            sx = schur(nu, n, cap, mu=rho)
            if not sx:
                continue
            sy = schur(nu, mm, cap, SCHUR_DUAL_DOWN if dual else SCHUR_DOWN, mu=lam)
            if not sy:
                continue
            lhs = lhs + sx.embed(nv, cap) * sy.embed(nv, cap, offset=n)
        rhs_sum = TruncatedPolynomial.zero(nv, cap)
        for mu in sub_partitions(meet(lam, rho)):
            sx = schur(lam, n, cap, mu=mu)
            if not sx:
                continue
            sy = schur(rho, mm, cap, SCHUR_DUAL_DOWN if dual else SCHUR_DOWN, mu=mu)
            if not sy:
                continue
            rhs_sum = rhs_sum + sx.embed(nv, cap) * sy.embed(nv, cap, offset=n)
        rhs = product_side("dual-cauchy" if dual else "cauchy", n, mm, cap) * rhs_sum
        return _compare(identity, params, lhs, rhs)

    if identity.startswith("littlewood-"):
        fam = Family(identity.removeprefix("littlewood-"))
        lhs = TruncatedPolynomial.zero(n, cap)
        for p in _partitions_in(fam, cap, n):
            lhs = lhs + schur(p, n, cap)
        rhs = product_side(identity, n, 0, cap)
        return _compare(identity, params, lhs, rhs)

    if identity.startswith("skew-littlewood-"):
        fam = Family(identity.removeprefix("skew-littlewood-"))
        params["lam"] = list(lam)
        lhs = TruncatedPolynomial.zero(n, cap)
        for nu in _over_partitions(lam, cap, len(lam) + n):
            if member(nu, fam):
                lhs = lhs + schur(nu, n, cap, mu=lam)
        if fam in (Family.ASYM_PLUS, Family.ASYM_MINUS):
            inner_fam = Family.ASYM_MINUS if fam is Family.ASYM_PLUS else Family.ASYM_PLUS
            inner_shape = conjugate(lam)
        else:
            inner_fam, inner_shape = fam, lam
        rhs_sum = TruncatedPolynomial.zero(n, cap)
        for mu in sub_partitions(inner_shape):
            if member(mu, inner_fam):
                rhs_sum = rhs_sum + schur(inner_shape, n, cap, mu=mu)
        rhs = product_side(f"littlewood-{fam.value}", n, 0, cap) * rhs_sum
        return _compare(identity, params, lhs, rhs)

    if identity in ("pieri", "dual-pieri"):
        kk = 0 if k is None else k
        params["k"] = kk
        full_cap = max(cap, size(lam) + kk)
        if identity == "pieri":
            hk = schur((kk,) if kk else EMPTY, n, full_cap)
            strips = horizontal_strips_over(lam, kk)
        else:
            hk = schur((1,) * kk, n, full_cap)
            strips = vertical_strips_over(lam, kk)
        params["lam"] = list(lam)
        lhs = hk * schur(lam, n, full_cap)
        rhs = TruncatedPolynomial.zero(n, full_cap)
        for nu in strips:
            if size(nu) - size(lam) == kk:
                rhs = rhs + schur(nu, n, full_cap)
        return _compare(identity, params, lhs, rhs)

    raise ValueError(f"unknown identity {identity!r}")
