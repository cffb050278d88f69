"""
Partial orders on packed words of a fixed degree.

``INCLUSION`` is face containment (coarsening by a non-decreasing map),
``BRUHAT`` the weak Bruhat order spanning all ranks, and ``C`` the
rank-preserving order generated by swapping two adjacent values whose
fibers are in order.  Diagrams are generated from one-step relations and
queried through their transitive closure.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapExceeded, EmptyWord, SizeMismatch
from .hasse import HasseDiagram
from .pword import (
    PackedWord,
    coclass_elements,
    compose,
    cross_all,
    enumerate_words,
    identity,
    longest,
    max_coclass_element,
    monotone_factorize,
    s_map,
    t_map,
)
from .shuffle import (
    enumerate_sh,
    blocks_of,
    compositions_upto,
    tj_into_wedge,
    wedge,
    xi,
)

HARD_CAP = 8


def default_cap() -> int:
    return int(os.environ.get("PERMFACES_CAP", "6"))


def check_cap(n: int, cap: int | None = None) -> None:
    cap = default_cap() if cap is None else cap
    if cap > HARD_CAP:
        raise CapExceeded(f"cap {cap} is above the hard ceiling {HARD_CAP}")
    if n > cap:
        raise CapExceeded(f"degree {n} exceeds cap {cap}")


class OrderKind(enum.Enum):
    INCLUSION = "inclusion"
    BRUHAT = "bruhat"
    C = "c"


class Direction(enum.Enum):
    UP = "up"
    DOWN = "down"


def fibers_before(gamma: PackedWord, i: int) -> bool:
    """Every position of value ``i`` precedes every position of ``i+1``."""
    return max(gamma.fiber(i)) < min(gamma.fiber(i + 1))


def fibers_after(gamma: PackedWord, i: int) -> bool:
    return min(gamma.fiber(i)) > max(gamma.fiber(i + 1))


def inclusion_leq(gamma: PackedWord, delta: PackedWord) -> bool:
    """``delta == rho o gamma`` for some non-decreasing ``rho``."""
    if gamma.degree != delta.degree:
        raise SizeMismatch(f"degrees {gamma.degree} and {delta.degree} differ")
    g, d = gamma.values, delta.values
    for a, b in itertools.combinations(range(len(g)), 2):
        if g[a] == g[b] and d[a] != d[b]:
            return False
        if g[a] < g[b] and d[a] > d[b]:
            return False
        if g[a] > g[b] and d[a] < d[b]:
            return False
    return True


def bruhat_relations(gamma: PackedWord) -> list[tuple[PackedWord, Direction]]:
    """
    One-step Bruhat neighbours ``t_i o gamma``.  ``UP`` means
    ``gamma < t_i o gamma``, ``DOWN`` means ``t_i o gamma < gamma``;
    interleaved fibers give nothing.
    """
    if gamma.is_empty():
        raise EmptyWord("the empty word has no Bruhat relations")
    out = []
    r = gamma.rank
    for i in range(1, r):
        if fibers_before(gamma, i):
            out.append((compose(t_map(i, r), gamma), Direction.UP))
        elif fibers_after(gamma, i):
            out.append((compose(t_map(i, r), gamma), Direction.DOWN))
    return out


def c_relations(omega: PackedWord) -> list[PackedWord]:
    """Words ``s_i o omega`` lying strictly above ``omega`` in the C order."""
    r = omega.rank
    return [compose(s_map(i, r), omega) for i in range(1, r) if fibers_before(omega, i)]


def generating_relations(n: int, kind: OrderKind) -> Iterator[tuple[PackedWord, PackedWord]]:
    for g in enumerate_words(n):
        if g.is_empty():
            continue
        if kind is OrderKind.BRUHAT:
            for h, d in bruhat_relations(g):
                yield (g, h) if d is Direction.UP else (h, g)
        elif kind is OrderKind.INCLUSION:
            for i in range(1, g.rank):
                yield g, compose(t_map(i, g.rank), g)
        else:
            for h in c_relations(g):
                yield g, h


@lru_cache(maxsize=None)
def _build(n: int, kind: OrderKind) -> HasseDiagram[PackedWord]:
    return HasseDiagram(enumerate_words(n), generating_relations(n, kind))


def build_order(n: int, kind: OrderKind = OrderKind.BRUHAT, cap: int | None = None) -> HasseDiagram[PackedWord]:
    check_cap(n, cap)
    return _build(n, kind)


def leq(d: HasseDiagram, a, b) -> bool:
    return d.leq(a, b)


def interval(d: HasseDiagram, a, b) -> list:
    return d.interval(a, b)


def bruhat_leq(a: PackedWord, b: PackedWord) -> bool:
    if a.degree != b.degree:
        raise SizeMismatch(f"degrees {a.degree} and {b.degree} differ")
    return build_order(a.degree, OrderKind.BRUHAT, cap=HARD_CAP).leq(a, b)


# -- theorem checks -------------------------------------------------------


def shuffle_downset_check(c: Sequence[int], cap: int | None = None) -> bool:
    """``SH(c)`` is the Bruhat down-set of ``xi(c)``."""
    n = sum(c)
    d = build_order(n, OrderKind.BRUHAT, cap)
    return set(enumerate_sh(c)) == set(d.down_set(xi(c)))


def coclass_interval_theorem_check(gamma: PackedWord, cap: int | None = None) -> bool:
    """
    Faces contained in the face ``gamma`` are exactly the Bruhat interval
    between its shortest and longest permutations.
    """
    n = gamma.degree
    d = build_order(n, OrderKind.BRUHAT, cap)
    mine = coclass_elements(gamma)
    contained = {w for w in d.elements if coclass_elements(w) <= mine}
    _, lo = monotone_factorize(gamma)
    hi = max_coclass_element(gamma)
    return contained == set(d.interval(lo, hi))


def bounds_check(n: int, cap: int | None = None) -> bool:
    d = build_order(n, OrderKind.BRUHAT, cap)
    lo, hi = identity(n), longest(n)
    return all(d.leq(lo, g) and d.leq(g, hi) for g in d.elements)


def reversal_check(n: int, cap: int | None = None) -> bool:
    """``g <= h`` and ``h(j) < h(k)`` force ``g(j) < g(k)``; dually for ``>``."""
    d = build_order(n, OrderKind.BRUHAT, cap)
    for i, j in d.strict_pairs():
        g, h = d.elements[i].values, d.elements[j].values
        for a, b in itertools.combinations(range(n), 2):
            if h[a] < h[b] and not g[a] < g[b]:
                return False
            if g[a] > g[b] and not h[a] > h[b]:
                return False
    return True


def c_within_bruhat_check(n: int, cap: int | None = None) -> bool:
    return build_order(n, OrderKind.C, cap).contained_in(build_order(n, OrderKind.BRUHAT, cap))


def c_preserves_rank_check(n: int, cap: int | None = None) -> bool:
    d = build_order(n, OrderKind.C, cap)
    return all(d.elements[i].rank == d.elements[j].rank for i, j in d.strict_pairs())


def inclusion_matches_direct_check(n: int, cap: int | None = None) -> bool:
    d = build_order(n, OrderKind.INCLUSION, cap)
    return all(d.leq(a, b) == inclusion_leq(a, b) for a in d.elements for b in d.elements)


@dataclass
class Report:
    """Outcome of a named sweep: instance count and the first failure seen."""

    name: str
    instances: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def fail(self, what: str) -> None:
        if self.counterexample is None:
            self.counterexample = what

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"  first counterexample: {self.counterexample}"
        return f"{status} {self.name} ({self.instances} instances){tail}"


def _comparable_pairs(n: int) -> list[tuple[PackedWord, PackedWord]]:
    d = build_order(n, OrderKind.BRUHAT, cap=HARD_CAP)
    out = [(e, e) for e in d.elements]
    out.extend((d.elements[i], d.elements[j]) for i, j in d.strict_pairs())
    return out


def cross_monotone_report(total: int = 5) -> Report:
    rep = Report("cross product is monotone")
    for n0 in range(1, total):
        for n1 in range(1, total - n0 + 1):
            big = build_order(n0 + n1, OrderKind.BRUHAT, cap=HARD_CAP)
            for g0, d0 in _comparable_pairs(n0):
                for g1, d1 in _comparable_pairs(n1):
                    rep.instances += 1
                    lhs, rhs = cross_all((g0, g1)), cross_all((d0, d1))
                    if not big.leq(lhs, rhs):
                        rep.fail(f"{g0}x{g1} vs {d0}x{d1}")
    return rep


def _part_families(total: int, min_len: int) -> Iterator[list[PackedWord]]:
    """Tuples of packed words (empty allowed) with total degree at most ``total``."""
    for degrees in compositions_upto(total, total + 1, min_len):
        pools = [enumerate_words(k) for k in degrees]
        for parts in itertools.product(*pools):
            yield list(parts)


def _shuffle_pairs(ranks: tuple[int, ...]) -> list[tuple[PackedWord, PackedWord]]:
    d = build_order(sum(ranks), OrderKind.BRUHAT, cap=HARD_CAP)
    sh = enumerate_sh(ranks)
    return [(a, b) for a in sh for b in sh if d.leq(a, b)]


def shuffle_post_monotone_report(total: int = 5) -> Report:
    rep = Report("post-composition by comparable shuffles is monotone")
    for parts in _part_families(total, 2):
        if any(p.is_empty() for p in parts):
            continue
        ranks = tuple(p.rank for p in parts)
        base = cross_all(parts)
        big = build_order(base.degree, OrderKind.BRUHAT, cap=HARD_CAP)
        for w, w2 in _shuffle_pairs(ranks):
            rep.instances += 1
            if not big.leq(compose(w, base), compose(w2, base)):
                rep.fail(f"{w} <= {w2} on {[str(p) for p in parts]}")
    return rep


def wedge_monotone_report(total: int = 5) -> Report:
    rep = Report("wedge is monotone in its shuffle")
    for parts in _part_families(total - 1, 2):
        deg = sum(p.degree for p in parts) + len(parts) - 1
        if deg > total:
            continue
        ranks = tuple(p.rank for p in parts)
        big = build_order(deg, OrderKind.BRUHAT, cap=HARD_CAP)
        for w, w2 in _shuffle_pairs(ranks):
            rep.instances += 1
            if not big.leq(wedge(w, parts), wedge(w2, parts)):
                rep.fail(f"{w} <= {w2} on {[str(p) for p in parts]}")
    return rep


def wedge_part_monotone_report(total: int = 5) -> Report:
    """
    Merging two adjacent values of one part, when the shuffle keeps them
    adjacent, moves the wedge in the same Bruhat direction as the part.
    The new shuffle drops the repeated letter, which is the only reading
    under which it is again a shuffle of the new part ranks.
    """
    rep = Report("wedge is monotone under merging inside a part")
    for parts in _part_families(total - 1, 2):
        deg = sum(p.degree for p in parts) + len(parts) - 1
        if deg > total:
            continue
        ranks = tuple(p.rank for p in parts)
        big = build_order(deg, OrderKind.BRUHAT, cap=HARD_CAP)
        perms = [w for w in enumerate_sh(ranks) if w.is_permutation()]
        for w in perms:
            for l, (block, part) in enumerate(zip(blocks_of(ranks), parts)):
                for j in range(1, part.rank):
                    a = w.values[block[j - 1]]
                    if w.values[block[j]] != a + 1:
                        continue
                    new_w, new_parts = tj_into_wedge(a, w, parts)
                    assert new_parts[l] == compose(t_map(j, part.rank), part)
                    lhs, rhs = wedge(w, parts), wedge(new_w, new_parts)
                    if fibers_before(part, j):
                        rep.instances += 1
                        if not big.leq(lhs, rhs):
                            rep.fail(f"up: {lhs} vs {rhs}")
                    elif fibers_after(part, j):
                        rep.instances += 1
                        if not big.leq(rhs, lhs):
                            rep.fail(f"down: {rhs} vs {lhs}")
    return rep


def monotonicity_checks(total: int = 5) -> list[Report]:
    return [
        cross_monotone_report(total),
        shuffle_post_monotone_report(total),
        wedge_monotone_report(total),
        wedge_part_monotone_report(total),
    ]

