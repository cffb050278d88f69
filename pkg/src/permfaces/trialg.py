"""
Dendriform trialgebra products on packed words and on planar trees.

Every product is available in more than one form so that the forms can be
checked against each other: shuffle sums and Bruhat intervals on packed
words; fiber images, the root recursion and Bruhat intervals on trees.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import CapExceeded, SizeMismatch, UnitUndefined
from .gamma import fiber, gamma
from .order import HARD_CAP, OrderKind, Report, build_order, check_cap
from .pword import PackedWord, compose, cross, enumerate_words, identity
from .shuffle import ShuffleSplit, enumerate_sh, xi, z_word
from .tree import PlanarTree, build_tree_order, corolla, enumerate_trees, over, under


class Op(enum.Enum):
    SUCC = "succ"
    DOT = "dot"
    PREC = "prec"
    STAR = "star"

    @property
    def split(self) -> ShuffleSplit:
        return ShuffleSplit(self.value)


THREE = (Op.SUCC, Op.DOT, Op.PREC)


class Basis(enum.Enum):
    PWORD = "pword"
    TREE = "tree"


@dataclass
class LinComb:
    """Finite formal sum with exact integer coefficients; zeros are never stored."""

    basis: Basis
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: int(v) for k, v in self.terms.items() if v}

    @classmethod
    def of(cls, basis: Basis, elems: Iterable) -> "LinComb":
        return cls(basis, dict(Counter(elems)))

    @classmethod
    def single(cls, x) -> "LinComb":
        return cls(_basis_of(x), {x: 1})

    def _check(self, other: "LinComb") -> None:
        if self.basis is not other.basis:
            raise SizeMismatch("cannot combine packed-word and tree sums")

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LinComb(self.basis, out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other.scale(-1)

    def scale(self, c: int) -> "LinComb":
        return LinComb(self.basis, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.basis is other.basis and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list[tuple[object, int]]:
        return sorted(self.terms.items(), key=lambda kv: str(kv[0]))

    def support(self) -> set:
        return set(self.terms)

    def max_coeff(self) -> int:
        return max(self.terms.values(), default=0)

    def degrees(self) -> set[int]:
        return {k.degree for k in self.terms}

    def map(self, f: Callable, basis: Basis) -> "LinComb":
        out: dict = {}
        for k, v in self.terms.items():
            fk = f(k)
            out[fk] = out.get(fk, 0) + v
        return LinComb(basis, out)

    def to_json(self) -> str:
        return json.dumps(
            {
                "basis": self.basis.value,
                "terms": [{"elem": str(k), "coeff": str(v)} for k, v in self.items()],
            },
            separators=(",", ":"),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(k) if v == 1 else f"{v}*{k}" for k, v in self.items())


def _basis_of(x) -> Basis:
    return Basis.PWORD if isinstance(x, PackedWord) else Basis.TREE


def _is_unit(x) -> bool:
    return x.is_empty() if isinstance(x, PackedWord) else x.is_leaf


def _unit_guard(x, y, op: Op):
    """Returns the answer for a star with a unit, raises for the other ops."""
    if _is_unit(x) or _is_unit(y):
        if op is not Op.STAR:
            raise UnitUndefined(f"{op.value} with a unit argument is not defined")
        return y if _is_unit(x) else x
    return None


# -- packed words -----------------------------------------------------------


@lru_cache(maxsize=None)
def _pword_shuffle(x: PackedWord, y: PackedWord, op: Op) -> tuple[PackedWord, ...]:
    base = cross(x, y)
    return tuple(compose(w, base) for w in enumerate_sh((x.rank, y.rank), op.split))


def _pword_bounds(x: PackedWord, y: PackedWord, op: Op) -> tuple[PackedWord, PackedWord]:
    r, s = x.rank, y.rank
    base = cross(x, y)
    if op is Op.SUCC:
        return base, compose(cross(xi((r, s - 1)), identity(1)), base)
    if op is Op.DOT:
        # the upper bound is (xi x 1) o (z o base): z is applied first
        zb = compose(z_word((r - 1, s - 1, 0)), base)
        return zb, compose(cross(xi((r - 1, s - 1)), identity(1)), zb)
    if op is Op.PREC:
        return compose(z_word((r - 1, s)), base), compose(xi((r, s)), base)
    return base, compose(xi((r, s)), base)


def pword_product(x: PackedWord, y: PackedWord, op: Op, method: str = "shuffle", cap: int | None = None) -> LinComb:
    unit = _unit_guard(x, y, op)
    if unit is not None:
        return LinComb.single(unit)
    if method == "shuffle":
        return LinComb.of(Basis.PWORD, _pword_shuffle(x, y, op))
    if method == "interval":
        n = x.degree + y.degree
        d = build_order(n, OrderKind.BRUHAT, cap)
        lo, hi = _pword_bounds(x, y, op)
        return LinComb.of(Basis.PWORD, d.interval(lo, hi))
    raise ValueError(f"unknown packed-word method {method!r}")


# -- trees ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _tree_fiber_product(t: PlanarTree, z: PlanarTree, op: Op) -> frozenset[PlanarTree]:
    found = set()
    for g in fiber(t, cap=HARD_CAP):
        for d in fiber(z, cap=HARD_CAP):
            base = cross(g, d)
            for w in enumerate_sh((g.rank, d.rank), op.split):
                found.add(gamma(compose(w, base)))
    return frozenset(found)


def _wedge_lin(prefix: Sequence[PlanarTree], middle: LinComb, suffix: Sequence[PlanarTree]) -> LinComb:
    pre, suf = tuple(prefix), tuple(suffix)
    return middle.map(lambda m: PlanarTree(pre + (m,) + suf), Basis.TREE)


@lru_cache(maxsize=None)
def _tree_rec(t: PlanarTree, z: PlanarTree, op: Op) -> LinComb:
    if op is Op.STAR:
        if t.is_leaf:
            return LinComb.single(z)
        if z.is_leaf:
            return LinComb.single(t)
        out = LinComb(Basis.TREE)
        for o in THREE:
            out = out + _tree_rec(t, z, o)
        return out
    tk, zk = t.children, z.children
    if op is Op.SUCC:
        return _wedge_lin((), _tree_rec(t, zk[0], Op.STAR), zk[1:])
    if op is Op.DOT:
        return _wedge_lin(tk[:-1], _tree_rec(tk[-1], zk[0], Op.STAR), zk[1:])
    return _wedge_lin(tk[:-1], _tree_rec(tk[-1], z, Op.STAR), ())


def _tree_bounds(t: PlanarTree, z: PlanarTree, op: Op) -> tuple[PlanarTree, PlanarTree]:
    if op is Op.STAR:
        return over(t, z), under(t, z)
    tk, zk = t.children, z.children
    if op is Op.SUCC:
        return over(t, z), PlanarTree((under(t, zk[0]),) + zk[1:])
    if op is Op.DOT:
        return (
            PlanarTree(tk[:-1] + (over(tk[-1], zk[0]),) + zk[1:]),
            PlanarTree(tk[:-1] + (under(tk[-1], zk[0]),) + zk[1:]),
        )
    return PlanarTree(tk[:-1] + (over(tk[-1], z),)), under(t, z)


def tree_product(t: PlanarTree, z: PlanarTree, op: Op, method: str = "recursion", cap: int | None = None) -> LinComb:
    unit = _unit_guard(t, z, op)
    if unit is not None:
        return LinComb.single(unit)
    if method == "recursion":
        return _tree_rec(t, z, op)
    check_cap(t.degree + z.degree, cap)
    if method == "fiber":
        return LinComb.of(Basis.TREE, _tree_fiber_product(t, z, op))
    if method == "interval":
        d = build_tree_order(t.degree + z.degree, OrderKind.BRUHAT, cap)
        lo, hi = _tree_bounds(t, z, op)
        return LinComb.of(Basis.TREE, d.interval(lo, hi))
    raise ValueError(f"unknown tree method {method!r}")


def product(x, y, op: Op, method: str | None = None, cap: int | None = None) -> LinComb:
    if isinstance(x, PackedWord):
        return pword_product(x, y, op, method or "shuffle", cap)
    return tree_product(x, y, op, method or "recursion", cap)


def lin_product(a: LinComb, b: LinComb, op: Op) -> LinComb:
    """Bilinear extension of the basis product (fast method on each basis)."""
    out = LinComb(a.basis)
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            out = out + product(x, y, op).scale(cx * cy)
    return out


# -- checks -----------------------------------------------------------------


def basis_elements(basis: Basis, n: int) -> list:
    return enumerate_words(n) if basis is Basis.PWORD else enumerate_trees(n, cap=HARD_CAP)


def _nonunit_pairs(basis: Basis, total: int):
    for n in range(1, total):
        for m in range(1, total - n + 1):
            for x in basis_elements(basis, n):
                for y in basis_elements(basis, m):
                    yield x, y


def _nonunit_triples(basis: Basis, total: int):
    for a in range(1, total + 1):
        for b in range(1, total - a + 1):
            for c in range(1, total - a - b + 1):
                for v in basis_elements(basis, a):
                    for w in basis_elements(basis, b):
                        for u in basis_elements(basis, c):
                            yield v, w, u


S, D, P, A = Op.SUCC, Op.DOT, Op.PREC, Op.STAR

# (outer, inner) on v.(w.u) == (outer, inner) on (v.w).u
AXIOMS = (
    ((S, S), (S, A)),
    ((S, P), (P, S)),
    ((P, A), (P, P)),
    ((D, D), (D, D)),
    ((S, D), (D, S)),
    ((D, S), (D, P)),
    ((D, P), (P, D)),
)


def axiom_sides(index: int, v, w, u) -> tuple[LinComb, LinComb]:
    (ro, ri), (lo, li) = AXIOMS[index]
    V, W, U = (LinComb.single(e) for e in (v, w, u))
    right = lin_product(V, lin_product(W, U, ri), ro)
    left = lin_product(lin_product(V, W, li), U, lo)
    return right, left


def axioms_check(basis: Basis, degree_cap: int = 5) -> list[Report]:
    reps = [Report(f"{basis.value} trialgebra axiom {i + 1}") for i in range(len(AXIOMS))]
    assoc = Report(f"{basis.value} associativity of star")
    for v, w, u in _nonunit_triples(basis, degree_cap):
        for i, rep in enumerate(reps):
            rep.instances += 1
            a, b = axiom_sides(i, v, w, u)
            if a != b:
                rep.fail(f"{v}, {w}, {u}")
        assoc.instances += 1
        V, W, U = (LinComb.single(e) for e in (v, w, u))
        if lin_product(V, lin_product(W, U, A), A) != lin_product(lin_product(V, W, A), U, A):
            assoc.fail(f"{v}, {w}, {u}")
    return reps + [assoc]


def pword_methods_report(total: int = 5) -> Report:
    rep = Report("packed-word products: shuffle form equals interval form")
    for x, y in _nonunit_pairs(Basis.PWORD, total):
        for op in Op:
            rep.instances += 1
            if pword_product(x, y, op, "shuffle") != pword_product(x, y, op, "interval", cap=HARD_CAP):
                rep.fail(f"{x} {op.value} {y}")
    return rep


def tree_methods_report(total: int = 5) -> Report:
    rep = Report("tree products: fiber, recursion and interval forms agree")
    for t, z in _nonunit_pairs(Basis.TREE, total):
        for op in Op:
            rep.instances += 1
            r = tree_product(t, z, op, "recursion")
            f = tree_product(t, z, op, "fiber", cap=HARD_CAP)
            i = tree_product(t, z, op, "interval", cap=HARD_CAP)
            if not r == f == i:
                rep.fail(f"{t} {op.value} {z}")
    return rep


def gamma_linear_morphism_report(total: int = 5) -> Report:
    """Linear extension of gamma carries each packed-word product to the tree product."""
    rep = Report("linear gamma maps packed-word products to tree products")
    for x, y in _nonunit_pairs(Basis.PWORD, total):
        for op in Op:
            rep.instances += 1
            image = pword_product(x, y, op).map(gamma, Basis.TREE)
            if image != tree_product(gamma(x), gamma(y), op):
                rep.fail(f"{x} {op.value} {y}: {image} vs {tree_product(gamma(x), gamma(y), op)}")
    return rep


def gamma_support_report(total: int = 5) -> Report:
    rep = Report("gamma maps the support of each product onto the tree product")
    for x, y in _nonunit_pairs(Basis.PWORD, total):
        for op in Op:
            rep.instances += 1
            image = {gamma(w) for w in pword_product(x, y, op).support()}
            if image != tree_product(gamma(x), gamma(y), op).support():
                rep.fail(f"{x} {op.value} {y}")
    return rep


def fiber_sum(t: PlanarTree) -> LinComb:
    return LinComb.of(Basis.PWORD, fiber(t, cap=HARD_CAP))


def fiber_embedding_report(total: int = 5) -> Report:
    """``t -> sum of its fiber`` is a morphism of trialgebras."""
    rep = Report("fiber sums multiply like trees")
    for t, z in _nonunit_pairs(Basis.TREE, total):
        for op in Op:
            rep.instances += 1
            lhs = lin_product(fiber_sum(t), fiber_sum(z), op)
            rhs = LinComb(Basis.PWORD)
            for w, c in tree_product(t, z, op).terms.items():
                rhs = rhs + fiber_sum(w).scale(c)
            if lhs != rhs:
                rep.fail(f"{t} {op.value} {z}")
    return rep


def multiplicity_report(basis: Basis, total: int = 6) -> Report:
    rep = Report(f"{basis.value} products are multiplicity free")
    for x, y in _nonunit_pairs(basis, total):
        for op in Op:
            rep.instances += 1
            if product(x, y, op).max_coeff() != 1:
                rep.fail(f"{x} {op.value} {y}")
    return rep


def over_under_check(t: PlanarTree, z: PlanarTree, cap: int | None = None) -> bool:
    """``gamma(g x d) == t/z`` and ``gamma(xi o (g x d)) == t\\z`` over both fibers."""
    check_cap(t.degree + z.degree, cap)
    lo, hi = over(t, z), under(t, z)
    for g in fiber(t, cap=HARD_CAP):
        for d in fiber(z, cap=HARD_CAP):
            base = cross(g, d)
            if gamma(base) != lo or gamma(compose(xi((g.rank, d.rank)), base)) != hi:
                return False
    return True


# -- freeness ---------------------------------------------------------------


def rank_over_q(rows: Sequence[dict]) -> int:
    """Rank of sparse rational row vectors by Gaussian elimination."""
    pivots: dict[object, dict] = {}
    order: list = []
    rank = 0
    for raw in rows:
        row = {k: Fraction(v) for k, v in raw.items() if v}
        for key in order:
            if key in row:
                c = row[key]
                for k, v in pivots[key].items():
                    row[k] = row.get(k, 0) - c * v
                    if not row[k]:
                        del row[k]
        if not row:
            continue
        key = min(row, key=str)
        lead = row[key]
        pivots[key] = {k: v / lead for k, v in row.items()}
        order.append(key)
        rank += 1
    return rank


@lru_cache(maxsize=None)
def _bracketings(n: int) -> tuple[tuple[tuple, ...], ...]:
    """All ``{succ, dot, prec}`` bracketings of ``n`` generators, as sorted term tuples."""
    if n == 1:
        return (((corolla(1), 1),),)
    out = set()
    for a in range(1, n):
        for x in _bracketings(a):
            for y in _bracketings(n - a):
                X, Y = LinComb(Basis.TREE, dict(x)), LinComb(Basis.TREE, dict(y))
                for op in THREE:
                    out.add(tuple(lin_product(X, Y, op).items()))
    return tuple(sorted(out, key=str))


def freeness_span_check(n: int, cap: int = 4) -> tuple[int, int]:
    """Rank of the span of all bracketings in degree ``n``, and ``|T_n|``."""
    if n > cap:
        raise CapExceeded(f"freeness check at degree {n} exceeds cap {cap}")
    rows = [dict(b) for b in _bracketings(n)]
    return rank_over_q(rows), len(enumerate_trees(n, cap=HARD_CAP))


def bracketing_vectors(n: int) -> list[dict]:
    return [dict(b) for b in _bracketings(n)]

