"""
The surjection ``gamma`` from packed words onto planar trees, and its fibers.

``gamma`` forgets the shuffle in every wedge: ``gamma(wedge(w, parts))`` is
the tree whose root carries ``gamma(part)`` for each part.  Each fiber is a
Bruhat interval ``[min_word(t), max_word(t)]``.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .hasse import HasseDiagram
from .order import HARD_CAP, OrderKind, build_order, check_cap
from .pword import EMPTY, PackedWord, enumerate_words, identity
from .shuffle import wedge, wedge_decompose, xi
from .tree import LEAF, PlanarTree, build_tree_order, enumerate_trees


@lru_cache(maxsize=None)
def gamma(word: PackedWord) -> PlanarTree:
    if word.is_empty():
        return LEAF
    _, parts = wedge_decompose(word)
    return PlanarTree(tuple(gamma(p) for p in parts))


@lru_cache(maxsize=None)
def min_word(t: PlanarTree) -> PackedWord:
    if t.is_leaf:
        return EMPTY
    parts = [min_word(c) for c in t.children]
    return wedge(identity(sum(p.rank for p in parts)), parts)


@lru_cache(maxsize=None)
def max_word(t: PlanarTree) -> PackedWord:
    if t.is_leaf:
        return EMPTY
    parts = [max_word(c) for c in t.children]
    return wedge(xi([p.rank for p in parts]), parts)


def fiber(t: PlanarTree, bruhat: HasseDiagram | None = None, cap: int | None = None) -> list[PackedWord]:
    """``gamma``-preimage of ``t`` served as a Bruhat interval."""
    if bruhat is None:
        bruhat = build_order(t.degree, OrderKind.BRUHAT, cap)
    return bruhat.interval(min_word(t), max_word(t))


def direct_fibers(n: int) -> dict[PlanarTree, list[PackedWord]]:
    out: dict[PlanarTree, list[PackedWord]] = defaultdict(list)
    for w in enumerate_words(n):
        out[gamma(w)].append(w)
    return dict(out)


def pushforward(n: int, kind: OrderKind) -> HasseDiagram[PlanarTree]:
    """Tree order generated by ``gamma(a) <= gamma(b)`` for one-step relations ``a < b``."""
    words = build_order(n, kind, cap=HARD_CAP)
    rel = set()
    for i, j in words.covers:
        a, b = gamma(words.elements[i]), gamma(words.elements[j])
        if a != b:
            rel.add((a, b))
    return HasseDiagram(enumerate_trees(n, cap=HARD_CAP), sorted(rel, key=lambda p: (str(p[0]), str(p[1]))))


def monotone_check(n: int, kind: OrderKind, cap: int | None = None) -> bool:
    check_cap(n, cap)
    words = build_order(n, kind, cap=HARD_CAP)
    trees = build_tree_order(n, kind, cap=HARD_CAP)
    return all(trees.leq(gamma(words.elements[i]), gamma(words.elements[j])) for i, j in words.covers)


def order_transport_check(n: int, kind: OrderKind, cap: int | None = None) -> bool:
    """``gamma`` is monotone and its push-forward regenerates the tree order."""
    if not monotone_check(n, kind, cap):
        return False
    return pushforward(n, kind).same_order(build_tree_order(n, kind, cap=HARD_CAP))
