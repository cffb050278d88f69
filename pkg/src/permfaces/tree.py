"""
Planar rooted trees whose vertices have at least two children.

Text form: a leaf is ``.`` and a vertex is its children in parentheses,
space separated, so the corolla with three leaves is ``(. . .)`` and the
left comb of degree 2 is ``((. .) .)``.  The degree of a tree is its number
of leaves minus one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import (
    LeafHasNoRelations,
    LeafHasNoWedge,
    LeafIndexOutOfRange,
    NotInternalEdge,
    OutOfRange,
    ParseError,
    TooFewParts,
)
from .hasse import HasseDiagram
from .order import Direction, OrderKind, check_cap

Path = tuple[int, ...]


@dataclass(frozen=True, eq=True)
class PlanarTree:
    children: tuple["PlanarTree", ...] = ()
    _hash: int = field(default=0, compare=False, repr=False)
    _degree: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        kids = tuple(self.children)
        if len(kids) == 1:
            raise TooFewParts("a vertex needs at least two children")
        object.__setattr__(self, "children", kids)
        object.__setattr__(self, "_hash", hash(kids))
        object.__setattr__(self, "_degree", sum(c._degree for c in kids) + len(kids) - 1 if kids else 0)

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def degree(self) -> int:
        return self._degree

    def __str__(self) -> str:
        if self.is_leaf:
            return "."
        return "(" + " ".join(str(c) for c in self.children) + ")"

    def __repr__(self) -> str:
        return f"PlanarTree({self})"

    def __lt__(self, other: "PlanarTree") -> bool:
        return str(self) < str(other)


LEAF = PlanarTree()


def node(*children: PlanarTree) -> PlanarTree:
    return tree_wedge(children)


def parse_tree(text: str) -> PlanarTree:
    stack: list[list[PlanarTree]] = [[]]
    for ch in text:
        if ch.isspace():
            continue
        if ch == ".":
            stack[-1].append(LEAF)
        elif ch == "(":
            stack.append([])
        elif ch == ")":
            if len(stack) == 1:
                raise ParseError(f"unbalanced ')' in {text!r}")
            kids = stack.pop()
            if len(kids) < 2:
                raise ParseError(f"vertex with fewer than two children in {text!r}")
            stack[-1].append(PlanarTree(tuple(kids)))
        else:
            raise ParseError(f"unexpected character {ch!r} in {text!r}")
    if len(stack) != 1 or len(stack[0]) != 1:
        raise ParseError(f"{text!r} is not a single tree")
    return stack[0][0]


def corolla(n: int) -> PlanarTree:
    if n < 1:
        raise OutOfRange("a corolla needs degree >= 1")
    return PlanarTree((LEAF,) * (n + 1))


def is_binary(t: PlanarTree) -> bool:
    return t.is_leaf or (len(t.children) == 2 and all(is_binary(c) for c in t.children))


def tree_wedge(parts: Sequence[PlanarTree]) -> PlanarTree:
    if len(parts) < 2:
        raise TooFewParts("a wedge needs at least two parts")
    return PlanarTree(tuple(parts))


def tree_unwedge(t: PlanarTree) -> list[PlanarTree]:
    if t.is_leaf:
        raise LeafHasNoWedge("the leaf is not a wedge")
    return list(t.children)


def vertices(t: PlanarTree) -> int:
    return 0 if t.is_leaf else 1 + sum(vertices(c) for c in t.children)


def leaves(t: PlanarTree) -> int:
    return t.degree + 1


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[PlanarTree, ...]:
    if n == 0:
        return (LEAF,)
    out: list[PlanarTree] = []

    # children degrees n_0..n_k with sum + k == n, k >= 1
    for k in range(1, n + 1):
        budget = n - k

        def rec(i: int, remaining: int, acc: list[PlanarTree]) -> None:
            if i == k:
                for last in _trees(remaining):
                    out.append(PlanarTree(tuple(acc) + (last,)))
                return
            for d in range(remaining + 1):
                for c in _trees(d):
                    acc.append(c)
                    rec(i + 1, remaining - d, acc)
                    acc.pop()

        rec(0, budget, [])
    return tuple(sorted(out, key=str))


def enumerate_trees(n: int, cap: int | None = None) -> list[PlanarTree]:
    """All trees of degree ``n``, sorted by text form."""
    if n < 0:
        raise OutOfRange("degree must be non-negative")
    check_cap(n, cap)
    return list(_trees(n))


def internal_edges(t: PlanarTree) -> list[Path]:
    """Paths from the root to every non-root vertex, depth first."""
    out: list[Path] = []

    def walk(s: PlanarTree, path: Path) -> None:
        for i, c in enumerate(s.children):
            if not c.is_leaf:
                out.append(path + (i,))
                walk(c, path + (i,))

    walk(t, ())
    return out


def subtree(t: PlanarTree, path: Path) -> PlanarTree:
    for i in path:
        if i >= len(t.children):
            raise NotInternalEdge(f"no child {i} on path {path}")
        t = t.children[i]
    return t


def replace_at(t: PlanarTree, path: Path, new: PlanarTree) -> PlanarTree:
    if not path:
        return new
    i = path[0]
    kids = list(t.children)
    kids[i] = replace_at(kids[i], path[1:], new)
    return PlanarTree(tuple(kids))


def contract(t: PlanarTree, edge: Path) -> PlanarTree:
    """Contract the edge above the vertex at ``edge`` into its parent."""
    if not edge:
        raise NotInternalEdge("the root has no edge above it")
    try:
        child = subtree(t, edge)
    except (IndexError, NotInternalEdge):
        raise NotInternalEdge(f"{edge} is not an internal edge of {t}") from None
    if child.is_leaf:
        raise NotInternalEdge(f"{edge} ends at a leaf of {t}")
    parent_path, i = edge[:-1], edge[-1]
    parent = subtree(t, parent_path)
    kids = parent.children[:i] + child.children + parent.children[i + 1:]
    return replace_at(t, parent_path, PlanarTree(kids))


def contractions(t: PlanarTree) -> list[PlanarTree]:
    return [contract(t, e) for e in internal_edges(t)]


def tree_inclusion_leq(t: PlanarTree, z: PlanarTree) -> bool:
    """Is ``z`` reached from ``t`` by contracting internal edges?"""
    if t.degree != z.degree or vertices(z) > vertices(t):
        return False
    seen = {t}
    frontier = [t]
    while frontier:
        nxt = []
        for s in frontier:
            if s == z:
                return True
            for u in contractions(s):
                if u not in seen and vertices(u) >= vertices(z):
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return False


# -- Bruhat generators -----------------------------------------------------


def _lift(t: PlanarTree, step) -> list[PlanarTree]:
    """Apply ``step`` inside each child in turn."""
    out = []
    for i, c in enumerate(t.children):
        if c.is_leaf:
            continue
        for c2 in step(c):
            out.append(PlanarTree(t.children[:i] + (c2,) + t.children[i + 1:]))
    return out


def bruhat_up(t: PlanarTree) -> list[PlanarTree]:
    """
    Trees one generating step above ``t``: move inside a child; open the
    first child into the root when it is a vertex; or group a suffix of at
    least two children under a new vertex, leaving at least one in front.
    """
    if t.is_leaf:
        return []
    kids = t.children
    out = _lift(t, bruhat_up)
    first = kids[0]
    if not first.is_leaf:
        out.append(PlanarTree(first.children + kids[1:]))
    for j in range(1, len(kids) - 1):
        out.append(PlanarTree(kids[:j] + (PlanarTree(kids[j:]),)))
    return out


def bruhat_down(t: PlanarTree) -> list[PlanarTree]:
    if t.is_leaf:
        return []
    kids = t.children
    out = _lift(t, bruhat_down)
    for p in range(2, len(kids)):
        out.append(PlanarTree((PlanarTree(kids[:p]),) + kids[p:]))
    last = kids[-1]
    if not last.is_leaf:
        out.append(PlanarTree(kids[:-1] + last.children))
    return out


def tree_bruhat_relations(t: PlanarTree) -> list[tuple[PlanarTree, Direction]]:
    if t.is_leaf:
        raise LeafHasNoRelations("the leaf has no Bruhat relations")
    return [(s, Direction.UP) for s in bruhat_up(t)] + [(s, Direction.DOWN) for s in bruhat_down(t)]


def c_up(t: PlanarTree) -> list[PlanarTree]:
    """
    One C step: ``((a_0..a_k) b_0..b_h)`` rises to
    ``(a_0..a_{k-1} (a_k b_0..b_h))``, or a child rises.  On binary trees
    this is the right rotation.
    """
    if t.is_leaf:
        return []
    kids = t.children
    out = _lift(t, c_up)
    first = kids[0]
    if not first.is_leaf:
        a, rest = first.children, kids[1:]
        out.append(PlanarTree(a[:-1] + (PlanarTree((a[-1],) + rest),)))
    return out


def c_up_printed(t: PlanarTree) -> list[PlanarTree]:
    """
    The literal alternative ``((a_0..a_k) b_0..b_h) < (a_0..a_k (b_0..b_h))``,
    kept for comparison with the induced order.
    """
    if t.is_leaf:
        return []
    kids = t.children
    out = _lift(t, c_up_printed)
    first = kids[0]
    if not first.is_leaf and len(kids) >= 3:
        out.append(PlanarTree(first.children + (PlanarTree(kids[1:]),)))
    return out


def _inclusion_up(t: PlanarTree) -> list[PlanarTree]:
    return contractions(t)


_STEPS = {OrderKind.INCLUSION: _inclusion_up, OrderKind.BRUHAT: bruhat_up, OrderKind.C: c_up}


@lru_cache(maxsize=None)
def _build_tree_order(n: int, kind: OrderKind) -> HasseDiagram[PlanarTree]:
    elems = list(_trees(n))
    step = _STEPS[kind]
    return HasseDiagram(elems, ((t, s) for t in elems for s in step(t)))


def build_tree_order(n: int, kind: OrderKind = OrderKind.BRUHAT, cap: int | None = None) -> HasseDiagram[PlanarTree]:
    check_cap(n, cap)
    return _build_tree_order(n, kind)


def tree_order_from_steps(n: int, step) -> HasseDiagram[PlanarTree]:
    elems = list(_trees(n))
    return HasseDiagram(elems, ((t, s) for t in elems for s in step(t)))


# -- grafting ----------------------------------------------------------------


def graft(t: PlanarTree, j: int, z: PlanarTree) -> PlanarTree:
    """Replace leaf ``j`` of ``z`` (leaves numbered from 0) by ``t``."""
    if not 0 <= j <= z.degree:
        raise LeafIndexOutOfRange(f"leaf {j} outside 0..{z.degree}")

    def go(s: PlanarTree, j: int) -> PlanarTree:
        if s.is_leaf:
            return t
        kids = list(s.children)
        for i, c in enumerate(kids):
            if j <= c.degree:
                kids[i] = go(c, j)
                return PlanarTree(tuple(kids))
            j -= c.degree + 1
        raise AssertionError("leaf index walked off the tree")

    return go(z, j)


def over(t: PlanarTree, z: PlanarTree) -> PlanarTree:
    """``t`` grafted on the first leaf of ``z``."""
    return graft(t, 0, z)


def under(t: PlanarTree, z: PlanarTree) -> PlanarTree:
    """``z`` grafted on the last leaf of ``t``."""
    return graft(z, t.degree, t)


def to_dot(t: PlanarTree, name: str = "tree") -> str:
    """Graphviz rendering: vertices as points, leaves as short stubs, root at the bottom."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=point];']
    counter = [0]

    def walk(s: PlanarTree) -> str:
        me = f"n{counter[0]}"
        counter[0] += 1
        if s.is_leaf:
            lines.append(f'  {me} [shape=none, label=""];')
        for c in s.children:
            lines.append(f"  {walk(c)} -> {me};")
        return me

    root = walk(t)
    lines.append('  r [shape=none, label=""];')
    lines.append(f"  {root} -> r;")
    lines.append("}")
    return "\n".join(lines) + "\n"
